#include <doctest.h>
#include <nlohmann/json.hpp>
#include "eptl/linkrep.hpp"
#include "eptl/verify.hpp"

using namespace eptl;

TEST_CASE("link relation suite") {
    for (int N = 2; N <= 6; ++N)
        for (int d = N % 2; d <= N; d += 2) {
            auto r = relations_check(N, link_rep(N, d), static_cast<int>(enumerate_states(N, d).size()));
            CHECK_MESSAGE(r.ok, "N=" << N << " d=" << d << " " << r.detail);
        }
}

TEST_CASE("a wrong representation is caught") {
    int N = 4, d = 0;
    auto good = link_rep(N, d);
    RepFn bad = [&](const Generator& g) {
        auto m = good(g);
        if (g.kind == GenKind::E && g.index == 2) m(0, 0) += LaurentPoly(1);
        return m;
    };
    CHECK_FALSE(relations_check(N, bad, 6).ok);
}

TEST_CASE("units of Q(i)") {
    auto p = trig::beta() + LaurentPoly::v(3);
    CHECK(unit_between(p, p) == 0);
    CHECK(unit_between(p * GaussRat::I(), p) == 1);
    CHECK(unit_between(-p, p) == 2);
    CHECK(unit_between(p * GaussRat(0, -1), p) == 3);
    CHECK(unit_between(p * GaussRat(2), p) == -1);
}

TEST_CASE("determinant checks, small sizes") {
    for (int N = 1; N <= 5; ++N)
        for (int d = N % 2; d <= N; d += 2) {
            auto g = det_gram_check(N, d);
            CHECK_MESSAGE(g.ok, g.detail);
            auto i = det_intertwiner_check(N, d);
            CHECK_MESSAGE(i.ok, i.detail);
        }
    auto n = det_intertwiner_numeric_check(7, 1, 0, 3, 1e-8);
    CHECK_MESSAGE(n.ok, n.detail);
    auto m = det_gram_numeric_check(7, 3, 0, 3, 1e-8);
    CHECK_MESSAGE(m.ok, m.detail);
    CHECK(open_gram_example_check().ok);
}

TEST_CASE("spectra of the two Hamiltonians") {
    auto s = spectrum_compare(4, 2, M_PI / 3, 0.3);
    CHECK(s.max_deviation < 1e-8);
    CHECK_FALSE(s.critical);
    CHECK(s.link.size() == 4);

    auto t = spectrum_compare(4, 4, 0.9, 0.2);
    REQUIRE(t.link.size() == 1);
    CHECK(std::abs(t.link[0]) < 1e-14);
    CHECK(std::abs(t.spin[0]) < 1e-14);

    CHECK(spectrum_compare(4, 2, M_PI / 2, M_PI / 4).critical);
}

TEST_CASE("suites run clean at small bounds and reject bad input") {
    VerifyOptions opt;
    opt.n_max = 4;
    for (auto& s : suite_names()) {
        auto r = run_suite(s, opt);
        CHECK_MESSAGE(r.ok(), s);
        CHECK(r.cases > 0);
        auto j = r.to_json();
        CHECK(j.at("suite") == s);
        CHECK(j.at("failures").size() == 0);
    }
    opt.n_max = 11;
    CHECK_THROWS_AS(run_suite("gram", opt), std::invalid_argument);
    opt.n_max = 4;
    CHECK_THROWS_AS(run_suite("nonsense", opt), std::invalid_argument);
}

TEST_CASE("parallel runs report the same result") {
    VerifyOptions a, b;
    a.n_max = b.n_max = 5;
    a.seed = b.seed = 9;
    b.threads = 3;
    auto ra = run_suite("transfer", a), rb = run_suite("transfer", b);
    CHECK(ra.cases == rb.cases);
    auto ja = ra.to_json(), jb = rb.to_json();
    ja.erase("seconds");
    jb.erase("seconds");
    CHECK(ja == jb);
}
