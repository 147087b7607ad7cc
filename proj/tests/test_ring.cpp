#include <doctest.h>
#include <nlohmann/json.hpp>
#include "helpers.hpp"

using namespace eptl;
using th::alpha;
using th::beta;

TEST_CASE("beta squared expands binomially") {
    LaurentPoly expect = LaurentPoly::u(4) + LaurentPoly(2) + LaurentPoly::u(-4);
    CHECK(beta() * beta() == expect);
}

TEST_CASE("zero is the additive identity and cancels") {
    LaurentPoly p = beta() * th::v(3) - LaurentPoly::u(-1);
    CHECK(p + LaurentPoly() == p);
    CHECK((p - p).is_zero());
    CHECK(LaurentPoly(0).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 50; ++k) {
        auto a = th::random_poly(rng), b = th::random_poly(rng), c = th::random_poly(rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a.invert_v().invert_v() == a);
        CHECK((a * b).invert_v() == a.invert_v() * b.invert_v());
        if (!b.is_zero()) CHECK((a * b).exact_div(b) == a);
    }
}

TEST_CASE("exact division reports non-divisibility") {
    LaurentPoly q;
    CHECK_FALSE((beta() + LaurentPoly(1)).try_div(beta(), q));
    CHECK_THROWS_AS((beta() + LaurentPoly(1)).exact_div(beta()), std::domain_error);
}

TEST_CASE("gaussian rationals") {
    GaussRat i = GaussRat::I();
    CHECK(i * i == GaussRat(-1));
    GaussRat z(mpq_class(3, 4), mpq_class(-2, 5));
    CHECK((z * z.inverse()).is_one());
    CHECK(z.conj().conj() == z);
}

TEST_CASE("pow and substitution") {
    CHECK(beta().pow(0) == LaurentPoly(1));
    CHECK(beta().pow(3) == beta() * beta() * beta());
    CHECK(alpha(3).subst_v(2) == alpha(6));
    CHECK(th::v(5).shifted(1, -5) == th::u(1));
}

TEST_CASE("evaluation on the unit circle") {
    NumericPoint p{M_PI / 3, 0.4};
    CHECK(std::abs(beta().eval(p.u(), p.v()) - cplx(1.0, 0)) < 1e-14);
    CHECK(std::abs(alpha(5).eval(p.u(), p.v()) - cplx(2 * std::cos(5 * 0.4), 0)) < 1e-14);
    CHECK(LaurentPoly().eval(p.u(), p.v()) == cplx(0, 0));
}

TEST_CASE("beta is minus twice C_1") {
    CHECK(beta() == -(trig::C(1) * GaussRat(2)));
    NumericPoint p{0.9, 0.2};
    double Lambda = M_PI - p.lambda;
    for (int k = 1; k <= 5; ++k) {
        CHECK(std::abs(trig::S(k).eval(p.u(), p.v()) - std::sin(k * Lambda)) < 1e-13);
        CHECK(std::abs(trig::C(k).eval(p.u(), p.v()) - std::cos(k * Lambda)) < 1e-13);
    }
}

TEST_CASE("bracket at zero is v^N - v^-N") {
    for (int N = 1; N <= 6; ++N) CHECK(trig::bracket(0, N) == th::v(N) - th::v(-N));
}

TEST_CASE("bracket product identity") {
    // <x><-x> = alpha^2 - 4 C_x^2 for half-integer x
    for (int N = 1; N <= 8; ++N)
        for (int d = 0; d <= 3; ++d)
            for (int k = 0; k <= 4; ++k) {
                int two_x = 2 * k + d;
                CHECK(trig::bracket(two_x, N) * trig::bracket(-two_x, N) ==
                      alpha(N) * alpha(N) - trig::four_C_sq(two_x));
            }
    // the N = 4, x = 2 instance written out by hand
    LaurentPoly C2 = (th::u(4) + th::u(-4)) * GaussRat(mpq_class(1, 2), 0);
    LaurentPoly lhs = alpha(4) * alpha(4) - C2 * C2 * GaussRat(4);
    CHECK(lhs == trig::bracket(4, 4) * trig::bracket(-4, 4));
}

TEST_CASE("half-integer powers of -u^2") {
    CHECK(trig::minus_u2_pow(2) == -th::u(2));
    CHECK(trig::minus_u2_pow(1) * trig::minus_u2_pow(1) == -th::u(2));
    CHECK(trig::minus_u2_pow(3) * trig::minus_u2_pow(-3) == LaurentPoly(1));
}

TEST_CASE("polynomial json round trip") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 20; ++k) {
        auto p = th::random_poly(rng) * LaurentPoly(GaussRat(mpq_class(1, 3), mpq_class(2, 7)));
        CHECK(LaurentPoly::from_json(p.to_json()) == p);
    }
}

TEST_CASE("fractions") {
    RingFraction a(beta(), trig::S(2));
    RingFraction b(alpha(2), trig::S(1));
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a);
    CHECK((a / b) * b == a);
    CHECK(RingFraction(-beta(), trig::S(2)).equal_up_to_sign(a));
    CHECK(a.pow(2) == a * a);
}
