#include <doctest.h>
#include <tuple>
#include "eptl/diagrams.hpp"

using namespace eptl;

namespace {
// Endpoint indices: bottom site s is s-1, top site s is N+s-1.
struct Builder {
    int N;
    int B(int s) const { return s - 1; }
    int T(int s) const { return N + s - 1; }
    AffineDiagram make(const std::vector<std::tuple<int, int, int>>& links) const {
        std::vector<int> partner(2 * N, -1), disp(2 * N, 0);
        for (auto [a, b, k] : links) {
            partner[a] = b;
            partner[b] = a;
            disp[a] = k;
            disp[b] = -k;
        }
        return AffineDiagram(N, partner, disp);
    }
};

AffineDiagram word(const std::string& s, int N) { return AffineDiagram::from_word(parse_word(s), N); }

// The eight-site diagram used both as a product factor and for the action examples.
AffineDiagram action_diagram() {
    Builder b{8};
    return b.make({{b.B(3), b.B(4), 1}, {b.B(5), b.B(6), 1}, {b.B(2), b.B(7), 5}, {b.T(8), b.T(1), 1},
                   {b.T(7), b.T(2), 3}, {b.T(5), b.T(6), 1}, {b.T(3), b.B(1), -2}, {b.T(4), b.B(8), 4}});
}
}  // namespace

TEST_CASE("identity connects bottom k to top k without winding") {
    auto id = AffineDiagram::identity(5);
    for (int p = 0; p < 5; ++p) {
        CHECK(id.partner(p) == p + 5);
        CHECK(id.winding(p) == 0);
    }
    CHECK(id.through_lines() == 5);
}

TEST_CASE("e_N wraps around the seam") {
    auto e4 = AffineDiagram::generator(Generator::e(4), 4);
    CHECK(e4.partner(3) == 0);
    CHECK(e4.partner(7) == 4);
    CHECK(std::abs(e4.winding(3)) == 1);
    CHECK(std::abs(e4.winding(7)) == 1);
    CHECK(e4.through_lines() == 2);
}

TEST_CASE("generator relations at the diagram level") {
    for (int N = 2; N <= 7; ++N) {
        auto id = AffineDiagram::identity(N);
        auto om = AffineDiagram::generator(Generator::omega(), N);
        auto omi = AffineDiagram::generator(Generator::omega_inv(), N);
        CHECK(om * omi == id);
        CHECK(omi * om == id);
        for (int i = 1; i <= N; ++i) {
            auto e = AffineDiagram::generator(Generator::e(i), N);
            auto ee = e * e;
            CHECK(ee.same_connectivity(e));
            CHECK(ee.loop_beta() == 1);
            CHECK(ee.loop_alpha() == 0);
            int prev = i == 1 ? N : i - 1;
            CHECK(om * e * omi == AffineDiagram::generator(Generator::e(prev), N));
            if (N >= 3) {
                int next = i % N + 1;
                auto en = AffineDiagram::generator(Generator::e(next), N);
                CHECK(e * en * e == e);
            }
        }
        AffineDiagram omN = id, omNi = id;
        for (int k = 0; k < N; ++k) {
            omN = omN * om;
            omNi = omNi * omi;
        }
        auto eN = AffineDiagram::generator(Generator::e(N), N);
        CHECK(omN * eN * omNi == eN);
    }
}

TEST_CASE("composition is associative") {
    int N = 6;
    std::vector<AffineDiagram> g;
    for (int i = 1; i <= N; ++i) g.push_back(AffineDiagram::generator(Generator::e(i), N));
    g.push_back(AffineDiagram::generator(Generator::omega(), N));
    g.push_back(AffineDiagram::generator(Generator::omega_inv(), N));
    for (auto& a : g)
        for (auto& b : g)
            for (auto& c : g) CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("E Omega E gives one non-contractible loop") {
    for (int N : {4, 6}) {
        std::string es, fs;
        for (int i = 2; i <= N; i += 2) es += "e" + std::to_string(i) + " ";
        for (int i = 1; i < N; i += 2) fs += "e" + std::to_string(i) + " ";
        for (std::string om : {"omega", "omega^-1"}) {
            auto E = word(es, N), F = word(fs, N);
            auto EOE = word(es + om + " " + es, N);
            auto FOF = word(fs + om + " " + fs, N);
            CHECK(EOE.same_connectivity(E));
            CHECK(EOE.loop_alpha() == 1);
            CHECK(EOE.loop_beta() == 0);
            CHECK(FOF.same_connectivity(F));
            CHECK(FOF.loop_alpha() == 1);
        }
    }
}

TEST_CASE("product of two eight-site connectivities gives alpha^2 beta") {
    Builder b{8};
    auto lower = b.make({{b.T(3), b.T(4), 1}, {b.T(8), b.T(1), 1}, {b.T(7), b.T(2), 3}, {b.T(6), b.T(5), 7},
                         {b.B(1), b.B(2), 1}, {b.B(4), b.B(5), 1}, {b.B(7), b.B(8), 1}, {b.B(3), b.B(6), 3}});
    auto result = b.make({{b.T(5), b.T(6), 1}, {b.T(8), b.T(1), 1}, {b.T(7), b.T(2), 3}, {b.T(3), b.T(4), -7},
                          {b.B(1), b.B(2), 1}, {b.B(4), b.B(5), 1}, {b.B(7), b.B(8), 1}, {b.B(3), b.B(6), 3}});
    auto prod = lower * action_diagram();
    CHECK(prod.loop_alpha() == 2);
    CHECK(prod.loop_beta() == 1);
    CHECK(prod.same_connectivity(result));
}

TEST_CASE("action on eight-site states") {
    auto D = action_diagram();
    auto r1 = act_on_link(D, LinkState::from_arcs(8, {{1, 2}, {5, 6}, {7, 8}}));
    REQUIRE(r1);
    CHECK(r1->weight.n_beta == 2);
    CHECK(r1->weight.n_alpha == 0);
    CHECK(r1->weight.delta == -2);
    CHECK(r1->state == LinkState::from_arcs(8, {{2, 7}, {3, 4}, {5, 6}}));

    CHECK_FALSE(act_on_link(D, LinkState::from_arcs(8, {{1, 2}, {7, 8}})));

    auto r3 = act_on_link(D, LinkState::from_arcs(8, {{1, 8}, {2, 7}, {3, 4}, {5, 6}}));
    REQUIRE(r3);
    CHECK(r3->weight.n_alpha == 2);
    CHECK(r3->weight.n_beta == 1);
}

TEST_CASE("joined defects can be dropped instead") {
    auto D = action_diagram();
    ActOptions opt;
    opt.kill_joined_defects = false;
    auto r = act_on_link(D, LinkState::from_arcs(8, {{1, 2}, {7, 8}}), opt);
    REQUIRE(r);
    CHECK(r->state.n_defects() == 2);
}

TEST_CASE("Omega rotates one step left and collects v^d") {
    for (int N = 2; N <= 7; ++N) {
        auto om = AffineDiagram::generator(Generator::omega(), N);
        for (int d = N % 2; d <= N; d += 2)
            for (auto& w : enumerate_states(N, d)) {
                auto r = act_on_link(om, w);
                REQUIRE(r);
                CHECK(r->weight.delta == d);
                CHECK(r->weight.n_beta == 0);
                CHECK(r->weight.n_alpha == 0);
                for (int s = 1; s <= N; ++s) {
                    int from = s % N + 1;
                    CHECK(r->state.offset(s) == w.offset(from));
                }
            }
    }
}

TEST_CASE("reflection is an involution on every basis") {
    for (int N = 2; N <= 8; ++N)
        for (int d = N % 2; d <= N; d += 2) {
            auto b = enumerate_states(N, d);
            for (auto& w : b) {
                auto m = reflect_state(w);
                CHECK(index_of(b, m) >= 0);
                CHECK(reflect_state(m) == w);
                CHECK(m.r() == w.r());
            }
        }
}

TEST_CASE("word parsing") {
    auto w = parse_word("e1 e3 omega omega^-1 id");
    REQUIRE(w.size() == 5);
    CHECK(w[0].kind == GenKind::E);
    CHECK(w[1].index == 3);
    CHECK(w[2].kind == GenKind::Omega);
    CHECK(w[3].kind == GenKind::OmegaInv);
    CHECK_THROWS(parse_word("f2"));
    CHECK_THROWS(parse_word("ex"));
    CHECK(parse_word("e_3")[0].index == 3);
}
