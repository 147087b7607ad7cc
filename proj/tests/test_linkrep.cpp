#include <doctest.h>
#include <nlohmann/json.hpp>
#include "eptl/linkrep.hpp"
#include "oracles.hpp"

using namespace eptl;
using th::alpha;
using th::beta;
using th::v;

namespace {
LinkState arcs(int N, std::vector<std::pair<int, int>> a) { return LinkState::from_arcs(N, a); }
}

TEST_CASE("Gram pairings of ten-site states") {
    auto g1 = arcs(10, {{2, 9}, {3, 6}, {4, 5}, {7, 8}});
    auto g2 = arcs(10, {{3, 4}, {5, 8}, {6, 7}, {9, 10}});
    auto g3 = arcs(10, {{1, 6}, {2, 5}, {3, 4}, {9, 10}});
    CHECK(gram_pair(g1, g2) == beta() * v(8));
    CHECK(gram_pair(g2, g1) == beta() * v(-8));
    CHECK(gram_pair(g1, g3).is_zero());

    auto h1 = arcs(10, {{2, 3}, {4, 7}, {5, 6}, {8, 9}, {10, 11}});
    auto h2 = arcs(10, {{2, 3}, {6, 15}, {7, 14}, {8, 9}, {10, 11}});
    CHECK(gram_pair(h1, h2) == alpha(10).pow(2) * beta().pow(3));
}

TEST_CASE("periodic Gram matrix on four sites") {
    auto& o = oracle::link_order_4_0;
    CHECK(first_difference(gram_matrix_tilde(4, 0).permuted(o, o), oracle::gram_4_0()) == "");
}

TEST_CASE("open Gram matrix on five sites with one twisted defect") {
    auto& o = oracle::open_order_5_1;
    auto G = gram_matrix_open(5, 1, Twist::single(1));
    CHECK(first_difference(G.permuted(o, o), oracle::open_gram_5_1()) == "");
}

TEST_CASE("all-defect Gram matrix is one") {
    for (int N = 1; N <= 6; ++N) CHECK(gram_matrix_tilde(N, N) == RingMatrix::identity(1));
}

TEST_CASE("Gram matrix transposes into its v-inverse") {
    for (int N = 2; N <= 7; ++N)
        for (int d = N % 2; d <= N; d += 2) {
            auto G = gram_matrix_tilde(N, d);
            CHECK(G.transpose() == G.invert_v());
        }
}

TEST_CASE("the form is invariant under the generators") {
    // <x | c y> = <c* x | y> with e_i* = e_i and Omega* = Omega^-1
    for (int N = 2; N <= 6; ++N)
        for (int d = N % 2; d <= N; d += 2) {
            auto G = gram_matrix_tilde(N, d);
            for (int i = 1; i <= N; ++i) {
                auto e = omega_generator(Generator::e(i), N, d);
                CHECK(G * e == e.transpose().invert_v() * G);
            }
            auto om = omega_generator(Generator::omega(), N, d);
            auto omi = omega_generator(Generator::omega_inv(), N, d);
            CHECK(G * om == omi.transpose().invert_v() * G);
        }
}

TEST_CASE("e_i squares to beta e_i") {
    for (int N = 2; N <= 8; ++N)
        for (int d = N % 2; d <= N; d += 2)
            for (int i = 1; i <= N; ++i) {
                auto e = omega_generator(Generator::e(i), N, d);
                CHECK(e * e == e.scaled(beta()));
            }
}

TEST_CASE("E Omega E is alpha E without defects") {
    for (int N : {4, 6}) {
        std::string es;
        for (int i = 2; i <= N; i += 2) es += "e" + std::to_string(i) + " ";
        auto E = omega_matrix(parse_word(es), N, 0);
        for (std::string om : {"omega", "omega^-1"})
            CHECK(omega_matrix(parse_word(es + om + " " + es), N, 0) == E.scaled(alpha(N)));
    }
}

TEST_CASE("word matrices agree with products of generator matrices") {
    std::mt19937_64 rng(3);
    for (int N = 2; N <= 6; ++N)
        for (int d = N % 2; d <= N; d += 2)
            for (int t = 0; t < 10; ++t) {
                Word w;
                std::uniform_int_distribution<int> g(0, N + 1);
                for (int k = 0; k < 6; ++k) {
                    int c = g(rng);
                    w.push_back(c < N ? Generator::e(c + 1) : c == N ? Generator::omega() : Generator::omega_inv());
                }
                CHECK(omega_matrix(w, N, d) == omega_matrix_product(w, N, d));
            }
}

TEST_CASE("identity word gives the identity matrix") {
    CHECK(omega_matrix(parse_word("id"), 5, 1) == RingMatrix::identity(10));
}

TEST_CASE("Omega carries v^d on every column") {
    for (int N = 2; N <= 7; ++N)
        for (int d = N % 2; d <= N; d += 2) {
            auto om = omega_generator(Generator::omega(), N, d);
            for (int c = 0; c < om.cols(); ++c) {
                int nz = 0;
                for (int r = 0; r < om.rows(); ++r)
                    if (!om(r, c).is_zero()) {
                        ++nz;
                        CHECK(om(r, c) == v(d));
                    }
                CHECK(nz == 1);
            }
        }
}

TEST_CASE("matrix json round trip keeps labels") {
    auto G = gram_matrix_tilde(4, 2);
    G.row_labels = state_labels(enumerate_states(4, 2));
    auto back = RingMatrix::from_json(G.to_json());
    CHECK(back == G);
    CHECK(back.row_labels == G.row_labels);
}

TEST_CASE("dense apply") {
    auto e = omega_generator(Generator::e(1), 4, 0);
    LinkVector x(6, LaurentPoly(0));
    x[0] = LaurentPoly(1);
    auto y = eptl::apply(e, x);
    CHECK(y[0] == beta());
}
