#include <doctest.h>
#include "eptl/spinrep.hpp"
#include "eptl/verify.hpp"
#include "helpers.hpp"

using namespace eptl;
using th::beta;

namespace {
RingMatrix commutator(const RingMatrix& a, const RingMatrix& b) { return a * b - b * a; }
}

TEST_CASE("sector indexing") {
    SpinIndex s(6, 2);
    CHECK(s.size() == 15);
    for (int k = 0; k < s.size(); ++k) {
        CHECK(__builtin_popcount(s.config(k)) == 4);
        CHECK(s.index(s.config(k)) == k);
        CHECK(parse_spin_label(spin_label(s.config(k), 6)) == s.config(k));
    }
    CHECK(s.index(0b111111) == -1);
    CHECK(spin_label(0b0101, 4) == "+-+-");
}

TEST_CASE("ebar squares to beta ebar in every sector") {
    for (int N = 2; N <= 8; ++N)
        for (int d = N % 2; d <= N; d += 2) {
            SpinIndex s(N, d);
            for (int i = 1; i <= N; ++i) {
                auto e = ebar_matrix(i, s);
                CHECK(e * e == e.scaled(beta()));
            }
        }
}

TEST_CASE("ebar preserves total spin on the full space") {
    std::mt19937_64 rng(2);
    int N = 5;
    for (int i = 1; i <= N; ++i)
        for (std::uint32_t m = 0; m < (1u << N); ++m) {
            SpinVector x;
            x.N = N;
            x.coords[m] = LaurentPoly(1);
            auto y = ebar_apply(i, x);
            for (auto& [mask, c] : y.coords) CHECK(__builtin_popcount(mask) == __builtin_popcount(m));
        }
}

TEST_CASE("Omegabar conjugates ebar_i into ebar_{i-1}") {
    for (int N = 2; N <= 8; ++N)
        for (int d = N % 2; d <= N; d += 2) {
            SpinIndex s(N, d);
            auto om = omegabar_matrix(1, s), omi = omegabar_matrix(-1, s);
            CHECK(om * omi == RingMatrix::identity(s.size()));
            for (int i = 1; i <= N; ++i)
                CHECK(om * ebar_matrix(i, s) * omi == ebar_matrix(i == 1 ? N : i - 1, s));
        }
}

TEST_CASE("the long relation in the spin chain") {
    for (int N = 4; N <= 6; ++N)
        for (int d = N % 2; d <= N; d += 2) {
            SpinIndex s(N, d);
            for (int sign : {1, -1}) {
                auto om = omegabar_matrix(sign, s);
                auto x = om * ebar_matrix(N, s);
                RingMatrix lhs = RingMatrix::identity(s.size()), omN = lhs;
                for (int k = 0; k < N - 1; ++k) lhs = lhs * x;
                for (int k = 0; k < N; ++k) omN = omN * om;
                CHECK(lhs == omN * x);
            }
        }
}

TEST_CASE("E Omegabar E and F Omegabar F") {
    for (int N : {4, 6}) {
        SpinIndex s(N, 0);
        RingMatrix E = RingMatrix::identity(s.size()), F = E;
        for (int i = 2; i <= N; i += 2) E = E * ebar_matrix(i, s);
        for (int i = 1; i < N; i += 2) F = F * ebar_matrix(i, s);
        for (int sign : {1, -1}) {
            auto om = omegabar_matrix(sign, s);
            CHECK(E * om * E == E.scaled(th::alpha(N)));
            CHECK(F * om * F == F.scaled(th::alpha(N)));
        }
    }
}

TEST_CASE("Hamiltonian commutes with translation and is hermitian on the unit circle") {
    for (int N = 2; N <= 7; ++N)
        for (int d = N % 2; d <= N; d += 2) {
            SpinIndex s(N, d);
            auto H = spin_hamiltonian(s);
            CHECK(commutator(H, omegabar_matrix(1, s)).is_zero());
            NumericPoint p{1.1 + 0.1 * N, 0.37 * d - 0.2};
            auto Hn = H.eval(p.u(), p.v());
            CHECK((Hn - Hn.adjoint()).norm() <= 1e-12 * std::max(1.0, Hn.norm()));
        }
}

TEST_CASE("spin relation suite") {
    for (int N = 2; N <= 6; ++N)
        for (int d = N % 2; d <= N; d += 2) {
            auto rep = spin_rep(N, d);
            auto r = relations_check(N, rep, SpinIndex(N, d).size());
            CHECK_MESSAGE(r.ok, r.detail);
        }
}

TEST_CASE("all-up vector is killed by every ebar") {
    for (int N = 2; N <= 6; ++N) {
        auto x = SpinVector::vacuum(N);
        for (int i = 1; i <= N; ++i) CHECK(ebar_apply(i, x).coords.empty());
    }
}

TEST_CASE("sparse and dense actions agree") {
    int N = 5, d = 1;
    SpinIndex s(N, d);
    for (int k = 0; k < s.size(); ++k) {
        SpinVector x;
        x.N = N;
        x.coords[s.config(k)] = LaurentPoly(1);
        for (int i = 1; i <= N; ++i) {
            auto y = ebar_apply(i, x).dense(s);
            auto m = ebar_matrix(i, s);
            for (int r = 0; r < s.size(); ++r) CHECK(y[r] == m(r, k));
        }
        auto y = omegabar_apply(1, x).dense(s);
        auto m = omegabar_matrix(1, s);
        for (int r = 0; r < s.size(); ++r) CHECK(y[r] == m(r, k));
    }
}
