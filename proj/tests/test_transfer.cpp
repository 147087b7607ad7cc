#include <doctest.h>
#include "eptl/transfer.hpp"

using namespace eptl;

namespace {
double rel(const NumMatrix& a, const NumMatrix& b) { return (a - b).norm() / std::max(1.0, b.norm()); }

NumMatrix omega_num(int N, int d, double lambda, double mu) {
    TransferPoint p{lambda, 0, mu};
    return omega_generator(Generator::omega(), N, d).eval(p.u(), p.v());
}
}  // namespace

TEST_CASE("all identity tiles give Omega, all e tiles give Omega inverse") {
    for (int N = 2; N <= 8; ++N) {
        CHECK(tile_row_diagram(N, std::vector<bool>(N, false)) == AffineDiagram::generator(Generator::omega(), N));
        CHECK(tile_row_diagram(N, std::vector<bool>(N, true)) == AffineDiagram::generator(Generator::omega_inv(), N));
    }
}

TEST_CASE("tile diagram and tile word describe the same element") {
    for (int N = 2; N <= 7; ++N)
        for (unsigned mask = 0; mask < (1u << N); ++mask) {
            std::vector<bool> tiles(N);
            for (int k = 0; k < N; ++k) tiles[k] = (mask >> k) & 1;
            CHECK(tile_row_diagram(N, tiles) == AffineDiagram::from_word(tile_row_word(N, tiles), N));
        }
}

TEST_CASE("nu = 0 leaves sin^N(lambda) Omega") {
    for (auto [N, d] : {std::pair{4, 0}, {4, 2}, {5, 1}, {6, 2}}) {
        double lambda = 0.9, mu = 0.3;
        auto T = transfer_matrix(N, d, {lambda, 0.0, mu});
        CHECK(rel(T, omega_num(N, d, lambda, mu) * std::pow(std::sin(lambda), N)) < 1e-14);
    }
}

TEST_CASE("two constructions of the transfer matrix agree") {
    for (int N = 2; N <= 7; ++N)
        for (int d = N % 2; d <= std::min(N, 3); d += 2) {
            auto r = check_constructions(N, d, {0.8, cplx(0.3, 0.1), 0.45});
            CHECK_MESSAGE(r.ok, "N=" << N << " d=" << d << " " << r.detail);
        }
}

TEST_CASE("commuting family") {
    for (int d : {0, 2}) {
        auto r = check_commute(6, d, 1.1, 0.27, cplx(0.8, -0.2), 0.35);
        CHECK_MESSAGE(r.ok, r.detail);
    }
}

TEST_CASE("translation invariance") {
    for (int N = 3; N <= 7; ++N)
        for (int d = N % 2; d <= 2; d += 2) {
            auto r = check_translate(N, d, {0.7, 0.33, -0.6});
            CHECK_MESSAGE(r.ok, r.detail);
        }
}

TEST_CASE("crossing symmetry") {
    auto r = check_crossing(4, 0, {M_PI / 3, 0.2, 0.3});
    CHECK_MESSAGE(r.ok, r.detail);
    auto r2 = check_crossing(6, 2, {1.3, cplx(0.41, 0.05), 0.7});
    CHECK_MESSAGE(r2.ok, r2.detail);
}

TEST_CASE("crossing fixed point without twist") {
    // at nu = lambda/2 and v = 1 both sides are the same matrix up to conjugation by R
    int N = 5, d = 1;
    double lambda = 1.2;
    auto T = transfer_matrix(N, d, {lambda, lambda / 2, 0.0});
    auto R = reflection_matrix(N, d);
    CHECK(rel(R * T * R, T) < 1e-12);
    CHECK(rel(R * R, NumMatrix::Identity(R.rows(), R.cols())) < 1e-15);
}

TEST_CASE("first order in nu gives the Hamiltonian") {
    auto r = check_expansion(4, 2, M_PI / 3, 0.3);
    CHECK_MESSAGE(r.ok, r.detail);
    auto r2 = check_expansion(5, 1, 0.7, -0.25);
    CHECK_MESSAGE(r2.ok, r2.detail);
}

TEST_CASE("size limits") {
    CHECK_THROWS(transfer_matrix(13, 1, {1.0, 0.2, 0.0}));
    CHECK_THROWS(transfer_matrix(4, 1, {1.0, 0.2, 0.0}));
}
