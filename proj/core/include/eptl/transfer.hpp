#pragma once

#include <string>
#include <vector>

#include "eptl/check.hpp"
#include "eptl/linkrep.hpp"

namespace eptl {

// beta = 2 cos(lambda), alpha = 2 cos(mu N), twist v = e^{i mu}.
struct TransferPoint {
    double lambda = 0;
    cplx nu = 0;
    double mu = 0;
    cplx u() const { return std::polar(1.0, lambda / 2); }
    cplx v() const { return std::polar(1.0, mu); }
};

// One row of N tiles on the cylinder. Tile k is an e-tile when e_tiles[k-1] is set:
//   identity tile: left-top and bottom-right joined, weight sin(lambda - nu)
//   e-tile:        bottom-left and top-right joined, weight sin(nu)
// The right edge of tile N is glued to the left edge of tile 1.
AffineDiagram tile_row_diagram(int N, const std::vector<bool>& e_tiles);
// The same connectivity as a word in Omega^{+-1} and the e_i.
Word tile_row_word(int N, const std::vector<bool>& e_tiles);

// omega_d(D) evaluated at (u, v) without building the symbolic matrix.
NumMatrix numeric_action(const AffineDiagram& D, const std::vector<LinkState>& basis, cplx u, cplx v);

// Sum over the 2^N tile configurations, each traced as a diagram.
NumMatrix transfer_matrix(int N, int d, const TransferPoint& p);
// Same sum with each configuration taken as a product of generator matrices.
NumMatrix transfer_matrix_product(int N, int d, const TransferPoint& p);
// Left-right reflection of link states, site i to N+1-i.
NumMatrix reflection_matrix(int N, int d);
NumMatrix numeric_hamiltonian(int N, int d, double lambda, double mu);

struct TransferReport {
    bool ok = true;
    double residual = 0;  // relative
    std::string detail;
};

TransferReport check_constructions(int N, int d, const TransferPoint& p, double tol = 1e-12);
TransferReport check_commute(int N, int d, double lambda, cplx nu1, cplx nu2, double mu, double tol = 1e-9);
TransferReport check_translate(int N, int d, const TransferPoint& p, double tol = 1e-9);
// T_v(lambda, lambda - nu) = R^-1 T_{v^-1}(lambda, nu) R; the reflection reverses the twist.
TransferReport check_crossing(int N, int d, const TransferPoint& p, double tol = 1e-9);
// dT/dnu at 0 against Omega sin^N(lambda) (-N cot(lambda) id + H / sin(lambda)).
TransferReport check_expansion(int N, int d, double lambda, double mu, double tol = 1e-5);

}  // namespace eptl
