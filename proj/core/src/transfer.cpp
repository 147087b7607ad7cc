#include "eptl/transfer.hpp"

#include <cmath>
#include <stdexcept>

namespace eptl {

AffineDiagram tile_row_diagram(int N, const std::vector<bool>& e_tiles) {
    if (static_cast<int>(e_tiles.size()) != N) throw std::invalid_argument("need one tile per site");
    // Each chord runs from one tile to a neighbour through their shared edge.
    std::vector<int> partner(2 * N), disp(2 * N);
    auto link = [&](int p, int q, int d) {
        partner[p] = q;
        partner[q] = p;
        disp[p] = d;
        disp[q] = -d;
    };
    auto bottom = [](int k) { return k - 1; };
    auto top = [N](int k) { return N + k - 1; };
    for (int k = 1; k <= N; ++k) {
        const int k1 = k % N + 1;
        // Point leaving tile k to the right, point entering tile k1 from the left.
        const int out = e_tiles[k - 1] ? top(k) : bottom(k);
        const int in = e_tiles[k1 - 1] ? bottom(k1) : top(k1);
        link(out, in, 1);
    }
    return AffineDiagram(N, std::move(partner), std::move(disp));
}

Word tile_row_word(int N, const std::vector<bool>& e_tiles) {
    if (static_cast<int>(e_tiles.size()) != N) throw std::invalid_argument("need one tile per site");
    int first_id = -1;
    for (int k = 1; k <= N; ++k)
        if (!e_tiles[k - 1]) {
            first_id = k;
            break;
        }
    if (first_id < 0) return {Generator::omega_inv()};
    // Omega followed by e_k e_{k+1} ... e_m for each cyclic run k..m of e-tiles.
    Word w{Generator::omega()};
    for (int j = 1; j <= N; ++j) {
        const int k = (first_id + j - 1) % N + 1;
        if (e_tiles[k - 1]) w.push_back(Generator::e(k));
    }
    return w;
}

NumMatrix numeric_action(const AffineDiagram& D, const std::vector<LinkState>& basis, cplx u, cplx v) {
    const int n = static_cast<int>(basis.size()), N = D.n_sites();
    const cplx beta = u * u + 1.0 / (u * u), alpha = std::pow(v, N) + std::pow(v, -N);
    NumMatrix m = NumMatrix::Zero(n, n);
    for (int c = 0; c < n; ++c) {
        auto res = act_on_link(D, basis[c]);
        if (!res) continue;
        const int r = index_of(basis, res->state);
        if (r < 0) throw std::logic_error("action left the basis: " + res->state.str());
        int e = 0;
        for (int x : res->weight.defect_delta) e += x;
        m(r, c) += std::pow(beta, res->weight.n_beta) * std::pow(alpha, res->weight.n_alpha) * std::pow(v, e);
    }
    return m;
}

namespace {

std::vector<bool> config_bits(unsigned mask, int N) {
    std::vector<bool> b(N);
    for (int k = 0; k < N; ++k) b[k] = (mask >> k) & 1u;
    return b;
}

cplx config_weight(unsigned mask, int N, const TransferPoint& p) {
    const cplx a = std::sin(p.lambda - p.nu), b = std::sin(p.nu);
    const int ne = __builtin_popcount(mask);
    return std::pow(a, N - ne) * std::pow(b, ne);
}

void check_size(int N, int d) {
    if (N < 2 || N > 12) throw std::invalid_argument("transfer matrix needs 2 <= N <= 12");
    if (d < 0 || d > N || (N - d) % 2) throw std::invalid_argument("d must match the parity of N");
}

double rel(const NumMatrix& a, const NumMatrix& b) {
    const double s = std::max(a.norm(), b.norm());
    return s == 0 ? 0 : (a - b).norm() / s;
}

TransferReport report(double res, double tol, const std::string& what) {
    TransferReport r;
    r.residual = res;
    r.ok = res <= tol;
    if (!r.ok) r.detail = what + " residual " + std::to_string(res);
    return r;
}

}  // namespace

NumMatrix transfer_matrix(int N, int d, const TransferPoint& p) {
    check_size(N, d);
    auto basis = enumerate_states(N, d);
    const int n = static_cast<int>(basis.size());
    NumMatrix T = NumMatrix::Zero(n, n);
    for (unsigned mask = 0; mask < (1u << N); ++mask) {
        const cplx w = config_weight(mask, N, p);
        if (w == cplx(0)) continue;
        T += w * numeric_action(tile_row_diagram(N, config_bits(mask, N)), basis, p.u(), p.v());
    }
    return T;
}

NumMatrix transfer_matrix_product(int N, int d, const TransferPoint& p) {
    check_size(N, d);
    const cplx u = p.u(), v = p.v();
    std::vector<NumMatrix> e(N + 1);
    for (int i = 1; i <= N; ++i) e[i] = omega_generator(Generator::e(i), N, d).eval(u, v);
    const NumMatrix om = omega_generator(Generator::omega(), N, d).eval(u, v);
    const NumMatrix omi = omega_generator(Generator::omega_inv(), N, d).eval(u, v);
    NumMatrix T = NumMatrix::Zero(om.rows(), om.cols());
    for (unsigned mask = 0; mask < (1u << N); ++mask) {
        const cplx w = config_weight(mask, N, p);
        if (w == cplx(0)) continue;
        NumMatrix m = NumMatrix::Identity(om.rows(), om.cols());
        for (const auto& g : tile_row_word(N, config_bits(mask, N)))
            m = m * (g.kind == GenKind::E ? e[g.index] : g.kind == GenKind::Omega ? om : omi);
        T += w * m;
    }
    return T;
}

NumMatrix reflection_matrix(int N, int d) {
    auto basis = enumerate_states(N, d);
    const int n = static_cast<int>(basis.size());
    NumMatrix R = NumMatrix::Zero(n, n);
    for (int c = 0; c < n; ++c) R(index_of(basis, reflect_state(basis[c])), c) = 1;
    return R;
}

NumMatrix numeric_hamiltonian(int N, int d, double lambda, double mu) {
    NumericPoint pt{lambda, mu};
    return link_hamiltonian(N, d).eval(pt.u(), pt.v());
}

TransferReport check_constructions(int N, int d, const TransferPoint& p, double tol) {
    return report(rel(transfer_matrix(N, d, p), transfer_matrix_product(N, d, p)), tol, "tile expansion vs product");
}

TransferReport check_commute(int N, int d, double lambda, cplx nu1, cplx nu2, double mu, double tol) {
    NumMatrix a = transfer_matrix(N, d, {lambda, nu1, mu}), b = transfer_matrix(N, d, {lambda, nu2, mu});
    const double s = a.norm() * b.norm();
    return report(s == 0 ? 0 : (a * b - b * a).norm() / s, tol, "[T(nu1), T(nu2)]");
}

TransferReport check_translate(int N, int d, const TransferPoint& p, double tol) {
    NumMatrix T = transfer_matrix(N, d, p);
    NumMatrix om = omega_generator(Generator::omega(), N, d).eval(p.u(), p.v());
    const double s = T.norm() * om.norm();
    return report(s == 0 ? 0 : (T * om - om * T).norm() / s, tol, "[T, Omega]");
}

TransferReport check_crossing(int N, int d, const TransferPoint& p, double tol) {
    NumMatrix R = reflection_matrix(N, d);
    TransferPoint q = p, pinv = p;
    q.nu = p.lambda - p.nu;
    pinv.mu = -p.mu;
    NumMatrix lhs = transfer_matrix(N, d, q);
    NumMatrix rhs = R.transpose() * transfer_matrix(N, d, pinv) * R;
    return report(rel(lhs, rhs), tol, "crossing");
}

TransferReport check_expansion(int N, int d, double lambda, double mu, double tol) {
    const double s = std::sin(lambda);
    if (std::abs(s) < 1e-12) throw std::invalid_argument("expansion needs sin(lambda) != 0");
    const NumericPoint pt{lambda, mu};
    const NumMatrix om = omega_generator(Generator::omega(), N, d).eval(pt.u(), pt.v());
    const NumMatrix H = link_hamiltonian(N, d).eval(pt.u(), pt.v());
    const int n = static_cast<int>(om.rows());
    NumMatrix expect = std::pow(s, N) * om * (-N * std::cos(lambda) / s * NumMatrix::Identity(n, n) + H / s);
    auto diff = [&](double h) {
        return NumMatrix((transfer_matrix(N, d, {lambda, h, mu}) - transfer_matrix(N, d, {lambda, -h, mu})) / (2 * h));
    };
    const double h = 1e-3;
    NumMatrix D = (4.0 * diff(h / 2) - diff(h)) / 3.0;
    return report(rel(D, expect), tol, "first order in nu");
}

}  // namespace eptl
