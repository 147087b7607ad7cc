#include "eptl/intertwiner.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/SVD>

namespace eptl {

namespace {

int wrap(int s, int N) { return ((s - 1) % N + N) % N + 1; }

}  // namespace

SpinVector t_tilde_apply(int i, int j, const SpinVector& x) {
    const int N = x.N;
    if (i < 1 || i > N || j < i + 1 || j > N + i - 1) throw std::invalid_argument("T~ arc out of range");
    const std::uint32_t bi = 1u << (wrap(i, N) - 1), bj = 1u << (wrap(j, N) - 1);
    const LaurentPoly wj = LaurentPoly::monomial(1, j - i), wi = LaurentPoly::monomial(-1, i - j);
    SpinVector y;
    y.N = N;
    for (const auto& [m, c] : x.coords) {
        if (m & bj) y.coords[m ^ bj] += wj * c;
        if (m & bi) y.coords[m ^ bi] += wi * c;
    }
    for (auto it = y.coords.begin(); it != y.coords.end();) it = it->second.is_zero() ? y.coords.erase(it) : std::next(it);
    return y;
}

SpinVector i_tilde(const LinkState& w) {
    SpinVector x = SpinVector::vacuum(w.n_sites());
    for (auto [i, j] : w.arcs()) x = t_tilde_apply(i, j, x);
    return x;
}

RingMatrix i_matrix(int N, int d) {
    auto basis = enumerate_states(N, d);
    SpinIndex sec(N, d);
    RingMatrix m(sec.size(), static_cast<int>(basis.size()));
    for (std::size_t c = 0; c < basis.size(); ++c) {
        auto col = i_tilde(basis[c]).dense(sec);
        for (int r = 0; r < sec.size(); ++r) m(r, static_cast<int>(c)) = std::move(col[r]);
    }
    m.row_labels = sec.labels();
    m.col_labels = state_labels(basis);
    return m;
}

CheckReport factorization_check(int N, int d) {
    RingMatrix I = i_matrix(N, d);
    RingMatrix Q = I.invert_v().transpose() * I;
    RingMatrix G = gram_matrix_tilde(N, d);
    CheckReport r;
    std::string diff = first_difference(Q, G);
    if (!diff.empty()) {
        r.ok = false;
        r.detail = "N=" + std::to_string(N) + " d=" + std::to_string(d) + " Q vs G at " + diff;
    }
    return r;
}

CheckReport intertwining_check(int N, int d) {
    RingMatrix I = i_matrix(N, d);
    SpinIndex sec(N, d);
    std::vector<Generator> gens;
    for (int i = 1; i <= N; ++i) gens.push_back(Generator::e(i));
    gens.push_back(Generator::omega());
    gens.push_back(Generator::omega_inv());
    CheckReport r;
    for (const auto& g : gens) {
        RingMatrix lhs = I * omega_generator(g, N, d);
        RingMatrix rhs = tau_generator(g, sec) * I;
        std::string diff = first_difference(lhs, rhs);
        if (!diff.empty()) {
            r.ok = false;
            r.detail = "N=" + std::to_string(N) + " d=" + std::to_string(d) + " generator " + g.str() + " at " + diff;
            return r;
        }
    }
    return r;
}

namespace formula {

RingFraction det_gram_open(int N, int d) {
    RingFraction f(LaurentPoly(1));
    for (int k = 1; k <= (N - d) / 2; ++k) {
        long long e = dim_open(N, d + 2 * k);
        f *= RingFraction(trig::S(d + k + 1), trig::S(k)).pow(static_cast<unsigned>(e));
    }
    return f;
}

LaurentPoly det_gram_tilde(int N, int d) {
    LaurentPoly p(1);
    const int h = (N - d) / 2;
    LaurentPoly a2 = trig::alpha(N) * trig::alpha(N);
    for (int k = 1; k <= h; ++k) p *= (a2 - trig::four_C_sq(2 * k + d)).pow(static_cast<unsigned>(binom(N, h - k)));
    return p;
}

LaurentPoly det_intertwiner(int N, int d) {
    LaurentPoly p(1);
    const int h = (N - d) / 2;
    for (int k = 1; k <= h; ++k) p *= trig::bracket(2 * k + d, N).pow(static_cast<unsigned>(binom(N, h - k)));
    return p;
}

long long X1(int N, int d) { return binom(N, (N - d) / 2) * ((N - d) / 2); }

long long X2(int N, int d) {
    long long s = 0;
    for (int t = 0; t < (N - d) / 2; ++t) s += N * binom(N, t);
    return s;
}

}  // namespace formula

double min_singular_value(const NumMatrix& m) {
    if (m.size() == 0) return std::numeric_limits<double>::infinity();
    double scale = m.cwiseAbs().maxCoeff();
    if (scale == 0) return 0;
    Eigen::BDCSVD<NumMatrix> svd(m / scale);
    return svd.singularValues().minCoeff();
}

CriticalSample critical_sample(int N, int d, const RingMatrix& I, double lambda, double mu, double tol) {
    CriticalSample s;
    s.lambda = lambda;
    s.mu = mu;
    const double Lam = M_PI - lambda;
    s.min_bracket = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= (N - d) / 2; ++k) {
        double b = std::abs(std::sin(Lam * (k + 0.5 * d) - mu * N));
        if (b < s.min_bracket) s.min_bracket = b;
        if (b < tol && !s.predicted) {
            s.predicted = true;
            s.which_k = k;
        }
    }
    NumericPoint pt{lambda, mu};
    s.min_singular_value = min_singular_value(I.eval(pt.u(), pt.v()));
    return s;
}

CriticalSample critical_sample(int N, int d, double lambda, double mu, double tol) {
    return critical_sample(N, d, i_matrix(N, d), lambda, mu, tol);
}

}  // namespace eptl
