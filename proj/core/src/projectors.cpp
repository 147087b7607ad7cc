#include "eptl/projectors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "eptl/determinant.hpp"

namespace eptl {

AffineDiagram bridge_generator(int N, int a, int b) {
    if (a < 1 || b > N || b <= a) throw std::invalid_argument("bridge needs 1 <= a < b <= N");
    std::vector<int> partner(2 * N), disp(2 * N, 0);
    auto link = [&](int p, int q, int d) {
        partner[p] = q;
        partner[q] = p;
        disp[p] = d;
        disp[q] = -d;
    };
    for (int s = 0; s < N; ++s)
        if (s != a - 1 && s != b - 1) link(s, N + s, 0);
    link(a - 1, b - 1, b - a);
    link(N + a - 1, N + b - 1, b - a);
    return AffineDiagram(N, std::move(partner), std::move(disp));
}

TLWord TLWord::wenzl_jones(int n) {
    if (n < 1) throw std::invalid_argument("projector needs n >= 1");
    TLWord p;
    p.n_ = n;
    for (int m = 1; m < n; ++m)
        for (int k = m; k >= 1; --k) {
            p.factors_.push_back(k);
            p.coef_.push_back(k);
            p.den_ *= trig::S(k + 1);
        }
    return p;
}

TLWord TLWord::reversed() const {
    TLWord p = *this;
    std::reverse(p.factors_.begin(), p.factors_.end());
    std::reverse(p.coef_.begin(), p.coef_.end());
    return p;
}

TLWord TLWord::mirrored() const {
    TLWord p = *this;
    for (int& k : p.factors_) k = n_ - k;
    return p;
}

std::vector<TLWord::Entry> TLWord::expand() const {
    if (factors_.size() > 20) throw std::invalid_argument("expansion too large");
    const LaurentPoly beta = trig::beta();
    std::map<std::vector<int>, LaurentPoly> acc{{{}, LaurentPoly(1)}};
    for (std::size_t f = 0; f < factors_.size(); ++f) {
        const int k = factors_[f], j = coef_[f];
        std::map<std::vector<int>, LaurentPoly> next;
        for (const auto& [w, c] : acc) {
            next[w] += c * trig::S(j + 1);
            auto w2 = w;
            LaurentPoly c2 = c * trig::S(j);
            if (!w2.empty() && w2.back() == k) c2 *= beta;
            else w2.push_back(k);
            next[w2] += c2;
        }
        acc.clear();
        for (auto& [w, c] : next)
            if (!c.is_zero()) acc.emplace(w, std::move(c));
    }
    std::vector<Entry> out;
    for (const auto& [w, c] : acc) out.push_back({RingFraction(c, den_), w});
    return out;
}

LazyAction::LazyAction(AffineDiagram D, const std::vector<LinkState>& basis, Twist tw)
    : D_(std::move(D)), basis_(&basis), tw_(std::move(tw)), done_(basis.size(), 0), row_(basis.size(), -1),
      weight_(basis.size()) {}

std::pair<int, const LaurentPoly*> LazyAction::image(int c) const {
    if (!done_[c]) {
        done_[c] = 1;
        auto res = act_on_link(D_, (*basis_)[c]);
        if (res) {
            int r = index_of(*basis_, res->state);
            if (r < 0) throw std::logic_error("action left the basis: " + res->state.str());
            row_[c] = r;
            weight_[c] = loop_weight(res->weight.n_beta, res->weight.n_alpha, tw_.exponent(res->weight.defect_delta),
                                     D_.n_sites());
        }
    }
    return {row_[c], &weight_[c]};
}

LinkVector apply_tlword(const TLWord& p, const std::vector<LazyAction>& gens, LinkVector x) {
    const auto& f = p.factors();
    for (std::size_t i = f.size(); i-- > 0;) {
        const int k = f[i], j = p.coefficients()[i];
        const LaurentPoly sk1 = trig::S(j + 1), sk = trig::S(j);
        LinkVector y(x.size());
        for (std::size_t c = 0; c < x.size(); ++c) {
            if (x[c].is_zero()) continue;
            y[c] += sk1 * x[c];
            auto [r, w] = gens[k - 1].image(static_cast<int>(c));
            if (r >= 0) y[r] += sk * (*w) * x[c];
        }
        x = std::move(y);
    }
    return x;
}

RingMatrix wj_matrix(const TLWord& word, int N, int d, int start, const Twist& tw) {
    const int n = word.n();
    if (start < 1 || start + n - 1 > N) throw std::invalid_argument("projector window outside the chain");
    auto basis = enumerate_states(N, d);
    std::vector<LazyAction> gens;
    for (int k = 1; k < n; ++k) gens.emplace_back(AffineDiagram::generator(Generator::e(start + k - 1), N), basis, tw);
    const int dim = static_cast<int>(basis.size());
    RingMatrix m(dim, dim);
    for (int c = 0; c < dim; ++c) {
        LinkVector x(dim);
        x[c] = LaurentPoly(1);
        x = apply_tlword(word, gens, std::move(x));
        for (int r = 0; r < dim; ++r) m(r, c) = std::move(x[r]);
    }
    m.row_labels = m.col_labels = state_labels(basis);
    return m;
}

std::pair<RingMatrix, LaurentPoly> wj_matrix_recursive(int n, int N, int d, int start) {
    if (start < 1 || start + n - 1 > N) throw std::invalid_argument("projector window outside the chain");
    auto basis = enumerate_states(N, d);
    const int dim = static_cast<int>(basis.size());
    RingMatrix A = RingMatrix::identity(dim);
    LaurentPoly D(1);
    for (int m = 2; m <= n; ++m) {
        RingMatrix E = omega_on_basis(AffineDiagram::generator(Generator::e(start + m - 2), N), basis);
        A = A.scaled(trig::S(m) * D) + (A * E * A).scaled(trig::S(m - 1));
        D = trig::S(m) * D * D;
    }
    A.row_labels = A.col_labels = state_labels(basis);
    return {A, D};
}

namespace {

// Sites kept by the change of basis: defects and endpoints of seam-crossing arcs.
std::vector<int> remaining_sites(const LinkState& w) {
    const int N = w.n_sites();
    std::vector<char> keep(N + 1, 0);
    for (int s : w.defects()) keep[s] = 1;
    for (auto [i, j] : w.arcs())
        if (j > N) keep[i] = keep[j - N] = 1;
    std::vector<int> s;
    for (int k = 1; k <= N; ++k)
        if (keep[k]) s.push_back(k);
    return s;
}

}  // namespace

UTransform u_transform(int N, int d) {
    auto basis = enumerate_states(N, d);
    const int dim = static_cast<int>(basis.size());
    UTransform u;
    u.num = RingMatrix(dim, dim);
    u.col_den.assign(dim, LaurentPoly(1));
    for (int c = 0; c < dim; ++c) {
        const auto& w = basis[c];
        auto sites = remaining_sites(w);
        const int m = static_cast<int>(sites.size());
        if (w.r() == 0 || m < 2) {
            u.num(c, c) = LaurentPoly(1);
            continue;
        }
        TLWord p = TLWord::wenzl_jones(m);
        std::vector<LazyAction> gens;
        for (int k = 0; k + 1 < m; ++k) gens.emplace_back(bridge_generator(N, sites[k], sites[k + 1]), basis);
        LinkVector x(dim);
        x[c] = LaurentPoly(1);
        x = apply_tlword(p, gens, std::move(x));
        for (int r = 0; r < dim; ++r) u.num(r, c) = std::move(x[r]);
        u.col_den[c] = p.denominator();
    }
    u.num.row_labels = u.num.col_labels = state_labels(basis);
    return u;
}

GammaMatrix gamma_matrix(int N, int d) {
    UTransform u = u_transform(N, d);
    RingMatrix G = gram_matrix_tilde(N, d);
    GammaMatrix g;
    g.num = u.num.invert_v().transpose() * G * u.num;
    g.num.row_labels = g.num.col_labels = u.num.col_labels;
    g.den = std::move(u.col_den);
    return g;
}

std::vector<int> stratum_twist(int d, int r) {
    std::vector<int> t(2 * r + d, 0);
    for (int k = 0; k < d; ++k) t[r + k] = 1;
    return t;
}

RingFraction k_factor(int d, int r, KMode mode, int N) {
    if (N < 0) N = d + 2 * r;
    if (r < 0 || d < 0 || N < d + 2 * r || (N - d) % 2) throw std::invalid_argument("K factor out of range");
    if (r == 0) return RingFraction(LaurentPoly(1));
    const LaurentPoly a2 = trig::alpha(N) * trig::alpha(N);
    switch (mode) {
        case KMode::ClosedForm: {
            RingFraction f(LaurentPoly(1));
            for (int k = 1; k <= r; ++k) f *= RingFraction((a2 - trig::four_C_sq(2 * k + d)) * trig::S(k), trig::S(r + d + k));
            return f;
        }
        case KMode::Recursion: {
            RingFraction f(LaurentPoly(1));
            for (int j = 1; j <= r; ++j) {
                LaurentPoly top = a2 - trig::four_C_sq(2 * j + d);
                if (d == 0 && j == 1) {
                    f = RingFraction(top * trig::S(1), trig::S(2));
                    continue;
                }
                f *= RingFraction(top * trig::S(j) * trig::S(j + d), trig::S(2 * j + d) * trig::S(2 * j + d - 1));
            }
            return f;
        }
        case KMode::GramPairing: {
            const int m = d + 2 * r;
            std::vector<int> off(N, 0);
            for (int k = 1; k <= r; ++k) {
                int i = r + d + k, j = N + r + 1 - k;
                off[i - 1] = j - i;
                off[j - N - 1] = i - j;
            }
            for (int s = m + 1; s <= N; s += 2) {
                off[s - 1] = 1;
                off[s] = -1;
            }
            LinkState w(N, off);
            std::vector<LinkState> basis = enumerate_states(N, d);
            int c = index_of(basis, w);
            TLWord p = TLWord::wenzl_jones(m);
            std::vector<LazyAction> gens;
            for (int k = 1; k < m; ++k) gens.emplace_back(AffineDiagram::generator(Generator::e(k), N), basis);
            LinkVector x(basis.size());
            x[c] = LaurentPoly(1);
            x = apply_tlword(p, gens, std::move(x));
            LaurentPoly num;
            for (std::size_t b = 0; b < basis.size(); ++b)
                if (!x[b].is_zero()) num += x[b] * gram_pair(basis[b], w);
            return RingFraction(num, p.denominator());
        }
    }
    throw std::logic_error("unknown K mode");
}

namespace {

std::string tag(int N, int d) { return "N=" + std::to_string(N) + " d=" + std::to_string(d); }

}  // namespace

CheckReport wj_properties_check(int n, int N, int d) {
    CheckReport rep;
    TLWord p = TLWord::wenzl_jones(n);
    const LaurentPoly& D = p.denominator();
    for (int start = 1; start + n - 1 <= N; ++start) {
        RingMatrix P = wj_matrix(p, N, d, start);
        const std::string where = tag(N, d) + " n=" + std::to_string(n) + " window " + std::to_string(start);
        if ((P * P) != P.scaled(D)) rep.fail(where + ": not idempotent");
        for (int k = 1; k < n; ++k) {
            RingMatrix E = omega_generator(Generator::e(start + k - 1), N, d);
            if (!(E * P).is_zero() || !(P * E).is_zero()) rep.fail(where + ": e_" + std::to_string(k) + " does not annihilate");
        }
        if (P != wj_matrix(p.reversed(), N, d, start)) rep.fail(where + ": reversed form differs");
        if (P != wj_matrix(p.mirrored(), N, d, start)) rep.fail(where + ": mirrored form differs");
        if (n <= 5) {
            auto [A, Dr] = wj_matrix_recursive(n, N, d, start);
            if (A.scaled(D) != P.scaled(Dr)) rep.fail(where + ": recursion differs");
        }
        if (!rep.ok) return rep;
    }
    return rep;
}

CheckReport u_triangular_check(int N, int d) {
    CheckReport rep;
    auto basis = enumerate_states(N, d);
    UTransform u = u_transform(N, d);
    for (int c = 0; c < u.num.cols(); ++c)
        for (int r = 0; r < u.num.rows(); ++r) {
            const auto& x = u.num(r, c);
            bool bad = false;
            if (basis[r].r() > basis[c].r()) bad = !x.is_zero();
            else if (basis[r].r() == basis[c].r()) bad = (r == c) ? x != u.col_den[c] : !x.is_zero();
            if (bad) {
                rep.fail(tag(N, d) + " U(" + basis[r].str() + "," + basis[c].str() + ") = " + x.str());
                return rep;
            }
        }
    return rep;
}

CheckReport gamma_block_check(int N, int d) {
    CheckReport rep;
    auto basis = enumerate_states(N, d);
    GammaMatrix g = gamma_matrix(N, d);
    std::vector<LinkState> image;
    for (const auto& w : basis) image.push_back(bijection_C(w));
    std::map<int, RingFraction> K;
    for (int a = 0; a < g.num.rows(); ++a)
        for (int b = 0; b < g.num.cols(); ++b) {
            const int ra = basis[a].r(), rb = basis[b].r();
            const auto& x = g.num(a, b);
            if (ra != rb) {
                if (!x.is_zero()) rep.fail(tag(N, d) + " off-stratum entry at " + basis[a].str() + "," + basis[b].str());
            } else {
                if (!K.count(ra)) K.emplace(ra, k_factor(d, ra, KMode::ClosedForm, N));
                const RingFraction& k = K.at(ra);
                LaurentPoly gv = gram_pair(image[b], image[a], Twist::vector(stratum_twist(d, ra)));
                if (x * k.den() != k.num() * gv * g.den[a] * g.den[b])
                    rep.fail(tag(N, d) + " block entry at " + basis[a].str() + "," + basis[b].str());
            }
            if (!rep.ok) return rep;
        }
    return rep;
}

CheckReport gram_recursion_check(int N, int d) {
    CheckReport rep;
    if (d < 1 || d > N || (N - d) % 2) throw std::invalid_argument("recursion needs 1 <= d <= N, N-d even");
    auto twist = [](int first, int last) {
        std::vector<int> e;
        for (int i = first; i <= last; ++i) e.push_back(i);
        return e;
    };
    LaurentPoly lhs = det_exact(gram_matrix_open(N, d, Twist::vector(twist(1, d))));
    if (d == N) {
        if (lhs != LaurentPoly(1)) rep.fail(tag(N, d) + " base case is " + lhs.str());
        return rep;
    }
    LaurentPoly A = det_exact(gram_matrix_open(N - 1, d - 1, Twist::vector(twist(2, d))));
    LaurentPoly B = det_exact(gram_matrix_open(N - 1, d + 1, Twist::vector(twist(0, d))));
    const unsigned e = static_cast<unsigned>(dim_open(N - 1, d + 1));
    if (!equal_up_to_sign(lhs * trig::S(d + 1).pow(e), A * B * trig::S(d + 2).pow(e)))
        rep.fail(tag(N, d) + " determinant recursion fails");
    return rep;
}

CheckReport gram_corollary_check(int N, int d) {
    CheckReport rep;
    LaurentPoly lhs = det_exact(gram_matrix_tilde(N, d));
    RingFraction rhs(LaurentPoly(1));
    for (int r = 0; d + 2 * r <= N; ++r) {
        const int dd = d + 2 * r;
        const long long dim = dim_open(N, dd);
        std::vector<int> ones(dd, 1);
        RingFraction g(det_exact(gram_matrix_open(N, dd, Twist::vector(ones))));
        rhs *= g * k_factor(d, r, KMode::ClosedForm, N).pow(static_cast<unsigned>(dim));
    }
    if (!RingFraction(lhs).equal_up_to_sign(rhs)) rep.fail(tag(N, d) + " determinant product fails");
    return rep;
}

}  // namespace eptl
