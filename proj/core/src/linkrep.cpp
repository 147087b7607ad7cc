#include "eptl/linkrep.hpp"

#include <stdexcept>

namespace eptl {

namespace {

int wrap(int s, int N) { return ((s - 1) % N + N) % N + 1; }

}  // namespace

int Twist::exponent(const std::vector<int>& dd) const {
    int e = 0;
    if (per_defect.empty()) {
        for (int x : dd) e += uniform * x;
        return e;
    }
    if (per_defect.size() != dd.size()) throw std::invalid_argument("twist vector length differs from defect count");
    for (std::size_t i = 0; i < dd.size(); ++i) e += per_defect[i] * dd[i];
    return e;
}

Twist Twist::inverted() const {
    Twist t = *this;
    t.uniform = -t.uniform;
    for (int& x : t.per_defect) x = -x;
    return t;
}

LaurentPoly loop_weight(int n_beta, int n_alpha, int v_exp, int N) {
    LaurentPoly w = LaurentPoly::v(v_exp);
    if (n_beta) w *= trig::beta().pow(n_beta);
    if (n_alpha) w *= trig::alpha(N).pow(n_alpha);
    return w;
}

std::vector<std::string> state_labels(const std::vector<LinkState>& basis) {
    std::vector<std::string> l;
    l.reserve(basis.size());
    for (const auto& w : basis) l.push_back(w.str());
    return l;
}

RingMatrix omega_on_basis(const AffineDiagram& D, const std::vector<LinkState>& basis, const Twist& tw) {
    const int n = static_cast<int>(basis.size());
    RingMatrix m(n, n);
    for (int c = 0; c < n; ++c) {
        auto res = act_on_link(D, basis[c]);
        if (!res) continue;
        int r = index_of(basis, res->state);
        if (r < 0) throw std::logic_error("action left the basis: " + res->state.str());
        m(r, c) += loop_weight(res->weight.n_beta, res->weight.n_alpha, tw.exponent(res->weight.defect_delta), D.n_sites());
    }
    m.row_labels = m.col_labels = state_labels(basis);
    return m;
}

RingMatrix omega_generator(const Generator& g, int N, int d, const Twist& tw) {
    return omega_on_basis(AffineDiagram::generator(g, N), enumerate_states(N, d), tw);
}

RingMatrix omega_matrix(const Word& w, int N, int d, const Twist& tw) {
    return omega_on_basis(AffineDiagram::from_word(w, N), enumerate_states(N, d), tw);
}

RingMatrix omega_matrix_product(const Word& w, int N, int d, const Twist& tw) {
    auto basis = enumerate_states(N, d);
    RingMatrix m = RingMatrix::identity(static_cast<int>(basis.size()));
    for (const auto& g : w) m = m * omega_on_basis(AffineDiagram::generator(g, N), basis, tw);
    m.row_labels = m.col_labels = state_labels(basis);
    return m;
}

RingMatrix link_hamiltonian(int N, int d, const Twist& tw) {
    auto basis = enumerate_states(N, d);
    RingMatrix h(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
    for (int i = 1; i <= N; ++i) h = h + omega_on_basis(AffineDiagram::generator(Generator::e(i), N), basis, tw);
    h.row_labels = h.col_labels = state_labels(basis);
    return h;
}

std::optional<GramClosure> gram_closure(const LinkState& w1, const LinkState& w2) {
    const int N = w1.n_sites();
    if (w2.n_sites() != N) throw std::invalid_argument("gram: size mismatch");
    if (w1.n_defects() != w2.n_defects()) return std::nullopt;
    GramClosure g;
    g.defect_delta.assign(w1.defects().size(), 0);
    std::vector<char> seen(N + 1, 0);

    const auto& d1 = w1.defects();
    for (std::size_t k = 0; k < d1.size(); ++k) {
        int s = d1[k], acc = 0;
        seen[s] = 1;
        // Alternate w2 arcs and w1 arcs until a defect is met.
        while (true) {
            if (w2.is_defect(s)) break;
            acc += w2.offset(s);
            s = wrap(s + w2.offset(s), N);
            seen[s] = 1;
            if (w1.is_defect(s)) return std::nullopt;
            acc += w1.offset(s);
            s = wrap(s + w1.offset(s), N);
            seen[s] = 1;
        }
        g.defect_delta[k] = -acc;
    }
    for (int d : w2.defects())
        if (!seen[d]) return std::nullopt;

    for (int s0 = 1; s0 <= N; ++s0) {
        if (seen[s0]) continue;
        int s = s0, acc = 0;
        do {
            seen[s] = 1;
            acc += w1.offset(s);
            s = wrap(s + w1.offset(s), N);
            seen[s] = 1;
            acc += w2.offset(s);
            s = wrap(s + w2.offset(s), N);
        } while (s != s0);
        if (acc % N != 0) throw std::logic_error("gram loop with fractional winding");
        int wnd = acc / N;
        if (wnd < -1 || wnd > 1) throw std::logic_error("gram loop winding outside {-1,0,1}");
        if (wnd == 0) ++g.n_beta;
        else ++g.n_alpha;
    }
    return g;
}

LaurentPoly gram_pair(const LinkState& w1, const LinkState& w2, const Twist& tw) {
    auto g = gram_closure(w1, w2);
    if (!g) return LaurentPoly();
    return loop_weight(g->n_beta, g->n_alpha, tw.exponent(g->defect_delta), w1.n_sites());
}

RingMatrix gram_matrix_on(const std::vector<LinkState>& basis, const Twist& tw) {
    const int n = static_cast<int>(basis.size());
    RingMatrix m(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) m(a, b) = gram_pair(basis[b], basis[a], tw);
    m.row_labels = m.col_labels = state_labels(basis);
    return m;
}

RingMatrix gram_matrix_tilde(int N, int d) { return gram_matrix_on(enumerate_states(N, d)); }

RingMatrix gram_matrix_open(int N, int d, const Twist& tw) { return gram_matrix_on(enumerate_open_states(N, d), tw); }

LinkVector apply(const RingMatrix& m, const LinkVector& x) {
    if (m.cols() != static_cast<int>(x.size())) throw std::invalid_argument("apply: shape mismatch");
    LinkVector y(m.rows());
    for (int j = 0; j < m.cols(); ++j) {
        if (x[j].is_zero()) continue;
        for (int i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) y[i] += m(i, j) * x[j];
    }
    return y;
}

}  // namespace eptl
