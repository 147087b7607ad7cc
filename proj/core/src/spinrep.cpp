#include "eptl/spinrep.hpp"

#include <bit>
#include <stdexcept>

namespace eptl {

namespace {

int wrap(int s, int N) { return ((s - 1) % N + N) % N + 1; }
std::uint32_t bit(int s) { return 1u << (s - 1); }

std::uint32_t rotate(std::uint32_t x, int sign, int N) {
    std::uint32_t full = (N == 32) ? ~0u : ((1u << N) - 1);
    // t|x1..xN> = |x2..xN x1>: the new site k carries the old site k+1.
    if (sign > 0) return ((x >> 1) | ((x & 1u) << (N - 1))) & full;
    return ((x << 1) | (x >> (N - 1))) & full;
}

// Nonzero images of a basis configuration under e-bar on sites (a, b).
template <class F>
void ebar_images(int i, int N, std::uint32_t x, F emit) {
    int a = i, b = wrap(i + 1, N);
    bool up_a = x & bit(a), up_b = x & bit(b);
    if (up_a == up_b) return;
    std::uint32_t y = x ^ bit(a) ^ bit(b);
    if (up_a) {
        emit(x, LaurentPoly::u(2));
        emit(y, LaurentPoly::v(-2));
    } else {
        emit(y, LaurentPoly::v(2));
        emit(x, LaurentPoly::u(-2));
    }
}

}  // namespace

SpinIndex::SpinIndex(int N, int d) : N_(N), d_(d) {
    if (N < 1 || N > 20 || d < 0 || d > N || (N - d) % 2 != 0) throw std::invalid_argument("invalid spin sector");
    int ups = (N + d) / 2;
    lookup_.assign(1u << N, -1);
    for (std::uint32_t m = 0; m < (1u << N); ++m) {
        if (std::popcount(m) == ups) {
            lookup_[m] = static_cast<int>(configs_.size());
            configs_.push_back(m);
        }
    }
}

int SpinIndex::index(std::uint32_t mask) const {
    if (mask >= lookup_.size()) return -1;
    return lookup_[mask];
}

std::vector<std::string> SpinIndex::labels() const {
    std::vector<std::string> l;
    for (auto m : configs_) l.push_back(spin_label(m, N_));
    return l;
}

std::string spin_label(std::uint32_t mask, int N) {
    std::string s;
    for (int k = 1; k <= N; ++k) s += (mask & bit(k)) ? '+' : '-';
    return s;
}

std::uint32_t parse_spin_label(const std::string& s) {
    std::uint32_t m = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] == '+') m |= 1u << k;
        else if (s[k] != '-') throw std::invalid_argument("spin label must use + and -");
    }
    return m;
}

RingMatrix ebar_matrix(int i, const SpinIndex& sec) {
    const int N = sec.n_sites();
    if (i < 1 || i > N || N < 2) throw std::invalid_argument("e-bar index out of range");
    RingMatrix m(sec.size(), sec.size());
    for (int c = 0; c < sec.size(); ++c)
        ebar_images(i, N, sec.config(c), [&](std::uint32_t y, LaurentPoly w) { m(sec.index(y), c) += w; });
    m.row_labels = m.col_labels = sec.labels();
    return m;
}

RingMatrix omegabar_matrix(int sign, const SpinIndex& sec) {
    RingMatrix m(sec.size(), sec.size());
    LaurentPoly w = LaurentPoly::v(sign * sec.d());
    for (int c = 0; c < sec.size(); ++c) m(sec.index(rotate(sec.config(c), sign, sec.n_sites())), c) = w;
    m.row_labels = m.col_labels = sec.labels();
    return m;
}

RingMatrix tau_generator(const Generator& g, const SpinIndex& sec) {
    switch (g.kind) {
        case GenKind::Id: {
            RingMatrix m = RingMatrix::identity(sec.size());
            m.row_labels = m.col_labels = sec.labels();
            return m;
        }
        case GenKind::E: return ebar_matrix(g.index, sec);
        case GenKind::Omega: return omegabar_matrix(1, sec);
        case GenKind::OmegaInv: return omegabar_matrix(-1, sec);
    }
    throw std::logic_error("unknown generator");
}

RingMatrix tau_word(const Word& w, const SpinIndex& sec) {
    RingMatrix m = RingMatrix::identity(sec.size());
    for (const auto& g : w) m = m * tau_generator(g, sec);
    m.row_labels = m.col_labels = sec.labels();
    return m;
}

RingMatrix spin_hamiltonian(const SpinIndex& sec) {
    RingMatrix h(sec.size(), sec.size());
    for (int i = 1; i <= sec.n_sites(); ++i) h = h + ebar_matrix(i, sec);
    h.row_labels = h.col_labels = sec.labels();
    return h;
}

SpinVector SpinVector::vacuum(int N) {
    SpinVector v;
    v.N = N;
    v.coords[(N == 32) ? ~0u : ((1u << N) - 1)] = LaurentPoly(1);
    return v;
}

SpinVector& SpinVector::operator+=(const SpinVector& o) {
    for (const auto& [m, c] : o.coords) {
        auto& x = coords[m];
        x += c;
        if (x.is_zero()) coords.erase(m);
    }
    return *this;
}

bool operator==(const SpinVector& a, const SpinVector& b) {
    auto clean = [](const SpinVector& s) {
        std::map<std::uint32_t, LaurentPoly> m;
        for (const auto& [k, c] : s.coords)
            if (!c.is_zero()) m[k] = c;
        return m;
    };
    return a.N == b.N && clean(a) == clean(b);
}

std::vector<LaurentPoly> SpinVector::dense(const SpinIndex& sec) const {
    std::vector<LaurentPoly> out(sec.size());
    for (const auto& [m, c] : coords) {
        if (c.is_zero()) continue;
        int k = sec.index(m);
        if (k < 0) throw std::logic_error("spin vector leaves the sector");
        out[k] = c;
    }
    return out;
}

SpinVector ebar_apply(int i, const SpinVector& x) {
    SpinVector y;
    y.N = x.N;
    for (const auto& [m, c] : x.coords)
        ebar_images(i, x.N, m, [&](std::uint32_t t, LaurentPoly w) {
            auto& slot = y.coords[t];
            slot += w * c;
        });
    for (auto it = y.coords.begin(); it != y.coords.end();) it = it->second.is_zero() ? y.coords.erase(it) : std::next(it);
    return y;
}

SpinVector omegabar_apply(int sign, const SpinVector& x) {
    SpinVector y;
    y.N = x.N;
    for (const auto& [m, c] : x.coords) {
        int twice_sz = 2 * std::popcount(m) - x.N;
        y.coords[rotate(m, sign, x.N)] = c * LaurentPoly::v(sign * twice_sz);
    }
    return y;
}

}  // namespace eptl
