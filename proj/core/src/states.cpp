#include "eptl/states.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace eptl {

namespace {

int wrap(int s, int N) { return ((s - 1) % N + N) % N + 1; }

}  // namespace

std::string validate_offsets(int N, const std::vector<int>& off) {
    if (N < 1) return "N must be positive";
    if (static_cast<int>(off.size()) != N) return "offset vector has wrong length";
    for (int s = 1; s <= N; ++s) {
        int o = off[s - 1];
        if (o == 0) continue;
        if (o <= -N || o >= N) return "arc longer than the cylinder";
        int t = wrap(s + o, N);
        if (off[t - 1] != -o) return "arc endpoints disagree";
    }
    // Lifted intervals must be nested or disjoint, and no arc may enclose a defect.
    for (int s = 1; s <= N; ++s) {
        int o = off[s - 1];
        if (o <= 0) continue;
        for (int k = 1; k < o; ++k) {
            int t = wrap(s + k, N);
            int ot = off[t - 1];
            if (ot == 0) return "arc encloses a defect";
            int pos = s + k, partner = pos + ot;
            if (partner <= s || partner >= s + o) return "crossing arcs";
        }
    }
    return {};
}

LinkState::LinkState(int N, std::vector<int> offsets) : N_(N), offsets_(std::move(offsets)) {
    std::string err = validate_offsets(N_, offsets_);
    if (!err.empty()) throw std::invalid_argument("invalid link state: " + err);
    for (int s = 1; s <= N_; ++s) {
        int o = offsets_[s - 1];
        if (o == 0) defects_.push_back(s);
        else if (o > 0) arcs_.emplace_back(s, s + o);
    }
}

LinkState LinkState::from_arcs(int N, const std::vector<std::pair<int, int>>& arcs) {
    std::vector<int> off(N, 0);
    for (auto [i, j] : arcs) {
        if (i < 1 || i > N || j <= i || j >= i + N) throw std::invalid_argument("arc out of range");
        int a = i, b = wrap(j, N);
        if (off[a - 1] != 0 || off[b - 1] != 0) throw std::invalid_argument("site used twice");
        off[a - 1] = j - i;
        off[b - 1] = i - j;
    }
    return LinkState(N, std::move(off));
}

int LinkState::r() const {
    int c = 0;
    for (auto [i, j] : arcs_)
        if (j > N_) ++c;
    return c;
}

bool operator<(const LinkState& a, const LinkState& b) {
    if (a.N_ != b.N_) return a.N_ < b.N_;
    int ra = a.r(), rb = b.r();
    if (ra != rb) return ra < rb;
    if (a.arcs_ != b.arcs_) return a.arcs_ < b.arcs_;
    return a.defects_ < b.defects_;
}

std::string LinkState::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t k = 0; k < arcs_.size(); ++k) os << (k ? "," : "") << "(" << arcs_[k].first << "," << arcs_[k].second << ")";
    os << "}";
    if (!defects_.empty()) {
        os << " d[";
        for (std::size_t k = 0; k < defects_.size(); ++k) os << (k ? "," : "") << defects_[k];
        os << "]";
    }
    return os.str();
}

std::string LinkState::ascii() const {
    // '(' opens, ')' closes, '|' defect; '<' and '>' mark the two ends of a seam-crossing arc.
    std::string s(N_, '?');
    for (auto [i, j] : arcs_) {
        if (j > N_) {
            s[i - 1] = '<';
            s[wrap(j, N_) - 1] = '>';
        } else {
            s[i - 1] = '(';
            s[j - 1] = ')';
        }
    }
    for (int d : defects_) s[d - 1] = '|';
    return s;
}

long long binom(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long dim_open(int N, int d) {
    int h = (N - d) / 2;
    return binom(N, h) - binom(N, h - 1);
}

std::vector<LinkState> enumerate_states(int N, int d) {
    if (N < 1 || d < 0 || d > N || (N - d) % 2 != 0)
        throw std::invalid_argument("need 0 <= d <= N and d = N mod 2");
    const int h = (N - d) / 2;
    std::vector<LinkState> out;
    // A state is determined by the set of closing sites; each closer is matched to the
    // nearest unmatched site on its left, cyclically.
    std::vector<char> closer(N, 0);
    std::fill(closer.end() - h, closer.end(), 1);
    do {
        std::vector<int> off(N, 0);
        std::vector<char> matched(N, 0);
        std::vector<int> stack;
        for (int t = 0; t < 2 * N; ++t) {
            int p = t % N;
            if (closer[p]) {
                if (!matched[p] && !stack.empty()) {
                    int o = stack.back();
                    stack.pop_back();
                    int len = t - o;
                    off[o % N] = len;
                    off[p] = -len;
                    matched[p] = matched[o % N] = 1;
                }
            } else if (t < N) {
                stack.push_back(t);
            }
        }
        out.emplace_back(N, std::move(off));
    } while (std::next_permutation(closer.begin(), closer.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LinkState> enumerate_open_states(int N, int d) {
    std::vector<LinkState> out;
    for (auto& w : enumerate_states(N, d))
        if (w.r() == 0) out.push_back(w);
    return out;
}

int index_of(const std::vector<LinkState>& basis, const LinkState& w) {
    auto it = std::lower_bound(basis.begin(), basis.end(), w);
    if (it != basis.end() && *it == w) return static_cast<int>(it - basis.begin());
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (basis[k] == w) return static_cast<int>(k);
    return -1;
}

LinkState bijection_C(const LinkState& w) {
    int N = w.n_sites();
    std::vector<int> off = w.offsets();
    for (auto [i, j] : w.arcs()) {
        if (j > N) {
            off[i - 1] = 0;
            off[wrap(j, N) - 1] = 0;
        }
    }
    return LinkState(N, std::move(off));
}

LinkState bijection_C_inverse(const LinkState& c, int r) {
    int N = c.n_sites();
    const auto& def = c.defects();
    int m = static_cast<int>(def.size());
    if (2 * r > m) throw std::invalid_argument("not enough defects to reattach");
    std::vector<int> off = c.offsets();
    for (int k = 0; k < r; ++k) {
        int left = def[k], right = def[m - 1 - k];
        int len = left + N - right;
        off[right - 1] = len;
        off[left - 1] = -len;
    }
    return LinkState(N, std::move(off));
}

int height(const std::vector<int>& x) {
    int N = static_cast<int>(x.size());
    int y = 0, s = 0;
    for (int j = 1; j <= N; ++j) {
        y += x[j - 1];
        s += j * x[j - 1];
    }
    return (N + 1) * y - s;
}

PathData paths_and_height(const LinkState& w) {
    int N = w.n_sites();
    PathData p;
    p.plus.assign(N, 0);
    p.minus.assign(N, 0);
    for (int s = 1; s <= N; ++s) {
        int o = w.offset(s);
        if (o == 0) {
            p.plus[s - 1] = 1;
            p.minus[s - 1] = -1;
        } else {
            p.plus[s - 1] = p.minus[s - 1] = (o > 0) ? 1 : -1;
        }
    }
    p.H_plus = height(p.plus);
    p.H_minus = height(p.minus);
    return p;
}

int arc_length_sum(const LinkState& w) {
    int s = 0;
    for (auto [i, j] : w.arcs()) s += j - i;
    return s;
}

}  // namespace eptl
