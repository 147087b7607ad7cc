#include "eptl/diagrams.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace eptl {

namespace {

int wrap(int s, int N) { return ((s - 1) % N + N) % N + 1; }
int site_of(int p, int N) { return p % N + 1; }

int loop_winding(int acc, int N) {
    if (acc % N != 0) throw std::logic_error("closed loop with fractional winding");
    int w = acc / N;
    if (w < -1 || w > 1) throw std::logic_error("closed loop winding outside {-1,0,1}");
    return w;
}

}  // namespace

std::string Generator::str() const {
    switch (kind) {
        case GenKind::Id: return "id";
        case GenKind::E: return "e" + std::to_string(index);
        case GenKind::Omega: return "O";
        case GenKind::OmegaInv: return "Oi";
    }
    return "?";
}

Word parse_word(const std::string& text) {
    Word w;
    std::string tok;
    auto flush = [&]() {
        if (tok.empty()) return;
        if (tok == "id") w.push_back(Generator::id());
        else if (tok == "O" || tok == "omega") w.push_back(Generator::omega());
        else if (tok == "Oi" || tok == "omega^-1" || tok == "omega-1" || tok == "omegainv") w.push_back(Generator::omega_inv());
        else if (tok[0] == 'e' && tok.size() > 1) {
            std::string digits = tok.substr(tok[1] == '_' ? 2 : 1);
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("unknown generator '" + tok + "'");
            w.push_back(Generator::e(std::stoi(digits)));
        } else throw std::invalid_argument("unknown generator '" + tok + "'");
        tok.clear();
    };
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '*' || c == '.') flush();
        else tok += c;
    }
    flush();
    return w;
}

AffineDiagram::AffineDiagram(int N, std::vector<int> partner, std::vector<int> disp, int lb, int la)
    : N_(N), partner_(std::move(partner)), disp_(std::move(disp)), loop_beta_(lb), loop_alpha_(la) {
    if (static_cast<int>(partner_.size()) != 2 * N_ || static_cast<int>(disp_.size()) != 2 * N_)
        throw std::invalid_argument("diagram arrays must have 2N entries");
    for (int p = 0; p < 2 * N_; ++p) {
        int q = partner_[p];
        if (q < 0 || q >= 2 * N_ || q == p || partner_[q] != p || disp_[q] != -disp_[p])
            throw std::invalid_argument("diagram matching is not an involution");
    }
}

AffineDiagram AffineDiagram::generator(const Generator& g, int N) {
    std::vector<int> partner(2 * N), disp(2 * N, 0);
    auto link = [&](int p, int q, int d) {
        partner[p] = q;
        partner[q] = p;
        disp[p] = d;
        disp[q] = -d;
    };
    switch (g.kind) {
        case GenKind::Id:
            for (int s = 0; s < N; ++s) link(s, N + s, 0);
            break;
        case GenKind::E: {
            if (g.index < 1 || g.index > N) throw std::invalid_argument("e_i index out of range");
            if (N < 2) throw std::invalid_argument("e_i needs N >= 2");
            int a = g.index - 1, b = wrap(g.index + 1, N) - 1;
            for (int s = 0; s < N; ++s)
                if (s != a && s != b) link(s, N + s, 0);
            link(a, b, 1);
            link(N + a, N + b, 1);
            break;
        }
        case GenKind::Omega:
            for (int k = 1; k <= N; ++k) link(N + k - 1, wrap(k - 1, N) - 1, -1);
            break;
        case GenKind::OmegaInv:
            for (int k = 1; k <= N; ++k) link(N + k - 1, wrap(k + 1, N) - 1, 1);
            break;
    }
    return AffineDiagram(N, std::move(partner), std::move(disp));
}

AffineDiagram AffineDiagram::from_word(const Word& w, int N) {
    AffineDiagram d = identity(N);
    for (const auto& g : w) d = d * generator(g, N);
    return d;
}

int AffineDiagram::winding(int p) const {
    int q = partner_[p];
    return (disp_[p] - (site_of(q, N_) - site_of(p, N_))) / N_;
}

int AffineDiagram::through_lines() const {
    int c = 0;
    for (int p = 0; p < N_; ++p)
        if (partner_[p] >= N_) ++c;
    return c;
}

std::string AffineDiagram::ascii() const {
    std::ostringstream os;
    os << ":";
    for (int p = 0; p < 2 * N_; ++p) {
        int q = partner_[p];
        if (q < p) continue;
        os << " " << (p < N_ ? "b" : "t") << site_of(p, N_) << "-" << (q < N_ ? "b" : "t") << site_of(q, N_);
        if (int w = winding(p)) os << "[" << (w > 0 ? "+" : "") << w << "]";
    }
    os << " : beta^" << loop_beta_ << " alpha^" << loop_alpha_;
    return os.str();
}

AffineDiagram compose(const AffineDiagram& top, const AffineDiagram& bottom) {
    const int N = top.n_sites();
    if (bottom.n_sites() != N) throw std::invalid_argument("compose: size mismatch");
    const AffineDiagram* c[3] = {nullptr, &bottom, &top};
    std::vector<int> partner(2 * N, -1), disp(2 * N, 0);
    std::vector<char> mid_seen(N, 0);

    // Walks from a free endpoint of the result; returns the result endpoint reached.
    auto walk = [&](int which, int p, int& acc) {
        while (true) {
            int q = c[which]->partner(p);
            acc += c[which]->disp(p);
            if (which == 1) {
                if (q < N) return q;
                int m = q - N;
                mid_seen[m] = 1;
                which = 2;
                p = m;
            } else {
                if (q >= N) return q;
                mid_seen[q] = 1;
                which = 1;
                p = N + q;
            }
        }
    };

    for (int e = 0; e < 2 * N; ++e) {
        if (partner[e] != -1) continue;
        int acc = 0;
        int f = (e < N) ? walk(1, e, acc) : walk(2, e, acc);
        partner[e] = f;
        partner[f] = e;
        disp[e] = acc;
        disp[f] = -acc;
    }

    int lb = top.loop_beta() + bottom.loop_beta();
    int la = top.loop_alpha() + bottom.loop_alpha();
    for (int m0 = 0; m0 < N; ++m0) {
        if (mid_seen[m0]) continue;
        mid_seen[m0] = 1;
        int which = 2, p = m0, acc = 0;
        while (true) {
            int q = c[which]->partner(p);
            acc += c[which]->disp(p);
            if (which == 2) {
                if (q >= N) throw std::logic_error("loop trace reached a free endpoint");
                mid_seen[q] = 1;
                which = 1;
                p = N + q;
            } else {
                if (q < N) throw std::logic_error("loop trace reached a free endpoint");
                int m = q - N;
                if (m == m0) break;
                mid_seen[m] = 1;
                which = 2;
                p = m;
            }
        }
        if (loop_winding(acc, N) == 0) ++lb;
        else ++la;
    }
    return AffineDiagram(N, std::move(partner), std::move(disp), lb, la);
}

std::optional<ActResult> act_on_link(const AffineDiagram& D, const LinkState& w, ActOptions opt) {
    const int N = D.n_sites();
    if (w.n_sites() != N) throw std::invalid_argument("act_on_link: size mismatch");
    const auto& defects = w.defects();
    std::vector<int> defect_index(N + 1, -1);
    for (std::size_t k = 0; k < defects.size(); ++k) defect_index[defects[k]] = static_cast<int>(k);

    ActResult res;
    res.weight.n_beta = D.loop_beta();
    res.weight.n_alpha = D.loop_alpha();
    res.weight.defect_delta.assign(defects.size(), 0);
    std::vector<int> off(N, 0);
    std::vector<char> top_seen(N + 1, 0), bottom_done(N, 0);

    for (int b = 0; b < N; ++b) {
        if (bottom_done[b]) continue;
        int p = b, acc = 0;
        while (true) {
            int q = D.partner(p);
            acc += D.disp(p);
            if (q < N) {
                off[b] = acc;
                off[q] = -acc;
                bottom_done[b] = bottom_done[q] = 1;
                break;
            }
            int t = q - N + 1;
            top_seen[t] = 1;
            if (w.is_defect(t)) {
                bottom_done[b] = 1;
                res.weight.defect_delta[defect_index[t]] = acc;
                res.weight.delta += acc;
                break;
            }
            acc += w.offset(t);
            int t2 = wrap(t + w.offset(t), N);
            top_seen[t2] = 1;
            p = N + t2 - 1;
        }
    }

    // Defects that did not reach the bottom are joined to each other.
    for (int d : defects) {
        if (top_seen[d]) continue;
        if (opt.kill_joined_defects) return std::nullopt;
        int t = d;
        top_seen[t] = 1;
        while (true) {
            int q = D.partner(N + t - 1);
            if (q < N) throw std::logic_error("defect path reached the bottom unexpectedly");
            int t1 = q - N + 1;
            top_seen[t1] = 1;
            if (w.is_defect(t1)) break;
            t = wrap(t1 + w.offset(t1), N);
            top_seen[t] = 1;
        }
    }

    for (int t0 = 1; t0 <= N; ++t0) {
        if (top_seen[t0]) continue;
        int cur = t0, acc = 0;
        do {
            top_seen[cur] = 1;
            acc += w.offset(cur);
            int nxt = wrap(cur + w.offset(cur), N);
            top_seen[nxt] = 1;
            int q = D.partner(N + nxt - 1);
            if (q < N) throw std::logic_error("loop trace reached the bottom");
            acc += D.disp(N + nxt - 1);
            cur = q - N + 1;
        } while (cur != t0);
        if (loop_winding(acc, N) == 0) ++res.weight.n_beta;
        else ++res.weight.n_alpha;
    }

    res.state = LinkState(N, std::move(off));
    return res;
}

LinkState reflect_state(const LinkState& w) {
    int N = w.n_sites();
    std::vector<int> off(N, 0);
    for (int s = 1; s <= N; ++s) off[N - s] = -w.offset(s);
    return LinkState(N, std::move(off));
}

}  // namespace eptl
