#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eptl/states.hpp"

namespace eptl {

enum class GenKind { Id, E, Omega, OmegaInv };

struct Generator {
    GenKind kind = GenKind::Id;
    int index = 0;  // site i for e_i

    static Generator e(int i) { return {GenKind::E, i}; }
    static Generator omega() { return {GenKind::Omega, 0}; }
    static Generator omega_inv() { return {GenKind::OmegaInv, 0}; }
    static Generator id() { return {GenKind::Id, 0}; }
    std::string str() const;
};

// A word c_1 c_2 ... c_k; acting on a state, c_k acts first.
using Word = std::vector<Generator>;

Word parse_word(const std::string& text);

// Connectivity on the cylinder. Endpoint p < N is bottom site p+1, p >= N is top site p-N+1.
// disp[p] is the displacement, in the universal cover, from p to its partner.
class AffineDiagram {
public:
    AffineDiagram() = default;
    AffineDiagram(int N, std::vector<int> partner, std::vector<int> disp, int loop_beta = 0, int loop_alpha = 0);

    static AffineDiagram generator(const Generator& g, int N);
    static AffineDiagram identity(int N) { return generator(Generator::id(), N); }
    static AffineDiagram from_word(const Word& w, int N);

    int n_sites() const { return N_; }
    int partner(int p) const { return partner_[p]; }
    int disp(int p) const { return disp_[p]; }
    // Net seam crossings of the chord starting at p.
    int winding(int p) const;
    int loop_beta() const { return loop_beta_; }
    int loop_alpha() const { return loop_alpha_; }
    int through_lines() const;

    // Same connectivity, ignoring loop weights.
    bool same_connectivity(const AffineDiagram& o) const {
        return N_ == o.N_ && partner_ == o.partner_ && disp_ == o.disp_;
    }
    friend bool operator==(const AffineDiagram& a, const AffineDiagram& b) {
        return a.same_connectivity(b) && a.loop_beta_ == b.loop_beta_ && a.loop_alpha_ == b.loop_alpha_;
    }

    std::string ascii() const;

private:
    int N_ = 0;
    std::vector<int> partner_;
    std::vector<int> disp_;
    int loop_beta_ = 0;
    int loop_alpha_ = 0;
};

// Stacks `top` on `bottom`: the algebra product bottom * top.
AffineDiagram compose(const AffineDiagram& top, const AffineDiagram& bottom);
// Algebra product a * b, with b drawn on top of a.
inline AffineDiagram operator*(const AffineDiagram& a, const AffineDiagram& b) { return compose(b, a); }

struct ActWeight {
    int n_beta = 0;
    int n_alpha = 0;
    int delta = 0;
    // Per defect of the input state, in left-to-right order.
    std::vector<int> defect_delta;
};

struct ActResult {
    LinkState state;
    ActWeight weight;
};

struct ActOptions {
    // With false, two joined defects are dropped instead of killing the state.
    bool kill_joined_defects = true;
};

std::optional<ActResult> act_on_link(const AffineDiagram& D, const LinkState& w, ActOptions opt = {});

// Left-right mirror of a link state: site s goes to N+1-s.
LinkState reflect_state(const LinkState& w);

}  // namespace eptl
