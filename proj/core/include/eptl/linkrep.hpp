#pragma once

#include <optional>
#include <vector>

#include "eptl/diagrams.hpp"
#include "eptl/matrix.hpp"

namespace eptl {

// Twist assignment: defect i (left to right) carries v^{exps[i]}; empty means v^{uniform} for all.
struct Twist {
    int uniform = 1;
    std::vector<int> per_defect;

    static Twist single(int e = 1) { return Twist{e, {}}; }
    static Twist vector(std::vector<int> e) { return Twist{1, std::move(e)}; }
    int exponent(const std::vector<int>& defect_delta) const;
    Twist inverted() const;
};

// beta^nb alpha^na v^e with beta = u^2+u^-2, alpha = v^N+v^-N.
LaurentPoly loop_weight(int n_beta, int n_alpha, int v_exp, int N);

std::vector<std::string> state_labels(const std::vector<LinkState>& basis);

RingMatrix omega_on_basis(const AffineDiagram& D, const std::vector<LinkState>& basis, const Twist& tw = {});
RingMatrix omega_generator(const Generator& g, int N, int d, const Twist& tw = {});
// Matrix of a word, built from the composed diagram.
RingMatrix omega_matrix(const Word& w, int N, int d, const Twist& tw = {});
// Same word as an ordered product of generator matrices.
RingMatrix omega_matrix_product(const Word& w, int N, int d, const Twist& tw = {});
RingMatrix link_hamiltonian(int N, int d, const Twist& tw = {});

struct GramClosure {
    int n_beta = 0;
    int n_alpha = 0;
    // Leftward displacement of each defect of w1, left to right.
    std::vector<int> defect_delta;
};

// Closure of w1 against the mirror image of w2; nullopt when defects of the same state meet.
std::optional<GramClosure> gram_closure(const LinkState& w1, const LinkState& w2);
LaurentPoly gram_pair(const LinkState& w1, const LinkState& w2, const Twist& tw = {});

// Entry (a, b) is <basis[b] | basis[a]>, the convention under which the Gram matrix factorizes
// through the intertwiner.
RingMatrix gram_matrix_on(const std::vector<LinkState>& basis, const Twist& tw = {});
// Periodic Gram matrix on the full d-defect basis.
RingMatrix gram_matrix_tilde(int N, int d);
// Gram matrix on the states without seam-crossing arcs, with per-defect twists.
RingMatrix gram_matrix_open(int N, int d, const Twist& tw);

// Dense link vector helpers.
using LinkVector = std::vector<LaurentPoly>;
LinkVector apply(const RingMatrix& m, const LinkVector& x);

}  // namespace eptl
