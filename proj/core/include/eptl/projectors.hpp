#pragma once

#include <utility>
#include <vector>

#include "eptl/check.hpp"
#include "eptl/linkrep.hpp"

namespace eptl {

// Cap/cup joining sites a and b (a < b) straight across, all other strands vertical.
// Sites strictly between a and b must be paired among themselves in the states it acts on.
AffineDiagram bridge_generator(int N, int a, int b);

// Wenzl-Jones projector on n strands in product form
//   P_1 = id,  P_{m+1} = P_m (1 + c_m e_m)(1 + c_{m-1} e_{m-1}) ... (1 + c_1 e_1),  c_k = S_k/S_{k+1},
// stored as numerator factors (S_{k+1} + S_k e_k) over one shared denominator.
class TLWord {
public:
    static TLWord wenzl_jones(int n);

    int n() const { return n_; }
    // Generator indices of the factors, leftmost first.
    const std::vector<int>& factors() const { return factors_; }
    // Factor i is S_{c+1} + S_c e_{factors()[i]} with c = coefficients()[i].
    const std::vector<int>& coefficients() const { return coef_; }
    const LaurentPoly& denominator() const { return den_; }

    // Same combination with every word reversed.
    TLWord reversed() const;
    // Same combination with e_k relabelled e_{n-k}.
    TLWord mirrored() const;

    struct Entry {
        RingFraction coeff;
        std::vector<int> word;
    };
    // Expanded linear combination; words are reduced only by e_k^2 = beta e_k.
    std::vector<Entry> expand() const;

private:
    int n_ = 1;
    std::vector<int> factors_;
    std::vector<int> coef_;
    LaurentPoly den_ = LaurentPoly(1);
};

// Action of one diagram on basis vectors, computed on first use.
class LazyAction {
public:
    LazyAction(AffineDiagram D, const std::vector<LinkState>& basis, Twist tw = {});
    // Row index of the image of basis vector c (-1 if it vanishes) and its weight.
    std::pair<int, const LaurentPoly*> image(int c) const;

private:
    AffineDiagram D_;
    const std::vector<LinkState>* basis_;
    Twist tw_;
    mutable std::vector<char> done_;
    mutable std::vector<int> row_;
    mutable std::vector<LaurentPoly> weight_;
};

// Applies the numerator of a TLWord whose generator k acts as gens[k-1].
LinkVector apply_tlword(const TLWord& p, const std::vector<LazyAction>& gens, LinkVector x);

// Numerator matrix of WJ_n on the window of sites start..start+n-1 of the d-defect module;
// the operator is num / word.denominator().
RingMatrix wj_matrix(const TLWord& word, int N, int d, int start, const Twist& tw = {});
// Oracle: P_n = P_{n-1} + c_{n-1} P_{n-1} e_{n-1} P_{n-1}; returns numerator and denominator.
std::pair<RingMatrix, LaurentPoly> wj_matrix_recursive(int n, int N, int d, int start);

struct UTransform {
    RingMatrix num;
    std::vector<LaurentPoly> col_den;
};
// Change of basis: strip the arcs that stay away from the seam, project the remaining
// d+2r strands with WJ_{d+2r}, put the arcs back.
UTransform u_transform(int N, int d);

struct GammaMatrix {
    RingMatrix num;  // Gamma(a,b) = num(a,b) / (den[a] den[b])
    std::vector<LaurentPoly> den;
};
GammaMatrix gamma_matrix(int N, int d);

enum class KMode { ClosedForm, Recursion, GramPairing };
// K_{d,r} with alpha = v^N + v^-N; N defaults to d + 2r.
RingFraction k_factor(int d, int r, KMode mode, int N = -1);

// Twist exponents (0..0, 1..1, 0..0) for the image of the r-stratum under C.
std::vector<int> stratum_twist(int d, int r);

CheckReport wj_properties_check(int n, int N, int d);
CheckReport gamma_block_check(int N, int d);
CheckReport u_triangular_check(int N, int d);
CheckReport gram_recursion_check(int N, int d);
CheckReport gram_corollary_check(int N, int d);

}  // namespace eptl
