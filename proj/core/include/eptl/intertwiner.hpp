#pragma once

#include <string>
#include <vector>

#include "eptl/check.hpp"
#include "eptl/linkrep.hpp"
#include "eptl/spinrep.hpp"

namespace eptl {

// T~_{i,j} = v^{j-i} u sigma^-_j + v^{-(j-i)} u^{-1} sigma^-_i, sites taken mod N.
SpinVector t_tilde_apply(int i, int j, const SpinVector& x);
// Image of a link state: product of T~ over its arcs applied to the all-up vector.
SpinVector i_tilde(const LinkState& w);
// Columns are images of enumerate_states(N, d), rows follow SpinIndex(N, d).
RingMatrix i_matrix(int N, int d);

// (I(u, v^-1))^T I(u, v) against the Gram matrix.
CheckReport factorization_check(int N, int d);
// I omega(c) = tau(c) I for every generator c.
CheckReport intertwining_check(int N, int d);

namespace formula {
// prod_k (S_{d+k+1}/S_k)^{dim V_N^{d+2k}}
RingFraction det_gram_open(int N, int d);
// prod_k (alpha^2 - 4 C_{k+d/2}^2)^{binom(N, (N-d)/2 - k)}
LaurentPoly det_gram_tilde(int N, int d);
// prod_k <k+d/2>^{binom(N, (N-d)/2 - k)}
LaurentPoly det_intertwiner(int N, int d);
// Leading exponents of det I in u and in v.
long long X1(int N, int d);
long long X2(int N, int d);
}  // namespace formula

struct CriticalSample {
    double lambda = 0;
    double mu = 0;
    bool predicted = false;
    int which_k = 0;  // first k with a vanishing bracket, 0 if none
    double min_bracket = 0;
    double min_singular_value = 0;
};

// Smallest singular value of the numeric intertwiner scaled to unit max entry.
double min_singular_value(const NumMatrix& m);
CriticalSample critical_sample(int N, int d, double lambda, double mu, double tol = 1e-8);
CriticalSample critical_sample(int N, int d, const RingMatrix& I, double lambda, double mu, double tol = 1e-8);

}  // namespace eptl
