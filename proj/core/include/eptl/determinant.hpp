#pragma once

#include <utility>

#include "eptl/matrix.hpp"

namespace eptl {

// Laplace expansion; intended as an oracle for small sizes.
LaurentPoly det_cofactor(const RingMatrix& m);
// Fraction-free elimination with exact Laurent division.
LaurentPoly det_bareiss(const RingMatrix& m);
// Evaluation at points modulo word-size primes, dense interpolation and Chinese remaindering,
// with a coefficient bound that makes the reconstruction exact.
LaurentPoly det_modular(const RingMatrix& m);
// Picks a method by size.
LaurentPoly det_exact(const RingMatrix& m);

cplx det_numeric(const NumMatrix& m);
// log|det| and det/|det|, safe where the determinant itself overflows.
std::pair<double, cplx> det_numeric_log(const NumMatrix& m);
// Same, with the entries evaluated at u = e^{i lambda/2}, v = e^{i mu} and factored in long double.
std::pair<double, cplx> det_numeric_log_extended(const RingMatrix& m, double lambda, double mu);

}  // namespace eptl
