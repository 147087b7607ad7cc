#pragma once
#include <random>
#include <vector>
#include "eptl/ring.hpp"
#include "eptl/matrix.hpp"

namespace th {

using eptl::LaurentPoly;

inline LaurentPoly beta() { return eptl::trig::beta(); }
inline LaurentPoly alpha(int N) { return eptl::trig::alpha(N); }
inline LaurentPoly u(int k) { return LaurentPoly::u(k); }
inline LaurentPoly v(int k) { return LaurentPoly::v(k); }

inline eptl::RingMatrix from_rows(const std::vector<std::vector<LaurentPoly>>& rows) {
    eptl::RingMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    return m;
}

// Random Laurent polynomial with small integer coefficients.
inline LaurentPoly random_poly(std::mt19937_64& rng, int terms = 4, int span = 3) {
    std::uniform_int_distribution<int> e(-span, span), c(-5, 5);
    LaurentPoly p;
    for (int t = 0; t < terms; ++t) p += LaurentPoly::monomial(e(rng), e(rng), eptl::GaussRat(c(rng)));
    return p;
}

}  // namespace th
