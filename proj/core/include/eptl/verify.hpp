#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "eptl/check.hpp"
#include "eptl/matrix.hpp"
#include "eptl/diagrams.hpp"

namespace eptl {

// Matrix of a generator in some representation.
using RepFn = std::function<RingMatrix(const Generator&)>;
RepFn link_rep(int N, int d);
RepFn spin_rep(int N, int d);

// Defining relations of the enlarged periodic algebra, including E Omega^{+-1} E = alpha E
// and F Omega^{+-1} F = alpha F for even N.
CheckReport relations_check(int N, const RepFn& rep, int dim);

// Exact determinant of the periodic Gram matrix against the product formula, up to sign.
CheckReport det_gram_check(int N, int d);
// Index k with a = i^k b, or -1.
int unit_between(const LaurentPoly& a, const LaurentPoly& b);
// Exact determinant of the intertwiner against the product formula, plus its u,v -> infinity monomial.
// Even d: up to sign. Odd d: up to a power of i.
CheckReport det_intertwiner_check(int N, int d);
// Numeric comparisons at random unit-circle points, compared through log|det| and phase up to sign.
CheckReport det_gram_numeric_check(int N, int d, std::uint64_t seed, int points, double tol);
CheckReport det_intertwiner_numeric_check(int N, int d, std::uint64_t seed, int points, double tol);
// det G of the open five-site, one-defect module with per-defect twist: (beta^2-1)^4 (beta^2-2).
CheckReport open_gram_example_check();

struct SpectrumComparison {
    std::vector<cplx> link;
    std::vector<cplx> spin;
    double max_deviation = 0;
    bool critical = false;
    double min_bracket = 0;
};
// Eigenvalues of omega_d(H) and tau(H) on the S^z = d/2 sector, paired greedily after sorting.
SpectrumComparison spectrum_compare(int N, int d, double lambda, double mu);

struct Failure {
    int N = 0;
    int d = 0;
    std::string identity;
    std::string witness;
};

struct VerificationReport {
    std::string suite;
    long cases = 0;
    std::vector<Failure> failures;
    double seconds = 0;
    bool ok() const { return failures.empty(); }
    nlohmann::json to_json() const;
};

struct VerifyOptions {
    int n_max = 6;
    int d = -1;  // all parities when negative
    std::uint64_t seed = 0;
    int threads = 1;
};

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for unknown suites or bounds outside 2..10.
VerificationReport run_suite(const std::string& suite, const VerifyOptions& opt);

}  // namespace eptl
