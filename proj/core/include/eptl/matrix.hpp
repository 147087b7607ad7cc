#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "eptl/ring.hpp"

namespace eptl {

using NumMatrix = Eigen::MatrixXcd;

// Dense matrix over the Laurent ring.
class RingMatrix {
public:
    RingMatrix() = default;
    RingMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static RingMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    LaurentPoly& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const LaurentPoly& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;

    RingMatrix transpose() const;
    RingMatrix invert_v() const;
    RingMatrix operator*(const RingMatrix& b) const;
    RingMatrix operator+(const RingMatrix& b) const;
    RingMatrix operator-(const RingMatrix& b) const;
    RingMatrix scaled(const LaurentPoly& c) const;
    bool is_zero() const;
    friend bool operator==(const RingMatrix& a, const RingMatrix& b);
    friend bool operator!=(const RingMatrix& a, const RingMatrix& b) { return !(a == b); }

    // Entries at rows/cols listed in `idx`.
    RingMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
    RingMatrix permuted(const std::vector<int>& row_perm, const std::vector<int>& col_perm) const;

    NumMatrix eval(cplx u, cplx v) const;
    std::size_t nonzeros() const;

    // {"rows","cols","row_labels","col_labels","entries":[[poly,...],...]} with the polynomial schema.
    nlohmann::json to_json() const;
    static RingMatrix from_json(const nlohmann::json& j);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<LaurentPoly> a_;
};

// First entry where a and b differ, as "(i,j): a vs b"; empty if equal.
std::string first_difference(const RingMatrix& a, const RingMatrix& b);

}  // namespace eptl
