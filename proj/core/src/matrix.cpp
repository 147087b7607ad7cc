#include "eptl/matrix.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace eptl {

RingMatrix RingMatrix::identity(int n) {
    RingMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = LaurentPoly(1);
    return m;
}

RingMatrix RingMatrix::transpose() const {
    RingMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    t.row_labels = col_labels;
    t.col_labels = row_labels;
    return t;
}

RingMatrix RingMatrix::invert_v() const {
    RingMatrix t = *this;
    for (auto& x : t.a_) x = x.invert_v();
    return t;
}

RingMatrix RingMatrix::operator*(const RingMatrix& b) const {
    if (cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    RingMatrix c(rows_, b.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const LaurentPoly& x = (*this)(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const LaurentPoly& y = b(k, j);
                if (y.is_zero()) continue;
                c(i, j) += x * y;
            }
        }
    }
    c.row_labels = row_labels;
    c.col_labels = b.col_labels;
    return c;
}

RingMatrix RingMatrix::operator+(const RingMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    RingMatrix c = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) c.a_[k] += b.a_[k];
    return c;
}

RingMatrix RingMatrix::operator-(const RingMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
    RingMatrix c = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) c.a_[k] -= b.a_[k];
    return c;
}

RingMatrix RingMatrix::scaled(const LaurentPoly& s) const {
    RingMatrix c = *this;
    for (auto& x : c.a_)
        if (!x.is_zero()) x = x * s;
    return c;
}

bool RingMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool operator==(const RingMatrix& a, const RingMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

RingMatrix RingMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    RingMatrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
    if (!row_labels.empty())
        for (int r : rows) s.row_labels.push_back(row_labels[r]);
    if (!col_labels.empty())
        for (int c : cols) s.col_labels.push_back(col_labels[c]);
    return s;
}

RingMatrix RingMatrix::permuted(const std::vector<int>& row_perm, const std::vector<int>& col_perm) const {
    return submatrix(row_perm, col_perm);
}

NumMatrix RingMatrix::eval(cplx u, cplx v) const {
    NumMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).eval(u, v);
    return m;
}

std::size_t RingMatrix::nonzeros() const {
    std::size_t c = 0;
    for (const auto& x : a_)
        if (!x.is_zero()) ++c;
    return c;
}

std::string first_difference(const RingMatrix& a, const RingMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return "shape " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
               std::to_string(b.rows()) + "x" + std::to_string(b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j))
                return "(" + std::to_string(i) + "," + std::to_string(j) + "): " + a(i, j).str() + " vs " + b(i, j).str();
    return {};
}

nlohmann::json RingMatrix::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < rows_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < cols_; ++j) row.push_back((*this)(i, j).to_json());
        rows.push_back(std::move(row));
    }
    return {{"rows", rows_}, {"cols", cols_}, {"row_labels", row_labels}, {"col_labels", col_labels}, {"entries", rows}};
}

RingMatrix RingMatrix::from_json(const nlohmann::json& j) {
    RingMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
    const auto& e = j.at("entries");
    for (int i = 0; i < m.rows_; ++i)
        for (int k = 0; k < m.cols_; ++k) m(i, k) = LaurentPoly::from_json(e.at(i).at(k));
    if (j.contains("row_labels")) m.row_labels = j["row_labels"].get<std::vector<std::string>>();
    if (j.contains("col_labels")) m.col_labels = j["col_labels"].get<std::vector<std::string>>();
    return m;
}

}  // namespace eptl
