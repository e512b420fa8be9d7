#include "subduction/matrix.hpp"

#include <stdexcept>

namespace subduction {

CoeffMatrix CoeffMatrix::identity(std::size_t n) {
    CoeffMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = SurdSum(1);
    return m;
}

CoeffMatrix CoeffMatrix::transpose() const {
    CoeffMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    }
    t.row_labels_ = col_labels_;
    t.col_labels_ = row_labels_;
    return t;
}

bool CoeffMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i + 1; j < cols_; ++j) {
            if (at(i, j) != at(j, i)) return false;
        }
    }
    return true;
}

bool CoeffMatrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

bool CoeffMatrix::is_zero() const {
    for (const auto& x : data_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

SurdSum CoeffMatrix::trace() const {
    SurdSum t;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

CoeffMatrix CoeffMatrix::select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    CoeffMatrix s(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) s.at(i, j) = at(rows[i], cols[j]);
    }
    if (!row_labels_.empty()) {
        for (auto r : rows) s.row_labels_.push_back(row_labels_.at(r));
    }
    if (!col_labels_.empty()) {
        for (auto c : cols) s.col_labels_.push_back(col_labels_.at(c));
    }
    return s;
}

std::vector<double> CoeffMatrix::to_doubles() const {
    std::vector<double> out;
    out.reserve(data_.size());
    for (const auto& x : data_) out.push_back(x.to_double());
    return out;
}

CoeffMatrix operator*(const CoeffMatrix& a, const CoeffMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
    CoeffMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const SurdSum& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const SurdSum& y = b.at(k, j);
                if (!y.is_zero()) c.at(i, j).add_scaled(x, y);
            }
        }
    }
    c.row_labels_ = a.row_labels_;
    c.col_labels_ = b.col_labels_;
    return c;
}

CoeffMatrix operator+(const CoeffMatrix& a, const CoeffMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix dimension mismatch");
    CoeffMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
}

CoeffMatrix operator-(const CoeffMatrix& a, const CoeffMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix dimension mismatch");
    CoeffMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
}

CoeffMatrix operator*(const SurdSum& s, const CoeffMatrix& a) {
    CoeffMatrix c = a;
    for (auto& x : c.data_) x = s * x;
    return c;
}

}  // namespace subduction
