#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "subduction/surd.hpp"

namespace subduction {

// Dense row-major matrix over SurdSum. Row and column labels are free-form
// strings carried along for serialization.
class CoeffMatrix {
public:
    CoeffMatrix() = default;
    CoeffMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static CoeffMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    SurdSum& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const SurdSum& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<std::string>& row_labels() { return row_labels_; }
    std::vector<std::string>& col_labels() { return col_labels_; }
    const std::vector<std::string>& row_labels() const { return row_labels_; }
    const std::vector<std::string>& col_labels() const { return col_labels_; }

    CoeffMatrix transpose() const;
    bool is_symmetric() const;
    bool is_identity() const;
    bool is_zero() const;
    SurdSum trace() const;
    // Submatrix on the given rows and columns, labels included.
    CoeffMatrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
    std::vector<double> to_doubles() const;

    friend CoeffMatrix operator*(const CoeffMatrix& a, const CoeffMatrix& b);
    friend CoeffMatrix operator+(const CoeffMatrix& a, const CoeffMatrix& b);
    friend CoeffMatrix operator-(const CoeffMatrix& a, const CoeffMatrix& b);
    friend CoeffMatrix operator*(const SurdSum& s, const CoeffMatrix& a);
    // Matrices compare by entries only; labels are metadata.
    friend bool operator==(const CoeffMatrix& a, const CoeffMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<SurdSum> data_;
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
};

}  // namespace subduction
