#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace cyclewalk {

// Minimal dense matrix over an exact coefficient type. Multiplication
// seeds the accumulator with the first product so the element type needs
// no default "zero" (cyclotomic elements carry their order).
template <class T>
class DenseMatrix {
  public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const DenseMatrix& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
    }
    bool operator!=(const DenseMatrix& rhs) const { return !(*this == rhs); }

    DenseMatrix transposed() const {
        DenseMatrix out;
        out.rows_ = cols_;
        out.cols_ = rows_;
        out.data_.reserve(data_.size());
        for (std::size_t j = 0; j < cols_; ++j)
            for (std::size_t i = 0; i < rows_; ++i) out.data_.push_back((*this)(i, j));
        return out;
    }

    DenseMatrix operator*(const DenseMatrix& rhs) const {
        if (cols_ != rhs.rows_ || cols_ == 0) {
            throw std::domain_error("matrix dimension mismatch");
        }
        DenseMatrix out;
        out.rows_ = rows_;
        out.cols_ = rhs.cols_;
        out.data_.reserve(rows_ * rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                T acc = (*this)(i, 0) * rhs(0, j);
                for (std::size_t k = 1; k < cols_; ++k) {
                    acc += (*this)(i, k) * rhs(k, j);
                }
                out.data_.push_back(std::move(acc));
            }
        }
        return out;
    }

    DenseMatrix operator+(const DenseMatrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
            throw std::domain_error("matrix dimension mismatch");
        }
        DenseMatrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
        return out;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

}  // namespace cyclewalk
