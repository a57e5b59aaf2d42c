#pragma once

#include <cstddef>
#include <vector>

#include "strat/error.hpp"
#include "strat/laurent.hpp"

namespace strat {

// Dense row-major matrix. Vectors are rows; maps act on the right (x -> x*A),
// so a map from rank-m to rank-n is an m x n matrix and composition is
// left-to-right matrix multiplication.
template <class T>
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(size_t r, size_t c) : rows_(r), cols_(c), data_(r * c) {}
  Mat(size_t r, size_t c, const T& fill) : rows_(r), cols_(c), data_(r * c, fill) {}

  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  T& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const T& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  void set_row(size_t i, const std::vector<T>& r) {
    require(r.size() == cols_, "DimensionMismatch", "set_row size");
    std::copy(r.begin(), r.end(), data_.begin() + i * cols_);
  }

  Mat operator+(const Mat& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "DimensionMismatch", "matrix +");
    Mat r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
  }
  Mat operator-(const Mat& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "DimensionMismatch", "matrix -");
    Mat r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
  }
  Mat operator*(const Mat& o) const {
    require(cols_ == o.rows_, "DimensionMismatch", "matrix *");
    Mat r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        const T& a = at(i, k);
        if (a == T(0)) continue;
        for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
      }
    return r;
  }
  Mat operator*(const T& c) const {
    Mat r = *this;
    for (auto& x : r.data_) x = x * c;
    return r;
  }
  Mat operator-() const {
    Mat r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }
  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!(x == T(0))) return false;
    return true;
  }

  // Block placement helper.
  void paste(const Mat& m, size_t r0, size_t c0) {
    for (size_t i = 0; i < m.rows_; ++i)
      for (size_t j = 0; j < m.cols_; ++j) at(r0 + i, c0 + j) = m.at(i, j);
  }
  Mat block(size_t r0, size_t c0, size_t r, size_t c) const {
    Mat m(r, c);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j) m.at(i, j) = at(r0 + i, c0 + j);
    return m;
  }

private:
  size_t rows_, cols_;
  std::vector<T> data_;
};

using KMat = Mat<Laurent>;
using QMat = Mat<Frac>;
using FMat = Mat<FieldElem>;

// Row vector as flat std::vector helpers.
template <class T>
std::vector<T> mul_row(const std::vector<T>& x, const Mat<T>& a) {
  require(x.size() == a.rows(), "DimensionMismatch", "row * matrix");
  std::vector<T> r(a.cols(), T(0));
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == T(0)) continue;
    for (size_t j = 0; j < a.cols(); ++j) r[j] += x[i] * a.at(i, j);
  }
  return r;
}

KMat to_kmat(const std::vector<std::vector<Laurent>>& rows, size_t cols);
QMat to_qmat(const KMat& a);
FMat specialize(const KMat& a, const Specialization& s);

// Exact determinant by fraction-free (Bareiss) elimination; valid over any
// integral domain with exact division.
Laurent det_bareiss(const KMat& a);

// Direct sum placement of square action matrices.
KMat diag_join(const KMat& a, const KMat& b);

}  // namespace strat
