#pragma once

#include <optional>

#include "strat/matrix.hpp"

namespace strat {

// Gaussian elimination over an exact field type F (Frac or FieldElem).
// F needs +,-,*,/, unary -, ==, is_zero(), and a usable zero via F(0) or a
// supplied prototype for fields carrying runtime descriptors.

template <class F>
struct Rref {
  Mat<F> r;
  std::vector<size_t> pivot_cols;
  size_t rank = 0;
};

template <class F>
Rref<F> rref(Mat<F> a) {
  Rref<F> out;
  size_t m = a.rows(), n = a.cols();
  size_t r = 0;
  for (size_t c = 0; c < n && r < m; ++c) {
    size_t p = m;
    for (size_t i = r; i < m; ++i)
      if (!a.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p == m) continue;
    if (p != r)
      for (size_t j = 0; j < n; ++j) std::swap(a.at(r, j), a.at(p, j));
    F inv = a.at(r, c).inverse();
    for (size_t j = c; j < n; ++j) a.at(r, j) = a.at(r, j) * inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      F f = a.at(i, c);
      for (size_t j = c; j < n; ++j) a.at(i, j) = a.at(i, j) - f * a.at(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.r = std::move(a);
  out.rank = r;
  return out;
}

template <class F>
size_t rank(const Mat<F>& a) {
  return rref(a).rank;
}

// Basis of {x : x * a = 0} as rows.
template <class F>
Mat<F> left_kernel(const Mat<F>& a, const F& zero, const F& one) {
  auto rr = rref(a.transpose());
  size_t m = a.rows();
  std::vector<bool> is_pivot(m, false);
  for (size_t c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<size_t> free_cols;
  for (size_t c = 0; c < m; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat<F> k(free_cols.size(), m, zero);
  for (size_t fi = 0; fi < free_cols.size(); ++fi) {
    size_t fc = free_cols[fi];
    k.at(fi, fc) = one;
    for (size_t pr = 0; pr < rr.pivot_cols.size(); ++pr)
      k.at(fi, rr.pivot_cols[pr]) = -rr.r.at(pr, fc);
  }
  return k;
}

// Some x with x * a = b, if any.
template <class F>
std::optional<std::vector<F>> solve_left(const Mat<F>& a, const std::vector<F>& b,
                                         const F& zero) {
  require(b.size() == a.cols(), "DimensionMismatch", "solve_left size");
  // Solve a^T x^T = b^T by rref of [a^T | b^T].
  size_t m = a.rows(), n = a.cols();
  Mat<F> aug(n, m + 1, zero);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < m; ++j) aug.at(i, j) = a.at(j, i);
    aug.at(i, m) = b[i];
  }
  auto rr = rref(std::move(aug));
  std::vector<F> x(m, zero);
  for (size_t pr = 0; pr < rr.pivot_cols.size(); ++pr) {
    size_t pc = rr.pivot_cols[pr];
    if (pc == m) return std::nullopt;  // inconsistent
    x[pc] = rr.r.at(pr, m);
  }
  return x;
}

// Row space basis in rref form (canonical).
template <class F>
Mat<F> row_basis(const Mat<F>& a) {
  auto rr = rref(a);
  Mat<F> b(rr.rank, a.cols(), F(0));
  for (size_t i = 0; i < rr.rank; ++i)
    for (size_t j = 0; j < a.cols(); ++j) b.at(i, j) = rr.r.at(i, j);
  return b;
}

// Membership of row vector in the row space.
template <class F>
bool in_row_space(const Mat<F>& a, const std::vector<F>& v, const F& zero) {
  return solve_left(a, v, zero).has_value();
}

template <class F>
bool is_invertible(const Mat<F>& a) {
  return a.rows() == a.cols() && rank(a) == a.rows();
}

template <class F>
std::optional<Mat<F>> inverse(const Mat<F>& a, const F& zero, const F& one) {
  if (a.rows() != a.cols()) return std::nullopt;
  size_t n = a.rows();
  Mat<F> aug(n, 2 * n, zero);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = one;
  }
  auto rr = rref(std::move(aug));
  if (rr.rank != n || rr.pivot_cols[n - 1] != n - 1) return std::nullopt;
  return rr.r.block(0, n, n, n);
}

}  // namespace strat
