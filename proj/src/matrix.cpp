#include "strat/matrix.hpp"

namespace strat {

KMat to_kmat(const std::vector<std::vector<Laurent>>& rows, size_t cols) {
  KMat m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

QMat to_qmat(const KMat& a) {
  QMat r(a.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = Frac(a.at(i, j));
  return r;
}

FMat specialize(const KMat& a, const Specialization& s) {
  FMat r(a.rows(), a.cols(), FieldElem(s.field));
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = specialize(a.at(i, j), s);
  return r;
}

Laurent det_bareiss(const KMat& a) {
  require(a.rows() == a.cols(), "DimensionMismatch", "determinant of non-square matrix");
  size_t n = a.rows();
  if (n == 0) return Laurent(1);
  KMat m = a;
  Laurent prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      size_t p = k + 1;
      while (p < n && m.at(p, k).is_zero()) ++p;
      if (p == n) return Laurent();
      for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Laurent v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        auto q = Laurent::divide_exact(v, prev);
        require(q.has_value(), "InternalError", "Bareiss division failed");
        m.at(i, j) = *q;
      }
    prev = m.at(k, k);
  }
  Laurent d = m.at(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

KMat diag_join(const KMat& a, const KMat& b) {
  KMat r(a.rows() + b.rows(), a.cols() + b.cols());
  r.paste(a, 0, 0);
  r.paste(b, a.rows(), a.cols());
  return r;
}

}  // namespace strat
