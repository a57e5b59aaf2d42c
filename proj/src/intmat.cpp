#include "strat/intmat.hpp"

namespace strat {

namespace {

void row_axpy(ZMat& m, size_t dst, size_t src, const mpz_class& c) {
  for (size_t j = 0; j < m.cols(); ++j) m.at(dst, j) += c * m.at(src, j);
}

void row_swap(ZMat& m, size_t a, size_t b) {
  for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void row_neg(ZMat& m, size_t a) {
  for (size_t j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

}  // namespace

HnfResult hnf(const ZMat& a) {
  size_t m = a.rows(), n = a.cols();
  HnfResult res{a, ZMat::identity(m), 0, {}};
  ZMat& h = res.h;
  ZMat& u = res.u;
  size_t r = 0;
  for (size_t c = 0; c < n && r < m; ++c) {
    // Euclid among rows r..m-1 in column c.
    while (true) {
      size_t best = m;
      for (size_t i = r; i < m; ++i)
        if (h.at(i, c) != 0 &&
            (best == m || abs(h.at(i, c)) < abs(h.at(best, c))))
          best = i;
      if (best == m) break;
      if (best != r) {
        row_swap(h, r, best);
        row_swap(u, r, best);
      }
      bool done = true;
      for (size_t i = r + 1; i < m; ++i) {
        if (h.at(i, c) == 0) continue;
        mpz_class q = h.at(i, c) / h.at(r, c);  // truncated division is fine here
        row_axpy(h, i, r, -q);
        row_axpy(u, i, r, -q);
        if (h.at(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (r < m && h.at(r, c) != 0) {
      if (h.at(r, c) < 0) {
        row_neg(h, r);
        row_neg(u, r);
      }
      // Reduce entries above the pivot into [0, pivot).
      for (size_t i = 0; i < r; ++i) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), h.at(i, c).get_mpz_t(), h.at(r, c).get_mpz_t());
        if (q != 0) {
          row_axpy(h, i, r, -q);
          row_axpy(u, i, r, -q);
        }
      }
      res.pivot_col.push_back(c);
      ++r;
    }
  }
  res.rank = r;
  return res;
}

SnfResult snf(const ZMat& a) {
  size_t m = a.rows(), n = a.cols();
  SnfResult res{a, ZMat::identity(m), ZMat::identity(n), 0, {}};
  ZMat& d = res.d;
  ZMat& u = res.u;
  ZMat& v = res.v;

  auto col_axpy = [&](ZMat& mat, size_t dst, size_t src, const mpz_class& c) {
    for (size_t i = 0; i < mat.rows(); ++i) mat.at(i, dst) += c * mat.at(i, src);
  };
  auto col_swap = [&](ZMat& mat, size_t x, size_t y) {
    for (size_t i = 0; i < mat.rows(); ++i) std::swap(mat.at(i, x), mat.at(i, y));
  };

  size_t t = 0;
  while (t < m && t < n) {
    // Find a nonzero pivot in the remaining block.
    size_t pi = m, pj = n;
    for (size_t i = t; i < m; ++i)
      for (size_t j = t; j < n; ++j)
        if (d.at(i, j) != 0 &&
            (pi == m || abs(d.at(i, j)) < abs(d.at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    if (pi != t) {
      row_swap(d, t, pi);
      row_swap(u, t, pi);
    }
    if (pj != t) {
      col_swap(d, t, pj);
      col_swap(v, t, pj);
    }
    bool clean = true;
    for (size_t i = t + 1; i < m; ++i)
      if (d.at(i, t) != 0) {
        mpz_class q = d.at(i, t) / d.at(t, t);
        row_axpy(d, i, t, -q);
        row_axpy(u, i, t, -q);
        if (d.at(i, t) != 0) clean = false;
      }
    for (size_t j = t + 1; j < n; ++j)
      if (d.at(t, j) != 0) {
        mpz_class q = d.at(t, j) / d.at(t, t);
        col_axpy(d, j, t, -q);
        col_axpy(v, j, t, -q);
        if (d.at(t, j) != 0) clean = false;
      }
    if (!clean) continue;
    // Divisibility sweep: d(t,t) must divide everything below-right.
    bool retry = false;
    for (size_t i = t + 1; i < m && !retry; ++i)
      for (size_t j = t + 1; j < n && !retry; ++j)
        if (d.at(i, j) % d.at(t, t) != 0) {
          row_axpy(d, t, i, 1);
          row_axpy(u, t, i, 1);
          retry = true;
        }
    if (retry) continue;
    if (d.at(t, t) < 0) {
      row_neg(d, t);
      row_neg(u, t);
    }
    ++t;
  }
  res.rank = t;
  for (size_t i = 0; i < t; ++i) res.invariants.push_back(d.at(i, i));
  return res;
}

ZMat zmat_from_k(const KMat& a) {
  ZMat r(a.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      const Laurent& x = a.at(i, j);
      require(x.is_constant(), "MixedRings", "non-constant entry in integer matrix");
      r.at(i, j) = x.coeff(0);
    }
  return r;
}

KMat kmat_from_z(const ZMat& a) {
  KMat r(a.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = Laurent(a.at(i, j));
  return r;
}

}  // namespace strat
