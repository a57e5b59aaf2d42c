#pragma once

#include <gmpxx.h>

#include "strat/matrix.hpp"

namespace strat {

using ZMat = Mat<mpz_class>;

// Row-style Hermite normal form: u * a = h with u unimodular, h in row
// echelon form with positive pivots and entries above each pivot reduced to
// [0, pivot).
struct HnfResult {
  ZMat h;
  ZMat u;
  size_t rank = 0;
  std::vector<size_t> pivot_col;  // one per nonzero row of h
};

HnfResult hnf(const ZMat& a);

// Smith normal form: u * a * v = d, d diagonal with d_i | d_{i+1}, d_i >= 0.
struct SnfResult {
  ZMat d;
  ZMat u;
  ZMat v;
  size_t rank = 0;
  std::vector<mpz_class> invariants;  // nonzero diagonal entries
};

SnfResult snf(const ZMat& a);

ZMat zmat_from_k(const KMat& a);  // requires constant entries
KMat kmat_from_z(const ZMat& a);

}  // namespace strat
