#pragma once

#include <optional>
#include <vector>

#include "strat/laurent.hpp"

namespace strat {
namespace gb {

// Strong Groebner engine for submodules of free Z[t]-modules under the
// position-over-term order (lower index dominates; within a position, higher
// t-degree dominates).  Coefficients are integers, so S-pairs are paired with
// gcd (Bezout) combinations, and normal forms reduce coefficients to
// canonical residues modulo the gcd of all applicable leading coefficients.
//
// Entries must lie in Z[t] (no negative exponents); the Laurent layer above
// handles unit shifts and t-saturation.

using PolyVec = std::vector<Laurent>;

bool is_zero(const PolyVec& v);
// Leading position, or npos when zero.
size_t lead_pos(const PolyVec& v);

struct Elem {
  PolyVec v;
  std::vector<Laurent> rep;  // combination over the original generators (optional)
};

class Engine {
public:
  Engine(size_t ambient, bool track_reps);

  void add_generator(const PolyVec& g);
  void compute();

  size_t ambient() const { return ambient_; }
  size_t num_generators() const { return ngens_; }
  const std::vector<Elem>& basis() const { return basis_; }

  // Canonical normal form; when rep_out is non-null and tracking is on,
  // fills coefficients with  input = sum rep_out[i] * generator_i + nf.
  PolyVec normal_form(PolyVec f, std::vector<Laurent>* rep_out) const;

  bool contains(const PolyVec& f) const;

private:
  struct Lead {
    size_t pos;
    int deg;
    mpz_class lc;
  };
  static Lead lead(const PolyVec& v);

  void push_elem(Elem e);
  bool reduce_step(PolyVec& f, std::vector<Laurent>* rep,
                   const std::vector<size_t>& skip) const;
  PolyVec nf_excluding(PolyVec f, std::vector<Laurent>* rep, size_t skip_index) const;
  void interreduce();
  void sort_canonical();

  size_t ambient_;
  bool track_;
  size_t ngens_ = 0;
  std::vector<Elem> basis_;
  bool computed_ = false;
};

// Convenience: reduced strong GB of the module generated by gens.
std::vector<PolyVec> strong_basis(size_t ambient, const std::vector<PolyVec>& gens);

}  // namespace gb
}  // namespace strat
