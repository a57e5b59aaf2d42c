#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace strat {

// The two coefficient domains the library supports.  Integers means K = Z
// (fraction field Q); LaurentIntegers means K = Z[t,t^-1] (fraction field
// Q(t)).  Constant Laurent values double as integers, so one scalar type
// serves both rings; containers carry the ring tag and enforce constancy
// where it matters.
enum class BaseRing { Integers, LaurentIntegers };

std::string ring_name(BaseRing r);

// Sparse Laurent polynomial over Z: exponent -> nonzero coefficient.
class Laurent {
public:
  Laurent() = default;
  Laurent(long c);
  Laurent(const mpz_class& c);

  static Laurent t(int k = 1);
  static Laurent term(const mpz_class& c, int k);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  // Units of Z[t,t^-1] are +-t^k; units of Z are +-1.
  bool is_unit(BaseRing ring) const;

  const std::map<int, mpz_class>& terms() const { return coeffs_; }
  mpz_class coeff(int k) const;
  int min_exp() const;  // requires nonzero
  int max_exp() const;  // requires nonzero
  const mpz_class& leading_coeff() const;  // coefficient of max_exp
  int degree_span() const { return is_zero() ? -1 : max_exp() - min_exp(); }

  Laurent operator-() const;
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  bool operator==(const Laurent& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }
  // Total order usable as a container key (lexicographic on terms).
  bool operator<(const Laurent& o) const { return coeffs_ < o.coeffs_; }

  Laurent shifted(int k) const;  // * t^k
  Laurent bar() const;           // t -> t^-1

  // Exact division in Z[t,t^-1]; nullopt when b does not divide a.
  static std::optional<Laurent> divide_exact(const Laurent& a, const Laurent& b);
  // gcd in Z[t] up to units, returned canonical: min_exp 0, leading coeff > 0.
  static Laurent gcd(const Laurent& a, const Laurent& b);
  static Laurent content_free(const Laurent& a, mpz_class* content = nullptr);

  std::string str() const;
  static Laurent parse(const std::string& s);

private:
  void trim();
  std::map<int, mpz_class> coeffs_;
};

Laurent operator*(const mpz_class& c, const Laurent& f);

// Target field of a specialization: Q when p == 0, else the prime field F_p.
struct FieldDesc {
  unsigned long p = 0;
  bool operator==(const FieldDesc&) const = default;
  std::string name() const;
};

// Element of Q or F_p.  Integer-valued rationals coerce across fields via
// the canonical map Z -> F_p, so literals like FieldElem(1) mix freely with
// elements of any target field.
class FieldElem {
public:
  FieldElem() : fld_{0}, q_(0) {}
  FieldElem(long v) : fld_{0}, q_(v) {}
  explicit FieldElem(FieldDesc f);
  FieldElem(FieldDesc f, const mpz_class& v);
  FieldElem(FieldDesc f, const mpq_class& v);

  const FieldDesc& field() const { return fld_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElem operator-() const;
  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem inverse() const;
  FieldElem operator/(const FieldElem& o) const { return *this * o.inverse(); }
  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  const mpq_class& rat() const { return q_; }
  unsigned long residue() const { return r_; }
  std::string str() const;

private:
  FieldDesc fld_;
  mpq_class q_;           // used when p == 0
  unsigned long r_ = 0;   // used when p > 0
};

// Ring map K -> k sending t to an invertible element of k.
struct Specialization {
  FieldDesc field;
  FieldElem value;  // image of t; must be nonzero

  static Specialization make(unsigned long p, const mpz_class& c);
};

FieldElem specialize(const Laurent& f, const Specialization& s);

// Element of the fraction field K = Q or Q(t), stored reduced with the
// denominator canonical (min_exp 0, positive leading coefficient).
class Frac {
public:
  Frac() : num_(0), den_(1) {}
  Frac(long n) : num_(n), den_(1) {}
  Frac(const Laurent& n) : num_(n), den_(1) {}
  Frac(const Laurent& n, const Laurent& d);

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  Frac operator-() const;
  Frac operator+(const Frac& o) const;
  Frac operator-(const Frac& o) const;
  Frac operator*(const Frac& o) const;
  Frac inverse() const;
  Frac operator/(const Frac& o) const { return *this * o.inverse(); }
  bool operator==(const Frac& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Frac& o) const { return !(*this == o); }

  std::string str() const;

private:
  void reduce();
  Laurent num_, den_;
};

}  // namespace strat
