#include "strat/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "strat/error.hpp"

namespace strat {

std::string ring_name(BaseRing r) {
  return r == BaseRing::Integers ? "Z" : "Z[t,t^-1]";
}

Laurent::Laurent(long c) {
  if (c != 0) coeffs_[0] = c;
}

Laurent::Laurent(const mpz_class& c) {
  if (c != 0) coeffs_[0] = c;
}

Laurent Laurent::t(int k) { return term(1, k); }

Laurent Laurent::term(const mpz_class& c, int k) {
  Laurent f;
  if (c != 0) f.coeffs_[k] = c;
  return f;
}

bool Laurent::is_constant() const {
  return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

bool Laurent::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

bool Laurent::is_unit(BaseRing ring) const {
  if (coeffs_.size() != 1) return false;
  const auto& [k, c] = *coeffs_.begin();
  if (c != 1 && c != -1) return false;
  return ring == BaseRing::LaurentIntegers || k == 0;
}

mpz_class Laurent::coeff(int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? mpz_class(0) : it->second;
}

int Laurent::min_exp() const {
  require(!is_zero(), "InternalError", "min_exp of zero");
  return coeffs_.begin()->first;
}

int Laurent::max_exp() const {
  require(!is_zero(), "InternalError", "max_exp of zero");
  return coeffs_.rbegin()->first;
}

const mpz_class& Laurent::leading_coeff() const {
  require(!is_zero(), "InternalError", "leading_coeff of zero");
  return coeffs_.rbegin()->second;
}

void Laurent::trim() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == 0)
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& [k, c] : r.coeffs_) c = -c;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [k, c] : o.coeffs_) coeffs_[k] += c;
  trim();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [k, c] : o.coeffs_) coeffs_[k] -= c;
  trim();
  return *this;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  r += o;
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent r = *this;
  r -= o;
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (const auto& [k1, c1] : coeffs_)
    for (const auto& [k2, c2] : o.coeffs_) r.coeffs_[k1 + k2] += c1 * c2;
  r.trim();
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) {
  *this = *this * o;
  return *this;
}

Laurent operator*(const mpz_class& c, const Laurent& f) {
  return Laurent(c) * f;
}

Laurent Laurent::shifted(int k) const {
  Laurent r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
  return r;
}

Laurent Laurent::bar() const {
  Laurent r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
  return r;
}

std::optional<Laurent> Laurent::divide_exact(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Laurent();
  // Shift both into Z[t] with minimal exponent 0, divide there, shift back.
  int sa = a.min_exp(), sb = b.min_exp();
  Laurent r = a.shifted(-sa);
  Laurent d = b.shifted(-sb);
  Laurent q;
  while (!r.is_zero()) {
    if (r.max_exp() < d.max_exp()) return std::nullopt;
    mpz_class qc = r.leading_coeff() / d.leading_coeff();
    if (qc * d.leading_coeff() != r.leading_coeff()) return std::nullopt;
    int qe = r.max_exp() - d.max_exp();
    Laurent step = term(qc, qe);
    q += step;
    r -= step * d;
  }
  return q.shifted(sa - sb);
}

Laurent Laurent::content_free(const Laurent& a, mpz_class* content) {
  if (a.is_zero()) {
    if (content) *content = 0;
    return a;
  }
  mpz_class g = 0;
  for (const auto& [e, c] : a.coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (a.leading_coeff() < 0) g = -g;
  if (content) *content = g;
  Laurent r;
  for (const auto& [e, c] : a.coeffs_) r.coeffs_[e] = c / g;
  return r.shifted(-r.min_exp());
}

namespace {

// Primitive pseudo-remainder sequence gcd on primitive polynomials in Z[t]
// with min_exp 0.
Laurent primitive_gcd(Laurent a, Laurent b) {
  while (!b.is_zero()) {
    // Pseudo-remainder: lc(b)^(da-db+1) * a = q*b + r.
    int da = a.max_exp(), db = b.max_exp();
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    Laurent r = a;
    for (int k = da; k >= db && !r.is_zero() && r.max_exp() >= db; --k) {
      if (r.max_exp() != k) continue;
      Laurent scaled = Laurent(b.leading_coeff()) * r;
      scaled -= Laurent::term(r.leading_coeff(), k - db) * b;
      r = scaled;
    }
    a = b;
    b = r.is_zero() ? Laurent() : Laurent::content_free(r);
  }
  return Laurent::content_free(a);
}

}  // namespace

Laurent Laurent::gcd(const Laurent& a, const Laurent& b) {
  if (a.is_zero() && b.is_zero()) return Laurent();
  if (a.is_zero()) return content_free(b);
  if (b.is_zero()) return content_free(a);
  mpz_class ca, cb;
  Laurent pa = content_free(a, &ca);
  Laurent pb = content_free(b, &cb);
  mpz_class cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  Laurent g = primitive_gcd(pa, pb);
  return Laurent(cg) * g;
}

std::string Laurent::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    mpz_class a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

Laurent Laurent::parse(const std::string& s) {
  Laurent out;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  bool any = false;
  while (i < s.size()) {
    int sign = 1;
    skip_ws();
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -1;
      ++i;
      skip_ws();
    }
    require(i < s.size(), "ParseError", "dangling sign in scalar: " + s);
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
    mpz_class c = digits.empty() ? mpz_class(1) : mpz_class(digits);
    skip_ws();
    if (i < s.size() && s[i] == '*') {
      ++i;
      skip_ws();
    }
    int exp = 0;
    if (i < s.size() && s[i] == 't') {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int esign = 1;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
          if (s[i] == '-') esign = -1;
          ++i;
        }
        std::string ed;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ed += s[i++];
        require(!ed.empty(), "ParseError", "bad exponent in scalar: " + s);
        exp = esign * std::stoi(ed);
      }
    } else {
      require(!digits.empty(), "ParseError", "bad term in scalar: " + s);
    }
    out += term(sign * c, exp);
    any = true;
    skip_ws();
  }
  require(any, "ParseError", "empty scalar");
  return out;
}

// ---------------------------------------------------------------------------
// Field elements

std::string FieldDesc::name() const {
  return p == 0 ? "Q" : "F" + std::to_string(p);
}

FieldElem::FieldElem(FieldDesc f) : fld_(f), q_(0), r_(0) {}

FieldElem::FieldElem(FieldDesc f, const mpz_class& v) : fld_(f), q_(0) {
  if (fld_.p == 0) {
    q_ = v;
  } else {
    mpz_class m = v % mpz_class(fld_.p);
    if (m < 0) m += fld_.p;
    r_ = m.get_ui();
  }
}

FieldElem::FieldElem(FieldDesc f, const mpq_class& v) : fld_(f), q_(0) {
  if (fld_.p == 0) {
    q_ = v;
    q_.canonicalize();
  } else {
    FieldElem n(f, v.get_num()), d(f, v.get_den());
    *this = n / d;
  }
}

bool FieldElem::is_zero() const { return fld_.p == 0 ? q_ == 0 : r_ == 0; }
bool FieldElem::is_one() const { return fld_.p == 0 ? q_ == 1 : r_ == 1; }

namespace {

// Coerce integer rationals into the other operand's field.
void align_fields(FieldElem& a, FieldElem& b) {
  if (a.field() == b.field()) return;
  if (a.field().p == 0 && a.rat().get_den() == 1) {
    a = FieldElem(b.field(), mpz_class(a.rat().get_num()));
    return;
  }
  if (b.field().p == 0 && b.rat().get_den() == 1) {
    b = FieldElem(a.field(), mpz_class(b.rat().get_num()));
    return;
  }
  fail("MixedFields", "field mismatch: " + a.field().name() + " vs " + b.field().name());
}

}  // namespace

FieldElem FieldElem::operator-() const {
  FieldElem r(fld_);
  if (fld_.p == 0)
    r.q_ = -q_;
  else
    r.r_ = r_ == 0 ? 0 : fld_.p - r_;
  return r;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  FieldElem a = *this, b = o;
  align_fields(a, b);
  FieldElem r(a.fld_);
  if (a.fld_.p == 0)
    r.q_ = a.q_ + b.q_;
  else
    r.r_ = (a.r_ + b.r_) % a.fld_.p;
  return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
  FieldElem a = *this, b = o;
  align_fields(a, b);
  FieldElem r(a.fld_);
  if (a.fld_.p == 0)
    r.q_ = a.q_ * b.q_;
  else
    r.r_ = (a.r_ * b.r_) % a.fld_.p;
  return r;
}

FieldElem FieldElem::inverse() const {
  require(!is_zero(), "DivisionByZero", "inverse of zero field element");
  FieldElem r(fld_);
  if (fld_.p == 0) {
    r.q_ = 1 / q_;
  } else {
    // Fermat: p is prime.
    unsigned long base = r_, acc = 1, e = fld_.p - 2;
    while (e) {
      if (e & 1) acc = acc * base % fld_.p;
      base = base * base % fld_.p;
      e >>= 1;
    }
    r.r_ = acc;
  }
  return r;
}

bool FieldElem::operator==(const FieldElem& o) const {
  FieldElem a = *this, b = o;
  align_fields(a, b);
  return a.fld_.p == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string FieldElem::str() const {
  if (fld_.p == 0) {
    std::ostringstream os;
    os << q_;
    return os.str();
  }
  return std::to_string(r_);
}

Specialization Specialization::make(unsigned long p, const mpz_class& c) {
  Specialization s;
  s.field = FieldDesc{p};
  s.value = FieldElem(s.field, c);
  require(!s.value.is_zero(), "NonInvertibleValue",
          "t must map to an invertible element of " + s.field.name());
  return s;
}

FieldElem specialize(const Laurent& f, const Specialization& s) {
  require(!s.value.is_zero(), "NonInvertibleValue", "specialization value is zero");
  FieldElem acc(s.field);
  FieldElem inv = s.value.inverse();
  for (const auto& [e, c] : f.terms()) {
    FieldElem p(s.field, mpz_class(1));
    for (int k = 0; k < (e >= 0 ? e : -e); ++k) p = p * (e >= 0 ? s.value : inv);
    acc = acc + FieldElem(s.field, c) * p;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Fraction field

Frac::Frac(const Laurent& n, const Laurent& d) : num_(n), den_(d) {
  require(!d.is_zero(), "DivisionByZero", "zero denominator");
  reduce();
}

void Frac::reduce() {
  if (num_.is_zero()) {
    den_ = Laurent(1);
    return;
  }
  Laurent g = Laurent::gcd(num_, den_);
  // gcd is taken on t-shifted representatives; absorb shifts as units.
  num_ = *Laurent::divide_exact(num_, g);
  den_ = *Laurent::divide_exact(den_, g);
  // Canonical denominator: min_exp 0, positive leading coefficient.
  int sh = den_.min_exp();
  den_ = den_.shifted(-sh);
  num_ = num_.shifted(-sh);
  if (den_.leading_coeff() < 0) {
    den_ = -den_;
    num_ = -num_;
  }
}

Frac Frac::operator-() const {
  Frac r = *this;
  r.num_ = -r.num_;
  return r;
}

Frac Frac::operator+(const Frac& o) const {
  return Frac(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Frac Frac::operator-(const Frac& o) const { return *this + (-o); }

Frac Frac::operator*(const Frac& o) const { return Frac(num_ * o.num_, den_ * o.den_); }

Frac Frac::inverse() const {
  require(!num_.is_zero(), "DivisionByZero", "inverse of zero");
  return Frac(den_, num_);
}

std::string Frac::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace strat
