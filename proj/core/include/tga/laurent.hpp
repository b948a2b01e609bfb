#pragma once

#include <map>
#include <vector>

#include "tga/cyclotomic.hpp"
#include "tga/monomial.hpp"

namespace tga {

using ExpVec = std::vector<long>;

// Sparse Laurent polynomial over Q(zeta_m) in t_1, ..., t_N. No zero
// coefficients are stored; the zero polynomial has an empty term map.
class LaurentPoly {
 public:
  LaurentPoly(long m = 1, size_t n = 0) : m_(m), n_(n) {}
  static LaurentPoly zero(long m, size_t n) { return LaurentPoly(m, n); }
  static LaurentPoly one(long m, size_t n);
  static LaurentPoly constant(long m, size_t n, const Cyclotomic& c);
  static LaurentPoly from_monomial(const Monomial& mono);

  long conductor() const { return m_; }
  size_t num_indets() const { return n_; }
  const std::map<ExpVec, Cyclotomic>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const ExpVec& e, const Cyclotomic& c);

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;

  bool operator==(const LaurentPoly&) const = default;

 private:
  void require_compatible(const LaurentPoly& o) const;

  long m_;
  size_t n_;
  std::map<ExpVec, Cyclotomic> terms_;
};

// Exact division num / den; throws Error("Internal") when the quotient is not
// a Laurent polynomial. den must be nonzero (Error("DivisionByZero")).
LaurentPoly divided_exact(const LaurentPoly& num, const LaurentPoly& den);

// A rational function num / den over Q(zeta_m)(t_1..t_N). Equality is tested
// by cross-multiplication; no gcd reduction is attempted.
struct Scalar {
  LaurentPoly num;
  LaurentPoly den;

  Scalar() : num(1, 0), den(LaurentPoly::one(1, 0)) {}
  Scalar(LaurentPoly n, LaurentPoly d);
  static Scalar zero(long m, size_t n);
  static Scalar one(long m, size_t n);
  static Scalar of(LaurentPoly p);
  static Scalar from_monomial(const Monomial& mono);  // denominators allowed

  bool is_zero() const { return num.is_zero(); }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // Error("DivisionByZero")

  bool operator==(const Scalar& o) const;
};

}  // namespace tga
