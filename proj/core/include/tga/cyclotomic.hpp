#pragma once

#include <vector>

#include "tga/error.hpp"
#include "tga/numeric.hpp"

namespace tga {

long euler_phi(long m);

// Coefficients of the m-th cyclotomic polynomial, ascending degree, monic,
// size phi(m) + 1. Cached.
const std::vector<Int>& cyclotomic_polynomial(long m);

// An element of Q(zeta_m) in the power basis 1, z, ..., z^{phi(m)-1} where z
// satisfies Phi_m(z) = 0.
class Cyclotomic {
 public:
  explicit Cyclotomic(long m = 1);  // zero
  static Cyclotomic from_rational(long m, const Rat& r);
  static Cyclotomic zeta_power(long m, long a);

  long conductor() const { return m_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;  // all coefficients beyond degree 0 vanish

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic scaled(const Rat& r) const;

  // Throws Error("DivisionByZero") on zero.
  Cyclotomic inverse() const;

  // Lift into Q(zeta_m2); requires m | m2.
  Cyclotomic coerced(long m2) const;

  bool operator==(const Cyclotomic&) const = default;

 private:
  void require_compatible(const Cyclotomic& o) const;

  long m_ = 1;
  std::vector<Rat> c_;  // size phi(m_)
};

}  // namespace tga
