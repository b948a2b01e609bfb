#include "tga/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace tga {

long euler_phi(long m) {
  long phi = m;
  for (long p : prime_factors(m)) phi = phi / p * (p - 1);
  return phi;
}

namespace {

// Exact division of integer polynomials, divisor monic. Ascending coeffs.
std::vector<Int> divide_monic(std::vector<Int> num, const std::vector<Int>& den) {
  if (num.size() < den.size()) fail("Internal", "monic division underflow");
  std::vector<Int> quo(num.size() - den.size() + 1);
  for (size_t k = quo.size(); k-- > 0;) {
    Int q = num[k + den.size() - 1];
    quo[k] = q;
    for (size_t i = 0; i < den.size(); ++i) num[k + i] -= q * den[i];
  }
  for (const Int& c : num)
    if (c != 0) fail("Internal", "monic division not exact");
  return quo;
}

std::map<long, std::vector<Int>> phi_cache;
std::recursive_mutex phi_mutex;

std::vector<Int> compute_phi(long m) {
  // x^m - 1 divided by the product of Phi_d over proper divisors d of m
  std::vector<Int> poly(static_cast<size_t>(m) + 1, Int(0));
  poly.front() = -1;
  poly.back() = 1;
  for (long d = 1; d < m; ++d)
    if (m % d == 0) poly = divide_monic(std::move(poly), cyclotomic_polynomial(d));
  return poly;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long m) {
  if (m < 1) fail("PreconditionViolated", "cyclotomic polynomial needs m >= 1");
  std::lock_guard<std::recursive_mutex> lock(phi_mutex);
  auto it = phi_cache.find(m);
  if (it != phi_cache.end()) return it->second;
  return phi_cache.emplace(m, compute_phi(m)).first->second;
}

Cyclotomic::Cyclotomic(long m) : m_(m), c_(static_cast<size_t>(euler_phi(m))) {}

Cyclotomic Cyclotomic::from_rational(long m, const Rat& r) {
  Cyclotomic x(m);
  x.c_.at(0) = r;
  return x;
}

namespace {

// reduce an ascending-coefficient rational polynomial mod Phi_m in place,
// then truncate to degree < phi(m)
void reduce_mod_phi(std::vector<Rat>& c, long m) {
  const auto& phi = cyclotomic_polynomial(m);
  const size_t deg = phi.size() - 1;
  for (size_t k = c.size(); k-- > deg;) {
    Rat lead = c[k];
    if (lead == 0) continue;
    for (size_t i = 0; i < phi.size(); ++i) c[k - deg + i] -= lead * Rat(phi[i]);
  }
  c.resize(deg);
}

}  // namespace

Cyclotomic Cyclotomic::zeta_power(long m, long a) {
  a = mod_long(a, m);
  std::vector<Rat> c(static_cast<size_t>(a) + 1);
  c.back() = 1;
  const size_t deg = static_cast<size_t>(euler_phi(m));
  if (c.size() < deg) c.resize(deg);
  reduce_mod_phi(c, m);
  Cyclotomic x(m);
  x.c_ = std::move(c);
  return x;
}

bool Cyclotomic::is_zero() const {
  for (const Rat& r : c_)
    if (r != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

void Cyclotomic::require_compatible(const Cyclotomic& o) const {
  if (m_ != o.m_) fail("ConductorMismatch", "cyclotomic arithmetic across different fields");
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (Rat& x : r.c_) x = -x;
  return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  require_compatible(o);
  Cyclotomic r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  require_compatible(o);
  Cyclotomic r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  require_compatible(o);
  if (c_.empty()) return *this;  // degree-0 field would be Q(zeta_1) with phi=1; unreachable
  std::vector<Rat> prod(2 * c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
  }
  reduce_mod_phi(prod, m_);
  Cyclotomic r(m_);
  r.c_ = std::move(prod);
  return r;
}

Cyclotomic Cyclotomic::scaled(const Rat& s) const {
  Cyclotomic r = *this;
  for (Rat& x : r.c_) x *= s;
  return r;
}

namespace {

using RatPoly = std::vector<Rat>;  // ascending, no trailing-zero guarantee

size_t poly_degree(const RatPoly& p) {
  for (size_t k = p.size(); k-- > 0;)
    if (p[k] != 0) return k;
  return 0;
}

bool poly_is_zero(const RatPoly& p) {
  for (const Rat& r : p)
    if (r != 0) return false;
  return true;
}

// r = r - q * x^shift * b
void poly_submul(RatPoly& r, const Rat& q, size_t shift, const RatPoly& b, size_t bdeg) {
  for (size_t i = 0; i <= bdeg; ++i) r[shift + i] -= q * b[i];
}

}  // namespace

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) fail("DivisionByZero", "inverse of zero in Q(zeta_m)");
  // extended Euclid on (f, Phi_m) over Q[x]; Phi_m irreducible, so the gcd is
  // a nonzero constant c with u f + v Phi = c; the inverse is u / c.
  const auto& phi_int = cyclotomic_polynomial(m_);
  RatPoly r0(phi_int.size());
  for (size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rat(phi_int[i]);
  RatPoly r1(c_.begin(), c_.end());
  r1.resize(r0.size());
  RatPoly u0(r0.size()), u1(r0.size());
  u1[0] = 1;  // u0 = 0, u1 = 1: r0 = Phi (coefficient 0), r1 = f (coefficient u1)

  while (true) {
    if (poly_is_zero(r1)) fail("Internal", "cyclotomic polynomial not coprime to element");
    size_t d1 = poly_degree(r1);
    if (d1 == 0) break;
    // reduce r0 by r1
    while (!poly_is_zero(r0) && poly_degree(r0) >= d1) {
      size_t d0 = poly_degree(r0);
      Rat q = r0[d0] / r1[d1];
      poly_submul(r0, q, d0 - d1, r1, d1);
      poly_submul(u0, q, d0 - d1, u1, poly_degree(u1));
    }
    std::swap(r0, r1);
    std::swap(u0, u1);
  }
  Rat c = r1[0];
  Cyclotomic inv(m_);
  for (size_t i = 0; i < inv.c_.size() && i < u1.size(); ++i) inv.c_[i] = u1[i] / c;
  // degree bound: deg u1 < deg Phi, so no truncation loss
  for (size_t i = inv.c_.size(); i < u1.size(); ++i)
    if (u1[i] != 0) fail("Internal", "Bezout cofactor degree overflow");
  return inv;
}

Cyclotomic Cyclotomic::coerced(long m2) const {
  if (m2 % m_ != 0) fail("ConductorMismatch", "invalid cyclotomic coercion target");
  if (m2 == m_) return *this;
  const long k = m2 / m_;
  Cyclotomic r(m2);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    r = r + zeta_power(m2, static_cast<long>(i) * k).scaled(c_[i]);
  }
  return r;
}

}  // namespace tga
