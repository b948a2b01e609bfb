#pragma once

#include <cstddef>
#include <vector>

#include "tga/error.hpp"
#include "tga/numeric.hpp"

namespace tga {

// An element zeta_m^root * t_1^{e_1} ... t_N^{e_N} of the monomial subgroup
// of Q(zeta_m)(t_1,...,t_N)^x. Signs ride on the root part when m is even.
struct Monomial {
  long m = 1;               // conductor
  long root = 0;            // exponent of zeta_m, reduced to [0, m)
  std::vector<long> exps;   // t-exponents (Laurent, may be negative)

  static Monomial one(long m, size_t n) { return Monomial{m, 0, std::vector<long>(n, 0)}; }
  static Monomial zeta(long m, long a, size_t n) {
    return Monomial{m, mod_long(a, m), std::vector<long>(n, 0)};
  }
  static Monomial t(long m, size_t n, size_t i, long e = 1) {
    Monomial mo = one(m, n);
    mo.exps.at(i) = e;
    return mo;
  }

  size_t num_indets() const { return exps.size(); }

  Monomial times(const Monomial& o) const {
    require_compatible(o);
    Monomial r{m, mod_long(root + o.root, m), exps};
    for (size_t i = 0; i < exps.size(); ++i) r.exps[i] += o.exps[i];
    return r;
  }
  Monomial inverse() const {
    Monomial r{m, mod_long(-root, m), exps};
    for (auto& e : r.exps) e = -e;
    return r;
  }
  Monomial power(long k) const {
    Monomial r{m, mod_long(root * k, m), exps};
    for (auto& e : r.exps) e *= k;
    return r;
  }

  bool is_identity() const {
    if (root != 0) return false;
    for (long e : exps)
      if (e != 0) return false;
    return true;
  }

  // multiplicative order; 0 when infinite (some t-exponent nonzero)
  long torsion_order() const {
    for (long e : exps)
      if (e != 0) return 0;
    return m / gcd_long(m, root == 0 ? m : root);
  }

  // lift into Q(zeta_m2)(t_1..t_n2); requires m | m2 and num_indets <= n2
  Monomial coerced(long m2, size_t n2) const {
    if (m2 % m != 0 || n2 < exps.size())
      fail("ConductorMismatch", "invalid monomial coercion target");
    Monomial r{m2, mod_long(root * (m2 / m), m2), exps};
    r.exps.resize(n2, 0);
    return r;
  }

  // shift t-indices by off inside a width-n2 block layout
  Monomial shifted(size_t off, size_t n2) const {
    Monomial r{m, root, std::vector<long>(n2, 0)};
    for (size_t i = 0; i < exps.size(); ++i) r.exps.at(i + off) = exps[i];
    return r;
  }

  bool operator==(const Monomial&) const = default;

 private:
  void require_compatible(const Monomial& o) const {
    if (m != o.m || exps.size() != o.exps.size())
      fail("ConductorMismatch", "monomial arithmetic across different fields");
  }
};

}  // namespace tga
