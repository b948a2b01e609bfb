#include "tga/laurent.hpp"

namespace tga {

LaurentPoly LaurentPoly::one(long m, size_t n) {
  LaurentPoly p(m, n);
  p.terms_.emplace(ExpVec(n, 0), Cyclotomic::from_rational(m, 1));
  return p;
}

LaurentPoly LaurentPoly::constant(long m, size_t n, const Cyclotomic& c) {
  LaurentPoly p(m, n);
  if (c.conductor() != m) fail("ConductorMismatch", "constant coefficient in a different field");
  if (!c.is_zero()) p.terms_.emplace(ExpVec(n, 0), c);
  return p;
}

LaurentPoly LaurentPoly::from_monomial(const Monomial& mono) {
  LaurentPoly p(mono.m, mono.num_indets());
  p.terms_.emplace(mono.exps, Cyclotomic::zeta_power(mono.m, mono.root));
  return p;
}

void LaurentPoly::require_compatible(const LaurentPoly& o) const {
  if (m_ != o.m_ || n_ != o.n_)
    fail("ConductorMismatch", "Laurent arithmetic across different fields");
}

void LaurentPoly::add_term(const ExpVec& e, const Cyclotomic& c) {
  if (e.size() != n_ || c.conductor() != m_)
    fail("ConductorMismatch", "term outside the polynomial's field");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(m_, n_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  require_compatible(o);
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  require_compatible(o);
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  require_compatible(o);
  LaurentPoly r(m_, n_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      ExpVec e = e1;
      for (size_t i = 0; i < n_; ++i) e[i] += e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

LaurentPoly divided_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) fail("DivisionByZero", "Laurent division by zero");
  if (num.is_zero()) return LaurentPoly::zero(num.conductor(), num.num_indets());
  const long m = num.conductor();
  const size_t n = num.num_indets();
  if (den.conductor() != m || den.num_indets() != n)
    fail("ConductorMismatch", "Laurent division across different fields");

  // Shift both operands so their coordinatewise-minimal exponents are zero;
  // an exact Laurent quotient then has nonnegative exponents relative to the
  // shift difference, so plain leading-term division terminates.
  auto min_exps = [n](const LaurentPoly& p) {
    ExpVec mn = p.terms().begin()->first;
    for (const auto& [e, c] : p.terms())
      for (size_t i = 0; i < n; ++i)
        if (e[i] < mn[i]) mn[i] = e[i];
    return mn;
  };
  const ExpVec num_min = min_exps(num), den_min = min_exps(den);

  LaurentPoly r = num;
  const Cyclotomic den_lead_inv = den.terms().rbegin()->second.inverse();
  const ExpVec& den_lead = den.terms().rbegin()->first;
  LaurentPoly quo(m, n);
  size_t steps = 0;
  while (!r.is_zero()) {
    if (++steps > 1u << 20) fail("Internal", "Laurent division step cap exceeded");
    const auto& [rexp, rc] = *r.terms().rbegin();
    ExpVec qe(n);
    for (size_t i = 0; i < n; ++i) {
      qe[i] = rexp[i] - den_lead[i];
      // every exponent vector of an exact quotient is bounded below by
      // min(num) - min(den), coordinatewise
      if (qe[i] < num_min[i] - den_min[i]) fail("Internal", "Laurent division not exact");
    }
    LaurentPoly t(m, n);
    t.add_term(qe, rc * den_lead_inv);
    quo = quo + t;
    r = r - t * den;
  }
  return quo;
}

Scalar::Scalar(LaurentPoly n, LaurentPoly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) fail("DivisionByZero", "scalar with zero denominator");
  if (num.conductor() != den.conductor() || num.num_indets() != den.num_indets())
    fail("ConductorMismatch", "scalar with mismatched numerator and denominator");
}

Scalar Scalar::zero(long m, size_t n) {
  return Scalar(LaurentPoly::zero(m, n), LaurentPoly::one(m, n));
}
Scalar Scalar::one(long m, size_t n) {
  return Scalar(LaurentPoly::one(m, n), LaurentPoly::one(m, n));
}
Scalar Scalar::of(LaurentPoly p) {
  LaurentPoly one = LaurentPoly::one(p.conductor(), p.num_indets());
  return Scalar(std::move(p), std::move(one));
}

Scalar Scalar::from_monomial(const Monomial& mono) {
  return Scalar::of(LaurentPoly::from_monomial(mono));
}

Scalar Scalar::operator-() const { return Scalar(-num, den); }

Scalar Scalar::operator+(const Scalar& o) const {
  return Scalar(num * o.den + o.num * den, den * o.den);
}
Scalar Scalar::operator-(const Scalar& o) const {
  return Scalar(num * o.den - o.num * den, den * o.den);
}
Scalar Scalar::operator*(const Scalar& o) const {
  return Scalar(num * o.num, den * o.den);
}
Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) fail("DivisionByZero", "scalar division by zero");
  return Scalar(num * o.den, den * o.num);
}

bool Scalar::operator==(const Scalar& o) const { return num * o.den == o.num * den; }

}  // namespace tga
