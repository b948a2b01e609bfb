#include "tga/valuation.hpp"

#include "tga/group.hpp"

namespace tga {

int compare_values(const ValueVector& a, const ValueVector& b) {
  if (a.size() != b.size()) fail("PreconditionViolated", "comparing values of different rank");
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

ValueVector monomial_value(const Monomial& m) {
  ValueVector v;
  v.reserve(m.exps.size());
  for (long e : m.exps) v.emplace_back(e);
  return v;
}

ValueVector laurent_value(const LaurentPoly& p) {
  if (p.is_zero()) fail("ValueOfZero", "value of the zero polynomial");
  bool first = true;
  ValueVector best;
  for (const auto& [e, c] : p.terms()) {
    ValueVector v;
    v.reserve(e.size());
    for (long x : e) v.emplace_back(x);
    if (first || compare_values(v, best) < 0) {
      best = std::move(v);
      first = false;
    }
  }
  return best;
}

ValueVector scalar_value(const Scalar& s) {
  ValueVector num = laurent_value(s.num);
  ValueVector den = laurent_value(s.den);
  for (size_t i = 0; i < num.size(); ++i) num[i] -= den[i];
  return num;
}

ValueVector generator_value(const CocycleTable& c, const GroupTable& g, int x) {
  const long e = element_order(g, x);
  Monomial acc = Monomial::one(c.conductor(), c.num_indets());
  int cur = x;
  for (long k = 1; k < e; ++k) {
    acc = acc.times(c.alpha(cur, x));
    cur = g.mul(cur, x);
  }
  ValueVector v = monomial_value(acc);
  for (Rat& r : v) r /= e;
  return v;
}

namespace {

long to_long(const Int& x) {
  if (!x.fits_slong_p()) fail("Internal", "value-group invariant exceeds long range");
  return x.get_si();
}

}  // namespace

ValueGroupResult relative_value_group(const CocycleTable& c, const GroupTable& g) {
  const size_t n = c.num_indets();
  ValueGroupResult result;
  if (n == 0) return result;

  std::vector<ValueVector> values;
  long d = 1;
  for (int x = 0; x < g.order(); ++x) {
    values.push_back(generator_value(c, g, x));
    for (const Rat& r : values.back()) d = lcm_long(d, to_long(Int(r.get_den())));
  }

  // columns: d * v(u_g) for all g, plus d Z^n
  IntMat cols(n);
  for (const auto& v : values)
    for (size_t i = 0; i < n; ++i) cols[i].push_back(Int(v[i].get_num()) * (d / Int(v[i].get_den())));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) cols[i].push_back(i == j ? Int(d) : Int(0));

  IntMat basis = hnf_column_basis(cols);
  if (basis.empty() || basis[0].size() != n)
    fail("Internal", "relative value lattice is not full rank");

  IntMat target(n, std::vector<Int>(n, Int(0)));
  for (size_t i = 0; i < n; ++i) target[i][i] = d;
  IntMat x = solve_integer(basis, target);
  SmithResult snf = smith_normal_form(std::move(x));
  Int order = 1;
  for (const Int& di : snf.diag) {
    if (di == 0) fail("Internal", "relative value group is infinite");
    if (di > 1) result.invariant_factors.push_back(to_long(di));
    order *= di;
  }
  result.order = to_long(order);
  return result;
}

TtrCertificate ttr_certificate(const CocycleTable& c, const GroupTable& g) {
  TtrCertificate cert;
  cert.degree = g.order();
  cert.value_group_index = relative_value_group(c, g).order;
  cert.certified = cert.value_group_index == cert.degree;
  if (!cert.certified) {
    // the map x -> v(u_x) + Z^n is a homomorphism; a too-small image means a
    // nonidentity element with integral value
    for (int x = 1; x < g.order(); ++x) {
      ValueVector v = generator_value(c, g, x);
      bool integral = true;
      for (const Rat& r : v)
        if (r.get_den() != 1) integral = false;
      if (integral) {
        cert.detail = "element " + std::to_string(x) + " has integral value";
        break;
      }
    }
    if (cert.detail.empty()) cert.detail = "value-group index falls short of the degree";
  }
  return cert;
}

ArmatureCheck armature_iso_check(const CocycleTable& c, const GroupTable& g) {
  if (!is_abelian(g)) fail("PreconditionViolated", "armature check needs an abelian group");
  for (int x = 1; x < g.order(); ++x) {
    ValueVector v = generator_value(c, g, x);
    bool integral = true;
    for (const Rat& r : v)
      if (r.get_den() != 1) integral = false;
    if (integral)
      return {false, "injectivity failure: element " + std::to_string(x) + " has integral value"};
  }
  ValueGroupResult vg = relative_value_group(c, g);
  if (primary_form(vg.invariant_factors) != abelian_invariants(Subgroup::whole(g)))
    return {false, "value-group invariants do not match the group invariants"};
  return {true, ""};
}

long exponent_abelian_ttr(const CocycleTable& c, const GroupTable& g) {
  ValueGroupResult vg = relative_value_group(c, g);
  return vg.invariant_factors.empty() ? 1 : vg.invariant_factors.back();
}

}  // namespace tga
