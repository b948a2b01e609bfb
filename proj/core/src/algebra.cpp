#include "tga/algebra.hpp"

#include <string>

namespace tga {

AlgebraElement algebra_zero(const CocycleTable& c) {
  return AlgebraElement(static_cast<size_t>(c.order()),
                        Scalar::zero(c.conductor(), c.num_indets()));
}

AlgebraElement algebra_basis_element(const CocycleTable& c, int g) {
  AlgebraElement e = algebra_zero(c);
  e.at(static_cast<size_t>(g)) = Scalar::one(c.conductor(), c.num_indets());
  return e;
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.size() != b.size()) fail("PreconditionViolated", "adding elements of different algebras");
  AlgebraElement r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
  return r;
}

AlgebraElement multiply(const CocycleTable& c, const GroupTable& g, const AlgebraElement& a,
                        const AlgebraElement& b) {
  if (a.size() != static_cast<size_t>(g.order()) || b.size() != a.size())
    fail("PreconditionViolated", "element size does not match the algebra");
  AlgebraElement r = algebra_zero(c);
  for (int x = 0; x < g.order(); ++x) {
    if (a[x].is_zero()) continue;
    for (int y = 0; y < g.order(); ++y) {
      if (b[y].is_zero()) continue;
      const int xy = g.mul(x, y);
      r[xy] = r[xy] + a[x] * b[y] * Scalar::from_monomial(c.alpha(x, y));
    }
  }
  return r;
}

Monomial commutator_pairing(const CocycleTable& c, const GroupTable& g, int x, int y) {
  if (g.mul(x, y) != g.mul(y, x))
    fail("NotCommuting", "pairing of non-commuting elements " + std::to_string(x) + ", " +
                             std::to_string(y));
  return c.alpha(x, y).times(c.alpha(y, x).inverse());
}

bool is_regular(const CocycleTable& c, const GroupTable& g, int x) {
  for (int h = 0; h < g.order(); ++h) {
    if (g.mul(x, h) != g.mul(h, x)) continue;
    if (!commutator_pairing(c, g, x, h).is_identity()) return false;
  }
  return true;
}

int regular_class_count(const CocycleTable& c, const GroupTable& g) {
  int count = 0;
  for (const auto& cls : conjugacy_classes(g)) {
    bool first = is_regular(c, g, cls.front());
    for (int x : cls)
      if (is_regular(c, g, x) != first)
        fail("Internal", "regularity is not constant on a conjugacy class");
    if (first) ++count;
  }
  return count;
}

std::vector<std::vector<Scalar>> center_basis(const CocycleTable& c, const GroupTable& g) {
  const long m = c.conductor();
  const size_t n = c.num_indets();
  const int order = g.order();
  // z = sum z_w u_w is central iff u_h z = z u_h for generators h; comparing
  // coefficients of u_w gives alpha(h, h^-1 w) z_{h^-1 w} = alpha(w h^-1, h) z_{w h^-1}
  std::vector<std::vector<Scalar>> rows;
  for (int h : small_generating_set(g)) {
    const int hinv = g.inv(h);
    for (int w = 0; w < order; ++w) {
      const int left = g.mul(hinv, w);   // h * left = w
      const int right = g.mul(w, hinv);  // right * h = w
      std::vector<Scalar> row(order, Scalar::zero(m, n));
      row[left] = row[left] + Scalar::from_monomial(c.alpha(h, left));
      row[right] = row[right] - Scalar::from_monomial(c.alpha(right, h));
      bool nonzero = false;
      for (const auto& s : row)
        if (!s.is_zero()) nonzero = true;
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  return linear_kernel(std::move(rows), static_cast<size_t>(order), m, n);
}

bool is_central(const CocycleTable& c, const GroupTable& g, int cross_check_cap) {
  const int regular = regular_class_count(c, g);
  if (g.order() <= cross_check_cap) {
    const size_t dim = center_basis(c, g).size();
    if (dim != static_cast<size_t>(regular))
      fail("CentralityMismatch",
           "regular-class count " + std::to_string(regular) +
               " disagrees with center dimension " + std::to_string(dim));
  }
  return regular == 1;
}

}  // namespace tga
