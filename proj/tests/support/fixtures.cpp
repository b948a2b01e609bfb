#include "support/fixtures.hpp"

using namespace tga;

namespace fx {

GroupTable cyclic(long n) {
  PcPresentation p;
  p.relative_orders = {n};
  p.power_words = {{}};
  return group_from_presentation(p).table;
}

GroupTable product_of_cyclics(const std::vector<long>& orders) {
  PcPresentation p;
  p.relative_orders = orders;
  p.power_words.assign(orders.size(), Word{});
  return group_from_presentation(p).table;
}

GroupTable s3() {
  PcPresentation p;
  p.relative_orders = {3, 2};
  p.power_words = {{}, {}};
  p.conjugates[{1, 0}] = {{0, 2}};
  return group_from_presentation(p).table;
}

GroupTable d4() {
  PcPresentation p;
  p.relative_orders = {4, 2};
  p.power_words = {{}, {}};
  p.conjugates[{1, 0}] = {{0, 3}};
  return group_from_presentation(p).table;
}

GroupTable q8() {
  // x = i, y = j, z = -1
  PcPresentation p;
  p.relative_orders = {2, 2, 2};
  p.power_words = {{{2, 1}}, {{2, 1}}, {}};  // x^2 = y^2 = z
  p.conjugates[{1, 0}] = {{0, 1}, {2, 1}};   // y x y^-1 = x z
  return group_from_presentation(p).table;
}

GroupTable semidirect_equal_orders(long p, long n, long s) {
  PcPresentation pres;
  const long q = ipow(p, n);
  pres.relative_orders = {q, q};
  pres.power_words = {{}, {}};
  pres.conjugates[{1, 0}] = {{0, ipow(p, s) + 1}};
  return group_from_presentation(pres).table;
}

GroupTable family3_core(long n) {
  PcPresentation pres;
  const long q = ipow(2, n);
  pres.relative_orders = {2 * q, q, 2};
  pres.power_words = {{}, {}, {}};
  pres.conjugates[{1, 0}] = {{0, 3}};
  pres.conjugates[{2, 0}] = {{0, 2 * q - 1}};
  return group_from_presentation(pres).table;
}

MonomialPcPresentation symbol_presentation(long d) {
  MonomialPcPresentation p;
  p.conductor = d;
  p.num_indets = 2;
  p.base.relative_orders = {d, d};
  p.base.power_words = {{}, {}};
  p.base.conjugates[{1, 0}] = {{0, 1}};
  p.power_values = {Monomial::t(d, 2, 0), Monomial::t(d, 2, 1)};
  p.conj_values[{1, 0}] = Monomial::zeta(d, -1, 2);
  return p;
}

MonomialPcPresentation collision_presentation() {
  MonomialPcPresentation p;
  p.conductor = 2;
  p.num_indets = 1;
  p.base.relative_orders = {2, 2};
  p.base.power_words = {{}, {}};
  p.base.conjugates[{1, 0}] = {{0, 1}};
  p.power_values = {Monomial::t(2, 1, 0), Monomial::t(2, 1, 0)};
  p.conj_values[{1, 0}] = Monomial::zeta(2, 1, 1);
  return p;
}

std::vector<NamedGroup> corpus_small() {
  std::vector<NamedGroup> corpus;
  auto add = [&corpus](std::string name, GroupTable g, bool in_lambda) {
    corpus.push_back({std::move(name), std::move(g), in_lambda});
  };

  add("trivial", cyclic(1), true);
  add("Z2", cyclic(2), false);           // not symmetric type
  add("Z4", cyclic(4), false);
  add("Z2xZ2", product_of_cyclics({2, 2}), true);
  add("Z2^3", product_of_cyclics({2, 2, 2}), false);
  add("Z2^4", product_of_cyclics({2, 2, 2, 2}), true);
  add("Z2^6", product_of_cyclics({2, 2, 2, 2, 2, 2}), true);
  add("Z4xZ4", product_of_cyclics({4, 4}), true);
  add("Z4xZ2", product_of_cyclics({4, 2}), false);
  add("Z4xZ4xZ2xZ2", product_of_cyclics({4, 4, 2, 2}), true);
  add("Z3xZ3", product_of_cyclics({3, 3}), true);
  add("Z3^3", product_of_cyclics({3, 3, 3}), false);
  add("Z5xZ5", product_of_cyclics({5, 5}), true);
  add("Z6xZ6", product_of_cyclics({6, 6}), true);  // Z2xZ2 x Z3xZ3
  add("Z2xZ2xZ3", product_of_cyclics({2, 2, 3}), false);
  add("S3", s3(), false);                // not nilpotent
  add("D4", d4(), false);
  add("Q8", q8(), false);
  add("Z4semiZ2xZ2", family3_core(1), true);  // family 3, n = 1
  add("Z8semi(Z4xZ2)", family3_core(2), true);
  add("Z4semiZ4_s1", semidirect_equal_orders(2, 2, 1), false);  // s = 1 at p = 2
  add("Z8semiZ8_s1", semidirect_equal_orders(2, 3, 1), false);  // s = 1 at p = 2, order 64
  add("Z4semiZ2xZ2_x_Z2xZ2", direct_product(family3_core(1), product_of_cyclics({2, 2})), true);
  // D4 x Z2 is isomorphic to Z4 semidirect (Z2 x Z2): both involutions invert
  // the rotation, so their product is a central Z2 splitting off D4
  add("D4xZ2", direct_product(d4(), cyclic(2)), true);
  return corpus;
}

std::vector<NamedGroup> corpus_lambda() {
  std::vector<NamedGroup> corpus;
  auto add = [&corpus](std::string name, GroupTable g) {
    corpus.push_back({std::move(name), std::move(g), true});
  };
  add("trivial", cyclic(1));
  add("Z2xZ2", product_of_cyclics({2, 2}));
  add("Z2^4", product_of_cyclics({2, 2, 2, 2}));
  add("Z4xZ4", product_of_cyclics({4, 4}));
  add("Z4xZ4xZ2xZ2", product_of_cyclics({4, 4, 2, 2}));
  add("Z8xZ8", product_of_cyclics({8, 8}));
  add("Z3xZ3", product_of_cyclics({3, 3}));
  add("Z9xZ9", product_of_cyclics({9, 9}));
  add("Z3xZ3xZ3xZ3", product_of_cyclics({3, 3, 3, 3}));
  add("Z5xZ5", product_of_cyclics({5, 5}));
  add("Z6xZ6", product_of_cyclics({6, 6}));
  add("Z10xZ10", product_of_cyclics({10, 10}));
  add("Z12xZ12", product_of_cyclics({12, 12}));
  add("family2_p2_n3_s2", semidirect_equal_orders(2, 3, 2));
  add("family2_p3_n2_s1", semidirect_equal_orders(3, 2, 1));
  add("family2_p2_n3_s2_x_Z2xZ2",
      direct_product(semidirect_equal_orders(2, 3, 2), product_of_cyclics({2, 2})));
  add("family3_n1", family3_core(1));
  add("family3_n2", family3_core(2));
  add("family3_n1_x_Z2xZ2", direct_product(family3_core(1), product_of_cyclics({2, 2})));
  add("family3_n1_x_Z3xZ3", direct_product(family3_core(1), product_of_cyclics({3, 3})));
  add("family3_n2_x_Z2xZ2", direct_product(family3_core(2), product_of_cyclics({2, 2})));
  return corpus;
}

}  // namespace fx
