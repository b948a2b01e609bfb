#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tga/cocycle.hpp"
#include "tga/group.hpp"
#include "tga/presentation.hpp"

namespace fx {

tga::GroupTable cyclic(long n);
tga::GroupTable product_of_cyclics(const std::vector<long>& orders);

tga::GroupTable s3();
tga::GroupTable d4();
tga::GroupTable q8();

// Z_{p^n} semidirect Z_{p^n} with sigma pi sigma^-1 = pi^{p^s + 1}
tga::GroupTable semidirect_equal_orders(long p, long n, long s);

// Z_{2^{n+1}} semidirect (Z_{2^n} x Z_2): sigma pi sigma^-1 = pi^3,
// tau pi tau^-1 = pi^-1
tga::GroupTable family3_core(long n);

// twisted presentations for hand-built cocycles
tga::MonomialPcPresentation symbol_presentation(long d);       // (t1, t2)_d
tga::MonomialPcPresentation collision_presentation();          // x^2 = t1, y^2 = t1

struct NamedGroup {
  std::string name;
  tga::GroupTable table;
  bool in_lambda;  // expected classification
};

// >= 20 groups of order <= 64 with expected verdicts
std::vector<NamedGroup> corpus_small();
// realizable groups of order <= 256
std::vector<NamedGroup> corpus_lambda();

}  // namespace fx
