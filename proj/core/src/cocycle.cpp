#include "tga/cocycle.hpp"

#include <algorithm>
#include <string>

namespace tga {

CocycleCheck verify_cocycle(const CocycleTable& c, const GroupTable& g) {
  const int n = g.order();
  if (c.order() != n) fail("PreconditionViolated", "cocycle and group order mismatch");
  for (int x = 0; x < n; ++x) {
    if (!c.alpha(0, x).is_identity() || !c.alpha(x, 0).is_identity())
      return {false, "not normalized at element " + std::to_string(x)};
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int xy = g.mul(x, y);
      const Monomial& axy = c.alpha(x, y);
      for (int z = 0; z < n; ++z) {
        if (!(axy.times(c.alpha(xy, z)) == c.alpha(y, z).times(c.alpha(x, g.mul(y, z))))) {
          return {false, "associativity fails at triple (" + std::to_string(x) + "," +
                             std::to_string(y) + "," + std::to_string(z) + ")"};
        }
      }
    }
  }
  return {true, ""};
}

std::pair<PcGroup, CocycleTable> cocycle_from_presentation(const MonomialPcPresentation& p) {
  PcGroup pc = group_from_presentation(p.base);
  const auto rules = CollectionRules::from(p);
  const int order = pc.table.order();
  const int r = p.base.num_gens();

  // step tables: multiplying a normal form by x_i on the right
  std::vector<std::vector<long>> step(r, std::vector<long>(order));
  std::vector<std::vector<Monomial>> coeff(
      r, std::vector<Monomial>(order, Monomial::one(p.conductor, p.num_indets)));
  for (long g = 0; g < order; ++g) {
    auto base = pc.letters_of(g);
    for (int i = 0; i < r; ++i) {
      auto w = base;
      w.push_back(i);
      Collected col = collect(rules, std::move(w));
      step[i][g] = pc.index_of(col.exps);
      coeff[i][g] = std::move(col.coeff);
    }
  }

  CocycleTable table(p.conductor, p.num_indets, static_cast<int>(order));
  for (long g = 0; g < order; ++g) {
    for (long h = 0; h < order; ++h) {
      long cur = g;
      Monomial acc = Monomial::one(p.conductor, p.num_indets);
      for (int i : pc.letters_of(h)) {
        acc = acc.times(coeff[i][cur]);
        cur = step[i][cur];
      }
      if (cur != pc.table.mul(static_cast<int>(g), static_cast<int>(h)))
        fail("Internal", "twisted collection disagrees with the group table");
      table.set(static_cast<int>(g), static_cast<int>(h), std::move(acc));
    }
  }
  return {std::move(pc), std::move(table)};
}

namespace {

struct BlockPlan {
  long root_order = 1;  // conductor contribution
  int gens = 0;
  size_t indets = 0;
  std::optional<long> exponent_claim;
  std::string description;
};

std::vector<long> half_degrees(const AbelianInvariants& inv) {
  auto [sym, half] = is_symmetric_type(inv);
  if (!sym) fail("Internal", "realization tail is not of symmetric type");
  return half->primary;
}

BlockPlan plan_sylow(const SylowVerdict& v) {
  BlockPlan plan;
  if (v.family == 1) {
    const auto& half = std::get<Family1Params>(v.params).half.primary;
    std::string degrees;
    for (long d : half) {
      plan.root_order = lcm_long(plan.root_order, d);
      degrees += (degrees.empty() ? "" : ",") + std::to_string(d);
    }
    plan.gens = static_cast<int>(2 * half.size());
    plan.indets = 2 * half.size();
    plan.exponent_claim = half.empty() ? 1 : *std::max_element(half.begin(), half.end());
    plan.description =
        "p=" + std::to_string(v.prime) + ": symbol blocks of degrees [" + degrees + "]";
  } else if (v.family == 2) {
    const auto& fp = std::get<Family2Params>(v.params);
    plan.root_order = ipow(fp.p, fp.s);
    auto tail = half_degrees(fp.tail);
    plan.gens = static_cast<int>(2 + 2 * tail.size());
    plan.indets = 2 + 2 * tail.size();
    plan.exponent_claim = ipow(fp.p, fp.n);
    plan.description = "p=" + std::to_string(fp.p) + ": core I (n=" + std::to_string(fp.n) +
                       ", s=" + std::to_string(fp.s) + ") with " + std::to_string(tail.size()) +
                       " tail blocks";
  } else {
    const auto& fp = std::get<Family3Params>(v.params);
    plan.root_order = 2;
    plan.gens = static_cast<int>(3 + 2 * fp.tail_pairs);
    plan.indets = 3 + 2 * static_cast<size_t>(fp.tail_pairs);
    if (fp.n > 1) plan.exponent_claim = ipow(2, fp.n);
    plan.description = "p=2: core II (n=" + std::to_string(fp.n) + ") with " +
                       std::to_string(fp.tail_pairs) + " tail pairs";
  }
  return plan;
}

struct Builder {
  MonomialPcPresentation pres;
  long m;
  size_t total_indets;
  int gen_off = 0;
  size_t t_off = 0;

  Monomial t(size_t local, long e = 1) const {
    return Monomial::t(m, total_indets, t_off + local, e);
  }
  Monomial zeta(long a) const { return Monomial::zeta(m, a, total_indets); }

  void add_generator(long order, Monomial power_value) {
    pres.base.relative_orders.push_back(order);
    pres.base.power_words.emplace_back();
    pres.power_values.push_back(std::move(power_value));
  }
  void add_conjugate(int j_local, int i_local, Word w, Monomial value) {
    auto key = std::make_pair(gen_off + j_local, gen_off + i_local);
    pres.base.conjugates[key] = std::move(w);
    pres.conj_values[key] = std::move(value);
  }

  void add_symbol_block(long d) {
    add_generator(d, t(0));
    add_generator(d, t(1));
    add_conjugate(1, 0, {{gen_off, 1}}, zeta(-m / d));
    gen_off += 2;
    t_off += 2;
  }

  void add_family2_core(long p, long n, long s) {
    add_generator(ipow(p, n), zeta(m / ipow(p, s)).times(t(0, ipow(p, n - s))));
    add_generator(ipow(p, n), t(1));
    add_conjugate(1, 0, {{gen_off, ipow(p, s) + 1}}, t(0, -1));
    gen_off += 2;
    t_off += 2;
  }

  void add_family3_core(long n) {
    const long q = ipow(2, n);  // pi has order 2q
    add_generator(2 * q, zeta(m / 2).times(t(0, q)));
    add_generator(q, t(1));
    add_generator(2, t(2));
    add_conjugate(1, 0, {{gen_off, 3}}, t(0, -1));
    add_conjugate(2, 0, {{gen_off, 2 * q - 1}}, zeta(m / 2).times(t(0, 1 - q)));
    gen_off += 3;
    t_off += 3;
  }
};

}  // namespace

Recipe realize(const LambdaVerdict& verdict) {
  if (!verdict.member)
    fail("PreconditionViolated", "realization requires a Lambda member verdict");

  std::vector<std::pair<long, const SylowVerdict*>> sylows;
  for (const auto& v : verdict.sylows) sylows.emplace_back(v.prime, &v);
  std::sort(sylows.begin(), sylows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  long m = 1;
  size_t total_indets = 0;
  std::vector<BlockPlan> plans;
  for (const auto& [p, v] : sylows) {
    plans.push_back(plan_sylow(*v));
    m = lcm_long(m, plans.back().root_order);
    total_indets += plans.back().indets;
  }

  Builder b{MonomialPcPresentation{}, m, total_indets};
  b.pres.conductor = m;
  b.pres.num_indets = total_indets;

  RealizationClaims claims;
  std::optional<long> claim = 1;
  for (size_t k = 0; k < sylows.size(); ++k) {
    const SylowVerdict& v = *sylows[k].second;
    claims.blocks.push_back(plans[k].description);
    if (claim && plans[k].exponent_claim)
      claim = lcm_long(*claim, *plans[k].exponent_claim);
    else
      claim.reset();

    if (v.family == 1) {
      for (long d : std::get<Family1Params>(v.params).half.primary) b.add_symbol_block(d);
    } else if (v.family == 2) {
      const auto& fp = std::get<Family2Params>(v.params);
      b.add_family2_core(fp.p, fp.n, fp.s);
      for (long d : half_degrees(fp.tail)) b.add_symbol_block(d);
    } else {
      const auto& fp = std::get<Family3Params>(v.params);
      b.add_family3_core(fp.n);
      for (long k2 = 0; k2 < fp.tail_pairs; ++k2) b.add_symbol_block(2);
    }
  }
  claims.exponent_claim = claim;
  if (sylows.empty())
    claims.construction_case = "trivial";
  else if (sylows.size() > 1)
    claims.construction_case = "IV";
  else if (sylows[0].second->family == 1)
    claims.construction_case = "symbol";
  else
    claims.construction_case = sylows[0].second->family == 2 ? "I" : "II";

  auto [group, cocycle] = cocycle_from_presentation(b.pres);
  return Recipe{std::move(b.pres), std::move(group), std::move(cocycle), std::move(claims)};
}

}  // namespace tga
