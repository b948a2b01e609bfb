#include "tga/lambda.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace tga {

std::pair<bool, std::optional<AbelianInvariants>> is_symmetric_type(
    const AbelianInvariants& inv) {
  AbelianInvariants half;
  size_t i = 0;
  while (i < inv.primary.size()) {
    if (i + 1 >= inv.primary.size() || inv.primary[i] != inv.primary[i + 1])
      return {false, std::nullopt};
    half.primary.push_back(inv.primary[i]);
    i += 2;
  }
  return {true, half};
}

namespace {

std::vector<int> cyclic_elements(const GroupTable& g, int x) {
  std::vector<int> pow{0};
  int cur = x;
  while (cur != 0) {
    pow.push_back(cur);
    cur = g.mul(cur, x);
  }
  std::sort(pow.begin(), pow.end());
  return pow;
}

bool meets_nontrivially(const std::vector<int>& sorted_a, const Subgroup& b) {
  for (int x : sorted_a)
    if (x != 0 && b.contains(x)) return true;
  return false;
}

bool cyclic_subgroup_normal(const GroupTable& g, const std::vector<int>& cyc) {
  for (int x : cyc)
    for (int h = 0; h < g.order(); ++h)
      if (!std::binary_search(cyc.begin(), cyc.end(), g.conj(x, h))) return false;
  return true;
}

// Elements of g commuting with every element of S and passing `eligible`.
std::vector<int> commuting_pool(const GroupTable& g, const Subgroup& S,
                                const std::function<bool(int)>& eligible) {
  std::vector<int> pool;
  for (int x = 0; x < g.order(); ++x) {
    if (!eligible(x)) continue;
    bool ok = true;
    for (int s : S.elements())
      if (g.mul(x, s) != g.mul(s, x)) {
        ok = false;
        break;
      }
    if (ok) pool.push_back(x);
  }
  return pool;
}

// Backtracking search for a subgroup C with every element drawn from `pool`,
// C meeting S trivially, |C| = target, and accept(C) true. Elements of pool
// commute with S, so S C is automatically an internal direct product when
// the size works out.
std::optional<Subgroup> find_complement(const GroupTable& g, const Subgroup& S,
                                        const std::vector<int>& pool, int target,
                                        const std::function<bool(const Subgroup&)>& accept) {
  if (target == 1) {
    Subgroup c = Subgroup::trivial(g);
    if (accept(c)) return c;
    return std::nullopt;
  }
  std::set<int> pool_set(pool.begin(), pool.end());
  std::set<std::vector<int>> visited;

  std::function<std::optional<Subgroup>(const Subgroup&, size_t)> dfs =
      [&](const Subgroup& c, size_t start) -> std::optional<Subgroup> {
    if (c.size() == target) {
      if (accept(c)) return c;
      return std::nullopt;
    }
    for (size_t idx = start; idx < pool.size(); ++idx) {
      int x = pool[idx];
      if (c.contains(x)) continue;
      auto gens = c.elements();
      gens.push_back(x);
      Subgroup c2 = Subgroup::generated(g, gens);
      if (target % c2.size() != 0) continue;
      bool bad = false;
      for (int y : c2.elements()) {
        if (!pool_set.count(y)) {
          bad = true;  // escaped the eligible pool
          break;
        }
        if (y != 0 && S.contains(y)) {
          bad = true;  // meets S
          break;
        }
      }
      if (bad) continue;
      if (!visited.insert(c2.elements()).second) continue;
      if (auto found = dfs(c2, idx + 1)) return found;
    }
    return std::nullopt;
  };
  return dfs(Subgroup::trivial(g), 0);
}

// Pair up an abelian subgroup of symmetric type into generators of equal
// order; returns pairs (gamma_{2i-1}, gamma_{2i}).
std::optional<std::vector<std::pair<std::pair<int, int>, long>>> symmetric_pairs(
    const Subgroup& c) {
  std::vector<std::pair<int, long>> primary;  // (element, prime-power order)
  for (const auto& [b, d] : abelian_basis(c)) {
    for (long p : prime_factors(d)) {
      long q = p_part(d, p);
      primary.emplace_back(c.parent().pow(b, d / q), q);
    }
  }
  std::sort(primary.begin(), primary.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  if (primary.size() % 2 != 0) return std::nullopt;
  std::vector<std::pair<std::pair<int, int>, long>> pairs;
  for (size_t i = 0; i < primary.size(); i += 2) {
    if (primary[i].second != primary[i + 1].second) return std::nullopt;
    pairs.push_back({{primary[i].first, primary[i + 1].first}, primary[i].second});
  }
  return pairs;
}

void add_tail_witness(SylowVerdict& v, const Subgroup& c) {
  auto pairs = symmetric_pairs(c);
  int idx = 1;
  for (const auto& [pr, q] : *pairs) {
    v.witness["g" + std::to_string(idx++)] = pr.first;
    v.witness["g" + std::to_string(idx++)] = pr.second;
  }
}

std::optional<SylowVerdict> scan_family2(const GroupTable& g, long p) {
  std::vector<long> order(g.order());
  for (int x = 0; x < g.order(); ++x) order[x] = element_order(g, x);

  for (int pi = 1; pi < g.order(); ++pi) {
    long opi = order[pi];
    long n = 0;
    for (long q = p; q < opi; q *= p) ++n;
    ++n;  // opi = p^n
    if (n < 2 || ipow(p, n) != opi) continue;
    auto cyc = cyclic_elements(g, pi);
    if (!cyclic_subgroup_normal(g, cyc)) continue;

    for (int sigma = 1; sigma < g.order(); ++sigma) {
      if (order[sigma] != opi || sigma == pi) continue;
      // sigma pi sigma^{-1} must be pi^{p^s + 1} for some 1 <= s < n
      int conj = g.conj(pi, sigma);
      long s = -1;
      for (long cand = 1; cand < n; ++cand) {
        if (p == 2 && cand == 1) continue;
        if (g.pow(pi, ipow(p, cand) + 1) == conj) {
          s = cand;
          break;
        }
      }
      if (s < 0) continue;
      Subgroup sig_cyc = Subgroup::generated(g, {sigma});
      if (meets_nontrivially(cyc, sig_cyc)) continue;
      Subgroup S = Subgroup::generated(g, {pi, sigma});
      if (static_cast<long>(S.size()) != opi * opi) continue;

      const long bound = ipow(p, s);
      auto pool = commuting_pool(g, S, [&](int x) { return order[x] <= bound; });
      const int target = g.order() / S.size();
      auto accept = [&](const Subgroup& c) {
        if (!is_abelian(c)) return false;
        return is_symmetric_type(abelian_invariants(c)).first;
      };
      if (auto c = find_complement(g, S, pool, target, accept)) {
        SylowVerdict v;
        v.prime = p;
        v.family = 2;
        v.params = Family2Params{p, n, s, abelian_invariants(*c)};
        v.witness["pi"] = pi;
        v.witness["sigma"] = sigma;
        add_tail_witness(v, *c);
        return v;
      }
    }
  }
  return std::nullopt;
}

std::optional<SylowVerdict> scan_family3(const GroupTable& g) {
  std::vector<long> order(g.order());
  for (int x = 0; x < g.order(); ++x) order[x] = element_order(g, x);

  for (int pi = 1; pi < g.order(); ++pi) {
    long opi = order[pi];  // 2^{n+1}, n >= 1
    if (opi < 4) continue;
    long n = -1;
    for (long q = 4, e = 1; q <= opi; q *= 2, ++e)
      if (q == opi) n = e;
    if (n < 1) continue;
    auto cyc = cyclic_elements(g, pi);
    if (!cyclic_subgroup_normal(g, cyc)) continue;
    const int pi_inv = g.inv(pi);
    const int pi_cubed = g.pow(pi, 3);

    for (int sigma = 1; sigma < g.order(); ++sigma) {
      if (order[sigma] != ipow(2, n)) continue;
      if (g.conj(pi, sigma) != pi_cubed) continue;
      Subgroup sig_cyc = Subgroup::generated(g, {sigma});
      if (meets_nontrivially(cyc, sig_cyc)) continue;

      for (int tau = 1; tau < g.order(); ++tau) {
        if (order[tau] != 2) continue;
        if (g.mul(sigma, tau) != g.mul(tau, sigma)) continue;
        if (g.conj(pi, tau) != pi_inv) continue;
        Subgroup a = Subgroup::generated(g, {sigma, tau});
        if (static_cast<long>(a.size()) != ipow(2, n + 1)) continue;
        if (meets_nontrivially(cyc, a)) continue;
        Subgroup S = Subgroup::generated(g, {pi, sigma, tau});
        if (static_cast<long>(S.size()) != ipow(2, 2 * n + 2)) continue;

        auto pool = commuting_pool(g, S, [&](int x) { return order[x] <= 2; });
        const int target = g.order() / S.size();
        auto accept = [&](const Subgroup& c) {
          if (!is_abelian(c)) return false;
          return is_symmetric_type(abelian_invariants(c)).first;
        };
        if (auto c = find_complement(g, S, pool, target, accept)) {
          SylowVerdict v;
          v.prime = 2;
          v.family = 3;
          v.params = Family3Params{n, static_cast<long>(c->size() > 1
                                       ? abelian_invariants(*c).primary.size() / 2
                                       : 0)};
          v.witness["pi"] = pi;
          v.witness["sigma"] = sigma;
          v.witness["tau"] = tau;
          add_tail_witness(v, *c);
          return v;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::variant<SylowVerdict, std::string> classify_p_group(const GroupTable& g, long p) {
  if (g.order() > 1) {
    long o = g.order();
    while (o % p == 0) o /= p;
    if (o != 1) fail("PreconditionViolated", "classify_p_group: order is not a power of p");
  }

  if (is_abelian(g)) {
    auto inv = abelian_invariants(Subgroup::whole(g));
    auto [sym, half] = is_symmetric_type(inv);
    if (!sym) return std::string("Abelian-but-not-symmetric");
    SylowVerdict v;
    v.prime = p;
    v.family = 1;
    v.params = Family1Params{*half};
    add_tail_witness(v, Subgroup::whole(g));
    return v;
  }

  // Theorem-1 pre-filter: Lambda members have cyclic commutator subgroups.
  if (!is_cyclic(commutator_subgroup(g))) return std::string("CommutatorNotCyclic");

  if (auto v = scan_family2(g, p)) return *v;
  if (p == 2) {
    if (auto v = scan_family3(g)) return *v;
    return std::string("NoFamily3Witness");
  }
  return std::string("NoFamily2Witness");
}

LambdaVerdict classify(const GroupTable& g) {
  LambdaVerdict verdict;
  std::vector<std::pair<long, Subgroup>> sylows;
  try {
    sylows = sylow_decomposition(g);
  } catch (const Error& e) {
    verdict.member = false;
    verdict.reason = "NotNilpotent";
    return verdict;
  }
  if (!is_cyclic(commutator_subgroup(g))) {
    verdict.member = false;
    verdict.reason = "CommutatorNotCyclic";
    return verdict;
  }
  for (const auto& [p, sub] : sylows) {
    auto [table, to_parent] = subgroup_table(sub);
    auto res = classify_p_group(table, p);
    if (std::holds_alternative<std::string>(res)) {
      verdict.member = false;
      verdict.reason = "SylowNotInLambda(" + std::to_string(p) +
                       "): " + std::get<std::string>(res);
      verdict.sylows.clear();
      return verdict;
    }
    SylowVerdict v = std::get<SylowVerdict>(res);
    for (auto& [name, el] : v.witness) el = to_parent[el];
    verdict.sylows.push_back(std::move(v));
  }
  verdict.member = true;
  return verdict;
}

bool has_z4_klein_direct_factor(const GroupTable& g) {
  if (g.order() % 16 != 0) return false;
  std::vector<long> order(g.order());
  for (int x = 0; x < g.order(); ++x) order[x] = element_order(g, x);

  for (int pi = 1; pi < g.order(); ++pi) {
    if (order[pi] != 4) continue;
    auto cyc = cyclic_elements(g, pi);
    if (!cyclic_subgroup_normal(g, cyc)) continue;
    const int pi_inv = g.inv(pi);
    for (int sigma = 1; sigma < g.order(); ++sigma) {
      if (order[sigma] != 2 || g.conj(pi, sigma) != pi_inv) continue;
      for (int tau = sigma + 1; tau < g.order(); ++tau) {
        if (order[tau] != 2 || g.conj(pi, tau) != pi_inv) continue;
        if (g.mul(sigma, tau) != g.mul(tau, sigma)) continue;
        Subgroup a = Subgroup::generated(g, {sigma, tau});
        if (a.size() != 4 || meets_nontrivially(cyc, a)) continue;
        Subgroup S = Subgroup::generated(g, {pi, sigma, tau});
        if (S.size() != 16) continue;
        auto pool = commuting_pool(g, S, [](int) { return true; });
        if (find_complement(g, S, pool, g.order() / 16,
                            [](const Subgroup&) { return true; }))
          return true;
      }
    }
  }
  return false;
}

bool weak_rigidity_predicted(const GroupTable& g) {
  LambdaVerdict verdict = classify(g);
  if (!verdict.member)
    fail("PreconditionViolated", "weak_rigidity_predicted requires a Lambda member");
  bool family3_n1 = false;
  for (const auto& v : verdict.sylows)
    if (v.family == 3 && std::get<Family3Params>(v.params).n == 1) family3_n1 = true;
  return !(family3_n1 || has_z4_klein_direct_factor(g));
}

}  // namespace tga
