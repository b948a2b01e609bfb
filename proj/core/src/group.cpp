#include "tga/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "tga/lattice.hpp"

namespace tga {

GroupTable::GroupTable(int n, std::vector<int> flat) : n_(n), t_(std::move(flat)) {
  compute_inverses();
}

void GroupTable::compute_inverses() {
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inv_[a] = b;
        break;
      }
    }
    if (inv_[a] < 0)
      fail("NoInverse", "element " + std::to_string(a) + " has no two-sided inverse");
  }
}

GroupTable GroupTable::validate(const std::vector<std::vector<int>>& mul) {
  const int n = static_cast<int>(mul.size());
  if (n < 1) fail("NotLatinSquare", "empty table");
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(mul[r].size()) != n)
      fail("NotLatinSquare", "row " + std::to_string(r) + " has wrong length");
    for (int v : mul[r]) {
      if (v < 0 || v >= n)
        fail("NotLatinSquare", "entry out of range in row " + std::to_string(r));
      flat.push_back(v);
    }
  }
  auto at = [&](int a, int b) { return flat[static_cast<size_t>(a) * n + b]; };
  for (int g = 0; g < n; ++g)
    if (at(0, g) != g || at(g, 0) != g)
      fail("NoIdentityAtZero", "identity law fails at element " + std::to_string(g));
  for (int r = 0; r < n; ++r) {
    std::vector<char> seen_row(n, 0), seen_col(n, 0);
    for (int c = 0; c < n; ++c) {
      if (seen_row[at(r, c)]++)
        fail("NotLatinSquare", "row " + std::to_string(r) + " repeats " +
                                   std::to_string(at(r, c)));
      if (seen_col[at(c, r)]++)
        fail("NotLatinSquare", "column " + std::to_string(r) + " repeats " +
                                   std::to_string(at(c, r)));
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          fail("NotAssociative", "triple (" + std::to_string(a) + "," +
                                     std::to_string(b) + "," + std::to_string(c) + ")");
  return GroupTable(n, std::move(flat));
}

GroupTable GroupTable::trusted(int order, std::vector<int> flat) {
  return GroupTable(order, std::move(flat));
}

int GroupTable::pow(int g, long e) const {
  if (e < 0) {
    g = inv(g);
    e = -e;
  }
  int acc = 0;
  while (e > 0) {
    acc = mul(acc, g);
    --e;
  }
  return acc;
}

Subgroup::Subgroup(const GroupTable& g, std::vector<int> elems)
    : parent_(&g), elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
}

Subgroup Subgroup::whole(const GroupTable& g) {
  std::vector<int> all(g.order());
  for (int i = 0; i < g.order(); ++i) all[i] = i;
  return Subgroup(g, std::move(all));
}

Subgroup Subgroup::trivial(const GroupTable& g) { return Subgroup(g, {0}); }

Subgroup Subgroup::from_elements(const GroupTable& g, std::vector<int> elems) {
  Subgroup s(g, std::move(elems));
  if (!s.contains(0)) fail("NotASubgroup", "missing identity");
  for (int a : s.elements()) {
    if (!s.contains(g.inv(a))) fail("NotASubgroup", "not closed under inverse");
    for (int b : s.elements())
      if (!s.contains(g.mul(a, b))) fail("NotASubgroup", "not closed under product");
  }
  return s;
}

Subgroup Subgroup::generated(const GroupTable& g, const std::vector<int>& gens) {
  std::set<int> closure{0};
  std::vector<int> frontier{0};
  for (int x : gens)
    if (closure.insert(x).second) frontier.push_back(x);
  while (!frontier.empty()) {
    int a = frontier.back();
    frontier.pop_back();
    for (int b : std::set<int>(closure)) {
      for (int p : {g.mul(a, b), g.mul(b, a)}) {
        if (closure.insert(p).second) frontier.push_back(p);
      }
    }
  }
  return Subgroup(g, std::vector<int>(closure.begin(), closure.end()));
}

bool Subgroup::contains(int x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

long element_order(const GroupTable& g, int x) {
  long o = 1;
  int cur = x;
  while (cur != 0) {
    cur = g.mul(cur, x);
    ++o;
  }
  return o;
}

bool is_abelian(const GroupTable& g) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

bool is_abelian(const Subgroup& s) {
  const auto& g = s.parent();
  const auto& e = s.elements();
  for (size_t i = 0; i < e.size(); ++i)
    for (size_t j = i + 1; j < e.size(); ++j)
      if (g.mul(e[i], e[j]) != g.mul(e[j], e[i])) return false;
  return true;
}

bool is_cyclic(const Subgroup& s) {
  for (int x : s.elements())
    if (element_order(s.parent(), x) == s.size()) return true;
  return false;
}

bool is_normal(const Subgroup& s) {
  const auto& g = s.parent();
  for (int x : s.elements())
    for (int h = 0; h < g.order(); ++h)
      if (!s.contains(g.conj(x, h))) return false;
  return true;
}

Subgroup center(const GroupTable& g) {
  std::vector<int> z;
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int y = 0; y < g.order() && central; ++y)
      if (g.mul(x, y) != g.mul(y, x)) central = false;
    if (central) z.push_back(x);
  }
  return Subgroup::from_elements(g, std::move(z));
}

Subgroup commutator_subgroup(const GroupTable& g) {
  std::vector<int> comms;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      comms.push_back(g.mul(g.mul(a, b), g.inv(g.mul(b, a))));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return Subgroup::generated(g, comms);
}

Subgroup centralizer(const GroupTable& g, int x) {
  std::vector<int> c;
  for (int y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) c.push_back(y);
  return Subgroup::from_elements(g, std::move(c));
}

std::vector<std::vector<int>> conjugacy_classes(const GroupTable& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::set<int> cls;
    for (int h = 0; h < g.order(); ++h) cls.insert(g.conj(x, h));
    std::vector<int> v(cls.begin(), cls.end());
    for (int y : v) seen[y] = 1;
    classes.push_back(std::move(v));
  }
  return classes;
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const int n = g.order() * h.order();
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int a1 = 0; a1 < g.order(); ++a1)
    for (int a2 = 0; a2 < h.order(); ++a2)
      for (int b1 = 0; b1 < g.order(); ++b1)
        for (int b2 = 0; b2 < h.order(); ++b2) {
          int a = a1 * h.order() + a2;
          int b = b1 * h.order() + b2;
          flat[static_cast<size_t>(a) * n + b] =
              g.mul(a1, b1) * h.order() + h.mul(a2, b2);
        }
  return GroupTable::trusted(n, std::move(flat));
}

std::vector<std::pair<long, Subgroup>> sylow_decomposition(const GroupTable& g) {
  std::vector<std::pair<long, Subgroup>> out;
  std::vector<long> orders(g.order());
  for (int x = 0; x < g.order(); ++x) orders[x] = element_order(g, x);
  for (long p : prime_factors(g.order())) {
    std::vector<int> pelems;
    for (int x = 0; x < g.order(); ++x) {
      long o = orders[x];
      while (o % p == 0) o /= p;
      if (o == 1) pelems.push_back(x);
    }
    // closure test is the nilpotency criterion
    auto is_pel = [&](int x) {
      long o = orders[x];
      while (o % p == 0) o /= p;
      return o == 1;
    };
    for (int a : pelems)
      for (int b : pelems)
        if (!is_pel(g.mul(a, b)))
          fail("NotNilpotent",
               "p=" + std::to_string(p) + ": product of p-elements " +
                   std::to_string(a) + " and " + std::to_string(b) +
                   " is not a p-element");
    out.emplace_back(p, Subgroup::from_elements(g, std::move(pelems)));
  }
  return out;
}

std::vector<int> small_generating_set(const GroupTable& g) {
  std::vector<int> gens;
  Subgroup span = Subgroup::trivial(g);
  for (int x = 0; x < g.order() && span.size() < g.order(); ++x) {
    if (!span.contains(x)) {
      gens.push_back(x);
      span = Subgroup::generated(g, gens);
    }
  }
  return gens;
}

namespace {

std::vector<int> subgroup_generators(const Subgroup& s) {
  const auto& g = s.parent();
  std::vector<int> gens;
  Subgroup span = Subgroup::trivial(g);
  for (int x : s.elements()) {
    if (span.size() == s.size()) break;
    if (!span.contains(x)) {
      gens.push_back(x);
      span = Subgroup::generated(g, gens);
    }
  }
  return gens;
}

}  // namespace

std::vector<std::pair<int, long>> abelian_basis(const Subgroup& s) {
  const auto& g = s.parent();
  if (!is_abelian(s)) fail("NotAbelian", "abelian_basis on nonabelian subgroup");
  if (s.size() == 1) return {};

  const std::vector<int> gens = subgroup_generators(s);
  const int k = static_cast<int>(gens.size());

  // One exponent-vector representative per element (BFS over the generators),
  // then the edge relations a(x) + e_i - a(x g_i) generate the full relation
  // lattice of the generating set.
  std::map<int, std::vector<long>> rep;
  rep[0] = std::vector<long>(k, 0);
  std::vector<int> queue{0};
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    for (int i = 0; i < k; ++i) {
      int y = g.mul(x, gens[i]);
      if (!rep.count(y)) {
        auto v = rep[x];
        v[i] += 1;
        rep[y] = std::move(v);
        queue.push_back(y);
      }
    }
  }

  std::vector<std::vector<Int>> rel_cols;
  for (const auto& [x, ax] : rep) {
    for (int i = 0; i < k; ++i) {
      int y = g.mul(x, gens[i]);
      const auto& ay = rep.at(y);
      std::vector<Int> r(k);
      bool nonzero = false;
      for (int c = 0; c < k; ++c) {
        r[c] = Int(ax[c]) - Int(ay[c]);
        if (c == i) r[c] += 1;
        if (r[c] != 0) nonzero = true;
      }
      if (nonzero) rel_cols.push_back(std::move(r));
    }
  }

  IntMat rels(k);
  for (int r = 0; r < k; ++r) {
    rels[r].resize(rel_cols.size());
    for (size_t c = 0; c < rel_cols.size(); ++c) rels[r][c] = rel_cols[c][r];
  }
  IntMat basis = hnf_column_basis(rels);
  SmithResult snf = smith_normal_form(basis, /*track_left=*/true);

  std::vector<std::pair<int, long>> out;
  for (int j = 0; j < k; ++j) {
    Int d = snf.diag[j];
    if (d == 1) continue;
    int b = 0;
    for (int i = 0; i < k; ++i) {
      Int e = snf.left_inverse[i][j] % Int(element_order(g, gens[i]));
      b = g.mul(b, g.pow(gens[i], e.get_si()));
    }
    long order = element_order(g, b);
    if (Int(order) != d) fail("Internal", "abelian basis order mismatch");
    out.emplace_back(b, order);
  }
  // invariant-factor chain ascending
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  long total = 1;
  for (const auto& [b, o] : out) total *= o;
  if (total != s.size()) fail("Internal", "abelian basis does not span");
  return out;
}

AbelianInvariants abelian_invariants(const Subgroup& s) {
  auto basis = abelian_basis(s);
  AbelianInvariants inv;
  for (const auto& [b, d] : basis) {
    for (long p : prime_factors(d)) inv.primary.push_back(p_part(d, p));
  }
  std::sort(inv.primary.begin(), inv.primary.end());
  return inv;
}

std::vector<long> invariant_factor_form(const AbelianInvariants& inv) {
  // greedily peel the largest power of each prime into the last factor
  std::map<long, std::vector<long>> by_prime;  // descending prime powers
  for (long q : inv.primary) by_prime[prime_factors(q)[0]].push_back(q);
  size_t chain_len = 0;
  for (auto& [p, v] : by_prime) {
    std::sort(v.rbegin(), v.rend());
    chain_len = std::max(chain_len, v.size());
  }
  std::vector<long> factors(chain_len, 1);
  for (auto& [p, v] : by_prime)
    for (size_t i = 0; i < v.size(); ++i) factors[chain_len - 1 - i] *= v[i];
  return factors;
}

AbelianInvariants primary_form(const std::vector<long>& invariant_factors) {
  AbelianInvariants inv;
  for (long d : invariant_factors)
    for (long p : prime_factors(d)) inv.primary.push_back(p_part(d, p));
  std::sort(inv.primary.begin(), inv.primary.end());
  return inv;
}

std::pair<GroupTable, std::vector<int>> subgroup_table(const Subgroup& s) {
  const auto& g = s.parent();
  const auto& e = s.elements();  // sorted, e[0] == 0
  const int n = s.size();
  std::map<int, int> local;
  for (int i = 0; i < n; ++i) local[e[i]] = i;
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      flat[static_cast<size_t>(a) * n + b] = local.at(g.mul(e[a], e[b]));
  return {GroupTable::trusted(n, std::move(flat)), e};
}

}  // namespace tga
