#include "support/oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace tga;

namespace oracle {

AbelianInvariants census_invariants(const GroupTable& g) {
  // for each prime p with a_k = log_p #{x : x^{p^k} = 1}, the multiplicity of
  // p^k in the primary decomposition is 2 a_k - a_{k-1} - a_{k+1}
  AbelianInvariants inv;
  for (long p : prime_factors(g.order())) {
    std::vector<long> a{0};  // a_0 = log_p 1
    for (long k = 1;; ++k) {
      const long q = ipow(p, k);
      long count = 0;
      for (int x = 0; x < g.order(); ++x)
        if (g.pow(x, q) == 0) ++count;
      long log = 0;
      for (long c = count; c > 1; c /= p) ++log;
      a.push_back(log);
      if (k > 1 && a[k] == a[k - 1]) break;
    }
    a.push_back(a.back());
    for (size_t k = 1; k + 1 < a.size(); ++k) {
      const long mult = 2 * a[k] - a[k - 1] - a[k + 1];
      for (long i = 0; i < mult; ++i) inv.primary.push_back(ipow(p, static_cast<long>(k)));
    }
  }
  std::sort(inv.primary.begin(), inv.primary.end());
  return inv;
}

std::vector<std::vector<int>> all_subgroups(const GroupTable& g) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue{{0}};
  seen.insert({0});
  for (size_t head = 0; head < queue.size(); ++head) {
    const std::vector<int> cur = queue[head];
    for (int x = 1; x < g.order(); ++x) {
      if (std::binary_search(cur.begin(), cur.end(), x)) continue;
      auto gens = cur;
      gens.push_back(x);
      auto closure = Subgroup::generated(g, gens).elements();
      if (seen.insert(closure).second) queue.push_back(std::move(closure));
    }
  }
  return queue;
}

namespace {

bool is_symmetric_census(const GroupTable& g) {
  auto inv = census_invariants(g);
  for (size_t i = 0; i < inv.primary.size(); i += 2) {
    if (i + 1 >= inv.primary.size() || inv.primary[i] != inv.primary[i + 1]) return false;
  }
  return true;
}

bool abelian(const GroupTable& g) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

// all subgroups of g whose elements commute with every element of s
std::vector<std::vector<int>> centralizing_subgroups(const GroupTable& g,
                                                     const std::vector<int>& s) {
  std::vector<int> pool;
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (int y : s)
      if (g.mul(x, y) != g.mul(y, x)) ok = false;
    if (ok) pool.push_back(x);
  }
  Subgroup u = Subgroup::from_elements(g, pool);  // centralizer of a set is a subgroup
  auto [table, to_parent] = subgroup_table(u);
  std::vector<std::vector<int>> result;
  for (const auto& local : all_subgroups(table)) {
    std::vector<int> mapped;
    for (int x : local) mapped.push_back(to_parent[x]);
    std::sort(mapped.begin(), mapped.end());
    result.push_back(std::move(mapped));
  }
  return result;
}

bool good_complement(const GroupTable& g, const std::vector<int>& s_elems,
                     const std::vector<int>& c_elems, long max_exponent) {
  if (c_elems.size() * s_elems.size() != static_cast<size_t>(g.order())) return false;
  for (int x : c_elems) {
    if (x != 0 && std::binary_search(s_elems.begin(), s_elems.end(), x)) return false;
    if (element_order(g, x) > max_exponent) return false;
  }
  auto [table, to_parent] = subgroup_table(Subgroup::from_elements(g, c_elems));
  return abelian(table) && is_symmetric_census(table);
}

bool lambda_p_member(const GroupTable& g, long p) {
  if (g.order() == 1) return true;
  if (abelian(g)) return is_symmetric_census(g);

  std::vector<long> order(g.order());
  for (int x = 0; x < g.order(); ++x) order[x] = element_order(g, x);

  // family 2: all (pi, sigma, s) witnesses
  for (int pi = 1; pi < g.order(); ++pi) {
    long n = 0;
    for (long q = 1; q < order[pi]; q *= p) ++n;
    if (ipow(p, n) != order[pi] || n < 2) continue;
    for (int sigma = 1; sigma < g.order(); ++sigma) {
      if (order[sigma] != order[pi]) continue;
      for (long s = 1; s < n; ++s) {
        if (p == 2 && s == 1) continue;
        if (g.conj(pi, sigma) != g.pow(pi, ipow(p, s) + 1)) continue;
        Subgroup sg = Subgroup::generated(g, {pi, sigma});
        if (static_cast<long>(sg.size()) != order[pi] * order[pi]) continue;
        bool cyclic_meet_trivial = true;
        for (int k = 1; k < order[sigma]; ++k) {
          int x = g.pow(sigma, k);
          int cur = pi;
          for (int j = 1; j < order[pi]; ++j, cur = g.mul(cur, pi))
            if (cur == x) cyclic_meet_trivial = false;
        }
        if (!cyclic_meet_trivial) continue;
        for (const auto& c : centralizing_subgroups(g, sg.elements()))
          if (good_complement(g, sg.elements(), c, ipow(p, s))) return true;
      }
    }
  }

  if (p != 2) return false;

  // family 3: all (pi, sigma, tau) witnesses
  for (int pi = 1; pi < g.order(); ++pi) {
    long n = 0;
    for (long q = 1; q < order[pi]; q *= 2) ++n;
    if (ipow(2, n) != order[pi] || n < 2) continue;
    --n;  // order[pi] = 2^{n+1}
    for (int sigma = 1; sigma < g.order(); ++sigma) {
      if (order[sigma] != ipow(2, n)) continue;
      if (g.conj(pi, sigma) != g.pow(pi, 3)) continue;
      for (int tau = 1; tau < g.order(); ++tau) {
        if (order[tau] != 2) continue;
        if (g.conj(pi, tau) != g.inv(pi)) continue;
        if (g.mul(sigma, tau) != g.mul(tau, sigma)) continue;
        Subgroup a = Subgroup::generated(g, {sigma, tau});
        if (static_cast<long>(a.size()) != ipow(2, n + 1)) continue;
        bool meets = false;
        int cur = pi;
        for (long k = 1; k < order[pi]; ++k, cur = g.mul(cur, pi))
          if (a.contains(cur)) meets = true;
        if (meets) continue;
        Subgroup sg = Subgroup::generated(g, {pi, sigma, tau});
        if (static_cast<long>(sg.size()) != ipow(2, 2 * n + 2)) continue;
        for (const auto& c : centralizing_subgroups(g, sg.elements()))
          if (good_complement(g, sg.elements(), c, 2)) return true;
      }
    }
  }
  return false;
}

}  // namespace

bool lambda_member(const GroupTable& g) {
  // independent nilpotency test: the p-elements must be closed under
  // multiplication for every prime p
  for (long p : prime_factors(g.order())) {
    std::vector<int> pelems;
    for (int x = 0; x < g.order(); ++x) {
      long o = element_order(g, x);
      while (o % p == 0) o /= p;
      if (o == 1) pelems.push_back(x);
    }
    for (int a : pelems)
      for (int b : pelems) {
        int ab = g.mul(a, b);
        long o = element_order(g, ab);
        while (o % p == 0) o /= p;
        if (o != 1) return false;  // not nilpotent
      }
    auto [table, to_parent] = subgroup_table(Subgroup::from_elements(g, pelems));
    if (!lambda_p_member(table, p)) return false;
  }
  return true;
}

std::vector<long> quotient_invariants_bruteforce(const std::vector<std::vector<long>>& cols,
                                                 size_t n) {
  // membership in the lattice via exact rational elimination
  auto in_lattice = [&](const std::vector<long>& v) {
    // solve cols * x = v over Q and check integrality (cols square, full rank
    // not required: use elimination on an augmented matrix)
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(cols.size() + 1));
    for (size_t j = 0; j < cols.size(); ++j)
      for (size_t i = 0; i < n; ++i) m[i][j] = cols[j][i];
    for (size_t i = 0; i < n; ++i) m[i][cols.size()] = v[i];
    size_t rank = 0;
    std::vector<size_t> pivot_cols;
    for (size_t col = 0; col < cols.size() && rank < n; ++col) {
      size_t piv = rank;
      while (piv < n && m[piv][col] == 0) ++piv;
      if (piv == n) continue;
      std::swap(m[rank], m[piv]);
      for (size_t i = 0; i < n; ++i) {
        if (i == rank || m[i][col] == 0) continue;
        Rat f = m[i][col] / m[rank][col];
        for (size_t j = col; j <= cols.size(); ++j) m[i][j] -= f * m[rank][j];
      }
      pivot_cols.push_back(col);
      ++rank;
    }
    for (size_t i = rank; i < n; ++i)
      if (m[i][cols.size()] != 0) return false;  // inconsistent
    for (size_t r = 0; r < rank; ++r) {
      Rat x = m[r][cols.size()] / m[r][pivot_cols[r]];
      if (x.get_den() != 1) return false;
    }
    return true;
  };

  // enumerate coset representatives of Z^n / L
  std::vector<std::vector<long>> reps{std::vector<long>(n, 0)};
  auto find_rep = [&](const std::vector<long>& v) -> int {
    for (size_t r = 0; r < reps.size(); ++r) {
      std::vector<long> diff(n);
      for (size_t i = 0; i < n; ++i) diff[i] = v[i] - reps[r][i];
      if (in_lattice(diff)) return static_cast<int>(r);
    }
    return -1;
  };
  for (size_t head = 0; head < reps.size(); ++head) {
    if (reps.size() > 4096) throw std::runtime_error("quotient too large for brute force");
    for (size_t i = 0; i < n; ++i) {
      for (long d : {1L, -1L}) {
        auto v = reps[head];
        v[i] += d;
        if (find_rep(v) < 0) reps.push_back(std::move(v));
      }
    }
  }

  // primary invariants from the order census of the quotient group
  std::map<long, long> order_count;
  for (const auto& r : reps) {
    long k = 1;
    std::vector<long> cur = r;
    while (!in_lattice(cur)) {
      ++k;
      for (size_t i = 0; i < n; ++i) cur[i] = r[i] * k;
    }
    ++order_count[k];
  }
  std::vector<long> inv;
  long group_order = static_cast<long>(reps.size());
  for (long p = 2; p <= group_order; ++p) {
    if (group_order % p != 0) continue;
    bool prime = true;
    for (long d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) continue;
    // a_k = log_p #{x : p^k x = 0}
    std::vector<long> a{0};
    for (long k = 1;; ++k) {
      long count = 0;
      const long q = ipow(p, k);
      for (const auto& [o, cnt] : order_count)
        if (q % o == 0) count += cnt;
      long log = 0;
      for (long c = count; c > 1; c /= p) ++log;
      a.push_back(log);
      if (k > 1 && a[k] == a[k - 1]) break;
    }
    a.push_back(a.back());
    for (size_t k = 1; k + 1 < a.size(); ++k)
      for (long i = 0; i < 2 * a[k] - a[k - 1] - a[k + 1]; ++i)
        inv.push_back(ipow(p, static_cast<long>(k)));
  }
  std::sort(inv.begin(), inv.end());
  return inv;
}

}  // namespace oracle
