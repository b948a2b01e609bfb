#include "tga/presentation.hpp"

#include <algorithm>
#include <string>

namespace tga {

namespace {

std::vector<int> expand_word(const Word& w) {
  std::vector<int> letters;
  for (const auto& [gen, exp] : w)
    for (long e = 0; e < exp; ++e) letters.push_back(gen);
  return letters;
}

void validate_structure(const MonomialPcPresentation& p) {
  const int r = p.base.num_gens();
  if (static_cast<int>(p.base.power_words.size()) != r ||
      static_cast<int>(p.power_values.size()) != r)
    fail("InconsistentPresentation", "power relation count mismatch");
  for (int i = 0; i < r; ++i) {
    if (p.base.relative_orders[i] < 1)
      fail("InconsistentPresentation", "relative order < 1 for generator " + std::to_string(i + 1));
    for (const auto& [gen, exp] : p.base.power_words[i])
      if (gen <= i || gen >= r || exp < 1)
        fail("InconsistentPresentation",
             "power word of generator " + std::to_string(i + 1) + " uses a disallowed generator");
  }
  for (const auto& [key, w] : p.base.conjugates) {
    auto [j, i] = key;
    if (!(0 <= i && i < j && j < r))
      fail("InconsistentPresentation", "conjugate relation with bad generator pair");
    for (const auto& [gen, exp] : w)
      if (gen < i || gen >= r || exp < 1)
        fail("InconsistentPresentation",
             "conjugate word for pair (" + std::to_string(j + 1) + "," +
                 std::to_string(i + 1) + ") uses a disallowed generator");
  }
  for (const auto& mono : p.power_values)
    if (mono.m != p.conductor || mono.num_indets() != p.num_indets)
      fail("ConductorMismatch", "power value outside the presentation field");
  for (const auto& [key, mono] : p.conj_values)
    if (mono.m != p.conductor || mono.num_indets() != p.num_indets)
      fail("ConductorMismatch", "conjugation value outside the presentation field");
}

}  // namespace

MonomialPcPresentation MonomialPcPresentation::untwisted(const PcPresentation& p) {
  MonomialPcPresentation m;
  m.base = p;
  m.conductor = 1;
  m.num_indets = 0;
  m.power_values.assign(p.num_gens(), Monomial::one(1, 0));
  return m;
}

CollectionRules CollectionRules::from(const MonomialPcPresentation& p) {
  validate_structure(p);
  CollectionRules rules;
  rules.conductor = p.conductor;
  rules.num_indets = p.num_indets;
  rules.orders = p.base.relative_orders;
  const int r = p.base.num_gens();
  rules.powers.resize(r);
  for (int i = 0; i < r; ++i)
    rules.powers[i] = {p.power_values[i], expand_word(p.base.power_words[i])};
  for (int j = 0; j < r; ++j) {
    for (int i = 0; i < j; ++i) {
      Monomial value = Monomial::one(p.conductor, p.num_indets);
      std::vector<int> letters{i};  // default: x_j x_i = x_i x_j
      auto key = std::make_pair(j, i);
      if (auto it = p.base.conjugates.find(key); it != p.base.conjugates.end())
        letters = expand_word(it->second);
      if (auto it = p.conj_values.find(key); it != p.conj_values.end()) value = it->second;
      rules.swaps[key] = {std::move(value), std::move(letters)};
    }
  }
  return rules;
}

namespace {

// run length of equal letters ending at position k
size_t run_length(const std::vector<int>& w, size_t k) {
  size_t len = 1;
  while (len <= k && w[k - len] == w[k]) ++len;
  return len;
}

enum class Violation { None, Swap, Power };

Violation violation_at(const CollectionRules& rules, const std::vector<int>& w, size_t k) {
  if (k >= 1 && w[k - 1] > w[k]) return Violation::Swap;
  if (run_length(w, k) == static_cast<size_t>(rules.orders[w[k]])) return Violation::Power;
  return Violation::None;
}

// apply the violation at position k in place; returns the resume position
size_t apply_rewrite(const CollectionRules& rules, std::vector<int>& w, size_t k,
                     Violation v, Monomial& coeff) {
  if (v == Violation::Swap) {
    const int j = w[k - 1], i = w[k];
    const auto& [value, letters] = rules.swaps.at({j, i});
    coeff = coeff.times(value);
    std::vector<int> repl = letters;
    repl.push_back(j);
    w.erase(w.begin() + static_cast<long>(k) - 1, w.begin() + static_cast<long>(k) + 1);
    w.insert(w.begin() + static_cast<long>(k) - 1, repl.begin(), repl.end());
    return k - 1;
  }
  const int i = w[k];
  const size_t o = static_cast<size_t>(rules.orders[i]);
  const auto& [value, letters] = rules.powers[i];
  coeff = coeff.times(value);
  const size_t a = k + 1 - o;
  w.erase(w.begin() + static_cast<long>(a), w.begin() + static_cast<long>(k) + 1);
  w.insert(w.begin() + static_cast<long>(a), letters.begin(), letters.end());
  return a;
}

Collected finish(const CollectionRules& rules, const std::vector<int>& w, Monomial coeff) {
  Collected c;
  c.coeff = std::move(coeff);
  c.exps.assign(rules.orders.size(), 0);
  for (size_t k = 0; k < w.size(); ++k) {
    if (k && w[k] < w[k - 1]) fail("Internal", "collection output not in normal form");
    c.exps[w[k]] += 1;
  }
  return c;
}

}  // namespace

Collected collect(const CollectionRules& rules, std::vector<int> letters) {
  Monomial coeff = Monomial::one(rules.conductor, rules.num_indets);
  size_t steps = 0;
  size_t k = 0;
  while (k < letters.size()) {
    Violation v = violation_at(rules, letters, k);
    if (v == Violation::None) {
      ++k;
      continue;
    }
    if (++steps > rules.step_cap)
      fail("InconsistentPresentation", "collection exceeded the step cap");
    size_t resume = apply_rewrite(rules, letters, k, v, coeff);
    k = resume > 0 ? resume - 1 : 0;
  }
  return finish(rules, letters, std::move(coeff));
}

Collected collect_rightmost(const CollectionRules& rules, std::vector<int> letters) {
  Monomial coeff = Monomial::one(rules.conductor, rules.num_indets);
  size_t steps = 0;
  while (true) {
    size_t pos = letters.size();
    Violation found = Violation::None;
    for (size_t k = letters.size(); k-- > 0;) {
      Violation v = violation_at(rules, letters, k);
      if (v != Violation::None) {
        pos = k;
        found = v;
        break;
      }
    }
    if (found == Violation::None) break;
    if (++steps > rules.step_cap)
      fail("InconsistentPresentation", "collection exceeded the step cap");
    apply_rewrite(rules, letters, pos, found, coeff);
  }
  return finish(rules, letters, std::move(coeff));
}

long PcGroup::index_of(const std::vector<long>& exps) const {
  long idx = 0;
  for (size_t i = 0; i < exps.size(); ++i) idx += exps[i] * strides[i];
  return idx;
}

std::vector<long> PcGroup::exps_of(long idx) const {
  std::vector<long> exps(pres.num_gens(), 0);
  for (size_t i = 0; i < exps.size(); ++i) {
    exps[i] = idx / strides[i];
    idx %= strides[i];
  }
  return exps;
}

std::vector<int> PcGroup::letters_of(long idx) const {
  std::vector<int> letters;
  const auto exps = exps_of(idx);
  for (size_t i = 0; i < exps.size(); ++i)
    for (long e = 0; e < exps[i]; ++e) letters.push_back(static_cast<int>(i));
  return letters;
}

int PcGroup::generator_element(int i) const {
  std::vector<long> exps(pres.num_gens(), 0);
  if (pres.relative_orders[i] > 1) exps[i] = 1;
  return static_cast<int>(index_of(exps));
}

PcGroup group_from_presentation(const PcPresentation& p) {
  const auto rules = CollectionRules::from(MonomialPcPresentation::untwisted(p));
  const int r = p.num_gens();

  long order = 1;
  for (long o : p.relative_orders) {
    order *= o;
    if (order > 1024)
      fail("InconsistentPresentation", "presentation order exceeds the supported table bound");
  }

  PcGroup pc{GroupTable::trusted(1, {0}), p, std::vector<long>(r, 1)};
  for (int i = r - 2; i >= 0; --i)
    pc.strides[i] = pc.strides[i + 1] * p.relative_orders[i + 1];

  // step tables: g * x_i for every normal form g
  std::vector<std::vector<long>> step(r, std::vector<long>(order));
  for (long g = 0; g < order; ++g) {
    auto base = pc.letters_of(g);
    for (int i = 0; i < r; ++i) {
      auto w = base;
      w.push_back(i);
      step[i][g] = pc.index_of(collect(rules, std::move(w)).exps);
    }
  }

  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (long g = 0; g < order; ++g) {
    for (long h = 0; h < order; ++h) {
      long cur = g;
      for (int i : pc.letters_of(h)) cur = step[i][cur];
      table[g][h] = static_cast<int>(cur);
    }
  }

  try {
    pc.table = GroupTable::validate(table);
  } catch (const Error& e) {
    fail("InconsistentPresentation",
         std::string("collection does not yield a group: ") + e.what());
  }
  return pc;
}

}  // namespace tga
