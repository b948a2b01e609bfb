#include "tga/io.hpp"

#include <charconv>

namespace tga {

namespace {

[[noreturn]] void schema_error(const std::string& what) { fail("SchemaError", what); }

long get_long(const Json& j, const char* what) {
  if (!j.is_number_integer()) schema_error(std::string(what) + " must be an integer");
  return j.get<long>();
}

long parse_long(std::string_view s, const char* what) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    schema_error(std::string(what) + ": bad integer '" + std::string(s) + "'");
  return v;
}

Word word_from_json(const Json& j) {
  if (!j.is_array() || j.size() % 2 != 0) schema_error("word must be a flat [gen,exp,...] array");
  Word w;
  for (size_t k = 0; k < j.size(); k += 2) {
    long gen = get_long(j[k], "word generator");
    long exp = get_long(j[k + 1], "word exponent");
    if (gen < 1) schema_error("word generator indices are 1-based");
    w.push_back({static_cast<int>(gen - 1), exp});
  }
  return w;
}

Json word_to_json(const Word& w) {
  Json j = Json::array();
  for (const auto& [gen, exp] : w) {
    j.push_back(gen + 1);
    j.push_back(exp);
  }
  return j;
}

std::pair<int, int> pair_key_from_string(const std::string& key) {
  auto comma = key.find(',');
  if (comma == std::string::npos) schema_error("relation key must be 'j,i'");
  long j = parse_long(std::string_view(key).substr(0, comma), "relation key");
  long i = parse_long(std::string_view(key).substr(comma + 1), "relation key");
  if (j < 1 || i < 1) schema_error("relation key indices are 1-based");
  return {static_cast<int>(j - 1), static_cast<int>(i - 1)};
}

std::string pair_key_to_string(const std::pair<int, int>& key) {
  return std::to_string(key.first + 1) + "," + std::to_string(key.second + 1);
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail("ParseError", "JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

GroupTable group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("mul"))
    schema_error("group document needs 'order' and 'mul'");
  const long n = get_long(j["order"], "order");
  const Json& mul = j["mul"];
  if (!mul.is_array() || static_cast<long>(mul.size()) != n)
    schema_error("'mul' must be an order x order array");
  std::vector<std::vector<int>> rows;
  for (const Json& row : mul) {
    if (!row.is_array() || static_cast<long>(row.size()) != n)
      schema_error("'mul' must be an order x order array");
    std::vector<int> r;
    for (const Json& x : row) {
      long v = get_long(x, "table entry");
      if (v < 0 || v >= n) schema_error("table entry out of range");
      r.push_back(static_cast<int>(v));
    }
    rows.push_back(std::move(r));
  }
  return GroupTable::validate(rows);
}

Json group_to_json(const GroupTable& g) {
  Json j;
  j["order"] = g.order();
  Json mul = Json::array();
  for (int a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    mul.push_back(std::move(row));
  }
  j["mul"] = std::move(mul);
  return j;
}

PcPresentation presentation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("orders")) schema_error("presentation needs 'orders'");
  PcPresentation p;
  for (const Json& o : j["orders"]) p.relative_orders.push_back(get_long(o, "relative order"));
  p.power_words.assign(p.relative_orders.size(), Word{});
  if (j.contains("power")) {
    for (const auto& [key, val] : j["power"].items()) {
      long i = parse_long(key, "power key");
      if (i < 1 || i > static_cast<long>(p.power_words.size()))
        schema_error("power key out of range");
      p.power_words[static_cast<size_t>(i - 1)] = word_from_json(val);
    }
  }
  if (j.contains("conj")) {
    for (const auto& [key, val] : j["conj"].items())
      p.conjugates[pair_key_from_string(key)] = word_from_json(val);
  }
  return p;
}

Json presentation_to_json(const PcPresentation& p) {
  Json j;
  j["orders"] = p.relative_orders;
  Json power = Json::object();
  for (size_t i = 0; i < p.power_words.size(); ++i)
    if (!p.power_words[i].empty()) power[std::to_string(i + 1)] = word_to_json(p.power_words[i]);
  j["power"] = std::move(power);
  Json conj = Json::object();
  for (const auto& [key, w] : p.conjugates) conj[pair_key_to_string(key)] = word_to_json(w);
  j["conj"] = std::move(conj);
  return j;
}

std::string monomial_to_string(const Monomial& m) {
  std::string s;
  auto append = [&s](const std::string& part) {
    if (!s.empty()) s += "*";
    s += part;
  };
  if (m.root != 0) append("z^" + std::to_string(m.root));
  for (size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    std::string part = "t" + std::to_string(i + 1);
    if (m.exps[i] != 1) part += "^" + std::to_string(m.exps[i]);
    append(part);
  }
  return s.empty() ? "1" : s;
}

Monomial monomial_from_string(const std::string& s, long m, size_t n) {
  Monomial mono = Monomial::one(m, n);
  if (s == "1") return mono;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t star = s.find('*', pos);
    if (star == std::string::npos) star = s.size();
    std::string_view part(s.data() + pos, star - pos);
    if (part.empty()) schema_error("empty monomial factor in '" + s + "'");
    long exp = 1;
    if (auto caret = part.find('^'); caret != std::string_view::npos) {
      exp = parse_long(part.substr(caret + 1), "monomial exponent");
      part = part.substr(0, caret);
    }
    if (part == "z") {
      mono.root = mod_long(mono.root + exp, m);
    } else if (part.size() > 1 && part[0] == 't') {
      long i = parse_long(part.substr(1), "indeterminate index");
      if (i < 1 || i > static_cast<long>(n)) schema_error("indeterminate index out of range");
      mono.exps[static_cast<size_t>(i - 1)] += exp;
    } else {
      schema_error("bad monomial factor '" + std::string(part) + "'");
    }
    pos = star + 1;
  }
  return mono;
}

namespace {

Json params_to_json(const SylowVerdict& v) {
  Json p;
  if (v.family == 1) {
    p["half"] = std::get<Family1Params>(v.params).half.primary;
  } else if (v.family == 2) {
    const auto& fp = std::get<Family2Params>(v.params);
    p["p"] = fp.p;
    p["n"] = fp.n;
    p["s"] = fp.s;
    p["tail"] = fp.tail.primary;
  } else {
    const auto& fp = std::get<Family3Params>(v.params);
    p["n"] = fp.n;
    p["tail_pairs"] = fp.tail_pairs;
  }
  return p;
}

std::vector<long> long_list(const Json& j, const char* what) {
  std::vector<long> v;
  if (!j.is_array()) schema_error(std::string(what) + " must be an array");
  for (const Json& x : j) v.push_back(get_long(x, what));
  return v;
}

}  // namespace

Json verdict_to_json(const LambdaVerdict& v) {
  Json j;
  j["member"] = v.member;
  Json sylows = Json::array();
  for (const auto& s : v.sylows) {
    Json js;
    js["p"] = s.prime;
    js["family"] = s.family;
    js["params"] = params_to_json(s);
    js["witness"] = s.witness;
    js["witness_unique"] = s.witness_unique;
    sylows.push_back(std::move(js));
  }
  j["sylows"] = std::move(sylows);
  j["reason"] = v.reason;
  return j;
}

LambdaVerdict verdict_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("member")) schema_error("verdict document needs 'member'");
  LambdaVerdict v;
  v.member = j["member"].get<bool>();
  if (j.contains("reason")) v.reason = j["reason"].get<std::string>();
  for (const Json& js : j.value("sylows", Json::array())) {
    SylowVerdict s;
    s.prime = get_long(js.at("p"), "p");
    s.family = static_cast<int>(get_long(js.at("family"), "family"));
    const Json& p = js.at("params");
    if (s.family == 1) {
      s.params = Family1Params{AbelianInvariants{long_list(p.at("half"), "half")}};
    } else if (s.family == 2) {
      s.params = Family2Params{get_long(p.at("p"), "p"), get_long(p.at("n"), "n"),
                               get_long(p.at("s"), "s"),
                               AbelianInvariants{long_list(p.at("tail"), "tail")}};
    } else if (s.family == 3) {
      s.params = Family3Params{get_long(p.at("n"), "n"), get_long(p.at("tail_pairs"), "tail_pairs")};
    } else {
      schema_error("family must be 1, 2 or 3");
    }
    if (js.contains("witness"))
      for (const auto& [name, el] : js["witness"].items())
        s.witness[name] = static_cast<int>(get_long(el, "witness element"));
    if (js.contains("witness_unique")) s.witness_unique = js["witness_unique"].get<std::string>();
    v.sylows.push_back(std::move(s));
  }
  return v;
}

Json recipe_to_json(const Recipe& r) {
  Json j;
  j["field"] = {{"m", r.pres.conductor}, {"N", r.pres.num_indets}};
  Json base = presentation_to_json(r.pres.base);
  j["orders"] = base["orders"];
  j["power"] = base["power"];
  j["conj"] = base["conj"];
  Json pv = Json::object();
  for (size_t i = 0; i < r.pres.power_values.size(); ++i)
    pv[std::to_string(i + 1)] = monomial_to_string(r.pres.power_values[i]);
  j["power_values"] = std::move(pv);
  Json cv = Json::object();
  for (const auto& [key, mono] : r.pres.conj_values)
    cv[pair_key_to_string(key)] = monomial_to_string(mono);
  j["conj_values"] = std::move(cv);
  Json claims = Json::array();
  claims.push_back(Json{{"kind", "construction_case"}, {"value", r.claims.construction_case}});
  claims.push_back(Json{{"kind", "exponent_claim"},
                        {"value", r.claims.exponent_claim ? Json(*r.claims.exponent_claim)
                                                          : Json(nullptr)}});
  for (const auto& b : r.claims.blocks) claims.push_back(Json{{"kind", "block"}, {"value", b}});
  j["claims"] = std::move(claims);
  return j;
}

Recipe recipe_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("field")) schema_error("recipe document needs 'field'");
  MonomialPcPresentation pres;
  pres.conductor = get_long(j["field"].at("m"), "m");
  pres.num_indets = static_cast<size_t>(get_long(j["field"].at("N"), "N"));
  pres.base = presentation_from_json(j);
  pres.power_values.assign(pres.base.num_gens(),
                           Monomial::one(pres.conductor, pres.num_indets));
  if (j.contains("power_values")) {
    for (const auto& [key, val] : j["power_values"].items()) {
      long i = parse_long(key, "power_values key");
      if (i < 1 || i > pres.base.num_gens()) schema_error("power_values key out of range");
      pres.power_values[static_cast<size_t>(i - 1)] =
          monomial_from_string(val.get<std::string>(), pres.conductor, pres.num_indets);
    }
  }
  if (j.contains("conj_values")) {
    for (const auto& [key, val] : j["conj_values"].items())
      pres.conj_values[pair_key_from_string(key)] =
          monomial_from_string(val.get<std::string>(), pres.conductor, pres.num_indets);
  }
  RealizationClaims claims;
  for (const Json& c : j.value("claims", Json::array())) {
    const std::string kind = c.at("kind").get<std::string>();
    if (kind == "construction_case")
      claims.construction_case = c.at("value").get<std::string>();
    else if (kind == "exponent_claim" && !c.at("value").is_null())
      claims.exponent_claim = get_long(c.at("value"), "exponent_claim");
    else if (kind == "block")
      claims.blocks.push_back(c.at("value").get<std::string>());
  }
  auto [group, cocycle] = cocycle_from_presentation(pres);
  return Recipe{std::move(pres), std::move(group), std::move(cocycle), std::move(claims)};
}

Json value_group_to_json(const ValueGroupResult& vg, const TtrCertificate& cert) {
  Json j;
  j["invariants"] = vg.invariant_factors;
  j["order"] = vg.order;
  j["ttr"] = cert.certified ? "certified" : "not-certified";
  j["reason"] = cert.detail;
  return j;
}

Json record_to_json(const InvariantRecord& rec) {
  Json j;
  j["dimension"] = rec.dimension;
  j["central"] = rec.central;
  j["regular_classes"] = rec.regular_classes;
  j["value_group_factors"] =
      rec.value_group_factors ? Json(*rec.value_group_factors) : Json(nullptr);
  j["abelian_exponent"] = rec.abelian_exponent ? Json(*rec.abelian_exponent) : Json(nullptr);
  j["exponent_claim"] = rec.exponent_claim ? Json(*rec.exponent_claim) : Json(nullptr);
  j["family_summary"] = rec.family_summary;
  j["rigidity_predicted"] = rec.rigidity_predicted ? Json(*rec.rigidity_predicted) : Json(nullptr);
  return j;
}

Json comparison_to_json(const InvariantRecord& a, const InvariantRecord& b,
                        const ComparisonResult& r) {
  Json j;
  j["verdict"] = r.distinguished ? "distinguished" : "indistinguishable";
  j["by"] = r.by;
  j["left"] = record_to_json(a);
  j["right"] = record_to_json(b);
  return j;
}

namespace {

std::string monomial_to_latex(const Monomial& m, long conductor) {
  if (m.is_identity()) return "1";
  std::string s;
  if (m.root != 0) {
    if (2 * m.root == conductor * 1L) {
      s += "-";  // zeta^{m/2} = -1
    } else {
      s += "\\zeta_{" + std::to_string(conductor) + "}^{" + std::to_string(m.root) + "} ";
    }
  }
  bool all_zero = true;
  for (size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    all_zero = false;
    s += "t_{" + std::to_string(i + 1) + "}";
    if (m.exps[i] != 1) s += "^{" + std::to_string(m.exps[i]) + "}";
  }
  if (all_zero && s == "-") s += "1";
  return s;
}

std::string word_to_latex(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& [gen, exp] : w) {
    s += "u_{" + std::to_string(gen + 1) + "}";
    if (exp != 1) s += "^{" + std::to_string(exp) + "}";
  }
  return s;
}

}  // namespace

std::string recipe_to_latex(const Recipe& r) {
  const auto& p = r.pres;
  std::string s = "\\langle u_1, \\ldots, u_" + std::to_string(p.base.num_gens()) + " \\mid ";
  std::vector<std::string> rels;
  for (int i = 0; i < p.base.num_gens(); ++i) {
    std::string rel = "u_{" + std::to_string(i + 1) + "}^{" +
                      std::to_string(p.base.relative_orders[i]) + "} = " +
                      monomial_to_latex(p.power_values[i], p.conductor);
    if (!p.base.power_words[i].empty()) rel += " " + word_to_latex(p.base.power_words[i]);
    rels.push_back(std::move(rel));
  }
  for (const auto& [key, w] : p.base.conjugates) {
    std::string value = "1";
    if (auto it = p.conj_values.find(key); it != p.conj_values.end())
      value = monomial_to_latex(it->second, p.conductor);
    std::string rel = "u_{" + std::to_string(key.first + 1) + "} u_{" +
                      std::to_string(key.second + 1) + "} u_{" + std::to_string(key.first + 1) +
                      "}^{-1} = " + (value == "1" ? "" : value + " ") + word_to_latex(w);
    rels.push_back(std::move(rel));
  }
  for (size_t i = 0; i < rels.size(); ++i) s += (i ? ",\\; " : "") + rels[i];
  s += " \\rangle \\subset Q(\\zeta_{" + std::to_string(p.conductor) + "})(t_1, \\ldots, t_{" +
       std::to_string(p.num_indets) + "})";
  return s;
}

}  // namespace tga
