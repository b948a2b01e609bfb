#include "tga/cli.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "tga/io.hpp"

namespace tga {

namespace {

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path);
  if (!f) fail("ParseError", "cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, std::ostream& out, const std::string& doc) {
  if (path == "-") {
    out << doc << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) fail("ParseError", "cannot open output file '" + path + "'");
  f << doc << "\n";
}

std::string dump(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

// group documents carry "mul"; presentation documents carry "orders"
GroupTable group_from_document(const Json& j) {
  if (j.is_object() && j.contains("mul")) return group_from_json(j);
  if (j.is_object() && j.contains("orders"))
    return group_from_presentation(presentation_from_json(j)).table;
  fail("SchemaError", "expected a group ('mul') or presentation ('orders') document");
}

// agreement of the two collection strategies on random words
bool sampled_collection_ok(const Recipe& r, unsigned long seed, long samples) {
  const auto rules = CollectionRules::from(r.pres);
  const int gens = r.pres.base.num_gens();
  if (gens == 0) return true;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_gen(0, gens - 1);
  std::uniform_int_distribution<int> pick_len(0, 12);
  for (long k = 0; k < samples; ++k) {
    std::vector<int> word(static_cast<size_t>(pick_len(rng)));
    for (int& x : word) x = pick_gen(rng);
    Collected a = collect(rules, word);
    Collected b = collect_rightmost(rules, word);
    if (!(a.coeff == b.coeff) || a.exps != b.exps) return false;
  }
  return true;
}

struct Options {
  std::string verb;
  std::string input = "-";
  std::string input2;
  std::string output = "-";
  bool pretty = false;
  bool latex = false;
  int cap = 32;
  unsigned long seed = 0;
  long samples = 0;
};

int dispatch(const Options& opt, std::istream& in, std::ostream& out) {
  if (opt.verb == "classify") {
    Json j = parse_json(read_input(opt.input, in));
    LambdaVerdict v = classify(group_from_document(j));
    write_output(opt.output, out, dump(verdict_to_json(v), opt.pretty));
    return v.member ? 0 : 3;
  }
  if (opt.verb == "realize") {
    Json j = parse_json(read_input(opt.input, in));
    LambdaVerdict v;
    if (j.is_object() && j.contains("member"))
      v = verdict_from_json(j);
    else
      v = classify(group_from_document(j));
    if (!v.member) {
      write_output(opt.output, out, dump(verdict_to_json(v), opt.pretty));
      return 3;
    }
    Recipe r = realize(v);
    write_output(opt.output, out,
                 opt.latex ? recipe_to_latex(r) : dump(recipe_to_json(r), opt.pretty));
    return 0;
  }
  if (opt.verb == "verify") {
    Recipe r = recipe_from_json(parse_json(read_input(opt.input, in)));
    CocycleCheck check = verify_cocycle(r.cocycle, r.group.table);
    Json j;
    j["cocycle_ok"] = check.ok;
    j["detail"] = check.detail;
    j["central"] = check.ok ? Json(is_central(r.cocycle, r.group.table, opt.cap)) : Json(nullptr);
    bool sampled_ok = true;
    if (opt.samples > 0) {
      sampled_ok = sampled_collection_ok(r, opt.seed, opt.samples);
      j["sampled_collection_ok"] = sampled_ok;
    }
    write_output(opt.output, out, dump(j, opt.pretty));
    return check.ok && sampled_ok ? 0 : 3;
  }
  if (opt.verb == "value-group") {
    Recipe r = recipe_from_json(parse_json(read_input(opt.input, in)));
    ValueGroupResult vg = relative_value_group(r.cocycle, r.group.table);
    TtrCertificate cert = ttr_certificate(r.cocycle, r.group.table);
    write_output(opt.output, out, dump(value_group_to_json(vg, cert), opt.pretty));
    return cert.certified ? 0 : 3;
  }
  if (opt.verb == "compare") {
    Recipe a = recipe_from_json(parse_json(read_input(opt.input, in)));
    Recipe b = recipe_from_json(parse_json(read_input(opt.input2, in)));
    InvariantRecord ra = invariant_record(a), rb = invariant_record(b);
    ComparisonResult res = compare_records(ra, rb);
    write_output(opt.output, out, dump(comparison_to_json(ra, rb, res), opt.pretty));
    return 0;
  }
  if (opt.verb == "regular-classes") {
    Recipe r = recipe_from_json(parse_json(read_input(opt.input, in)));
    Json j;
    j["regular_classes"] = regular_class_count(r.cocycle, r.group.table);
    j["central"] = is_central(r.cocycle, r.group.table, opt.cap);
    write_output(opt.output, out, dump(j, opt.pretty));
    return 0;
  }
  fail("SchemaError", "unknown verb '" + opt.verb + "'");
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact classification and division-algebra realization of finite groups"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool two_inputs) {
    sub->add_option("input", opt.input, "input path ('-' for stdin)");
    if (two_inputs) sub->add_option("input2", opt.input2, "second input path")->required();
    sub->add_option("-o,--output", opt.output, "output path ('-' for stdout)");
    sub->add_flag("--json-pretty", opt.pretty, "indent JSON output");
  };
  add_common(app.add_subcommand("classify", "decide membership in the realizable family"), false);
  auto* realize_cmd = app.add_subcommand("realize", "build a division-algebra recipe");
  add_common(realize_cmd, false);
  realize_cmd->add_flag("--latex", opt.latex, "emit generator-relation notation");
  auto* verify_cmd = app.add_subcommand("verify", "check a recipe's cocycle and centrality");
  add_common(verify_cmd, false);
  verify_cmd->add_option("--cap", opt.cap, "order cap for the exact-center cross-check");
  verify_cmd->add_option("--seed", opt.seed, "seed for sampled collection checks");
  verify_cmd->add_option("--samples", opt.samples, "number of sampled random words");
  add_common(app.add_subcommand("value-group", "relative value group and TTR certificate"), false);
  add_common(app.add_subcommand("compare", "compare the invariant records of two recipes"), true);
  auto* reg_cmd = app.add_subcommand("regular-classes", "count regular conjugacy classes");
  add_common(reg_cmd, false);
  reg_cmd->add_option("--cap", opt.cap, "order cap for the exact-center cross-check");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }
  opt.verb = app.get_subcommands().front()->get_name();

  try {
    return dispatch(opt, in, out);
  } catch (const Error& e) {
    err << "error [" << e.code() << "]: " << e.what() << "\n";
    return (e.code() == "ParseError" || e.code() == "SchemaError") ? 1 : 2;
  }
}

}  // namespace tga
