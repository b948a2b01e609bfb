#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "support/fixtures.hpp"
#include "tga/cli.hpp"
#include "tga/error.hpp"
#include "tga/io.hpp"

using namespace tga;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli_run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("serialization round-trips") {
  GroupTable g = fx::d4();
  CHECK(group_from_json(group_to_json(g)) == g);

  PcPresentation p;
  p.relative_orders = {4, 2};
  p.power_words = {{}, {{0, 2}}};
  p.conjugates[{1, 0}] = {{0, 3}};
  Json jp = presentation_to_json(p);
  PcPresentation p2 = presentation_from_json(jp);
  CHECK(p2.relative_orders == p.relative_orders);
  CHECK(p2.power_words == p.power_words);
  CHECK(p2.conjugates == p.conjugates);

  LambdaVerdict v = classify(fx::family3_core(1));
  Json jv = verdict_to_json(v);
  LambdaVerdict v2 = verdict_from_json(jv);
  CHECK(verdict_to_json(v2) == jv);

  Recipe r = realize(v);
  Json jr = recipe_to_json(r);
  Recipe r2 = recipe_from_json(jr);
  CHECK(recipe_to_json(r2) == jr);  // byte-stable re-serialization
  CHECK(r2.group.table == r.group.table);
  CHECK(r2.cocycle == r.cocycle);
}

TEST_CASE("monomial strings") {
  Monomial m{4, 3, {2, 0, -1}};
  CHECK(monomial_to_string(m) == "z^3*t1^2*t3^-1");
  CHECK(monomial_from_string("z^3*t1^2*t3^-1", 4, 3) == m);
  CHECK(monomial_to_string(Monomial::one(4, 3)) == "1");
  CHECK(monomial_from_string("1", 4, 3) == Monomial::one(4, 3));
  CHECK(monomial_from_string("t2", 4, 3) == Monomial::t(4, 3, 1));
  CHECK_THROWS_AS(monomial_from_string("t9", 4, 3), Error);
  CHECK_THROWS_AS(monomial_from_string("w^2", 4, 3), Error);
}

TEST_CASE("classify verb: group and presentation input, exit codes") {
  std::string group_doc = group_to_json(fx::product_of_cyclics({2, 2})).dump();
  auto res = run({"classify", "-"}, group_doc);
  CHECK(res.exit_code == 0);
  Json j = parse_json(res.out);
  CHECK(j["member"] == true);
  CHECK(j["sylows"][0]["family"] == 1);

  std::string pres_doc = R"({"orders":[3,2],"conj":{"2,1":[1,2]}})";
  auto res2 = run({"classify", "-"}, pres_doc);
  CHECK(res2.exit_code == 3);  // S3: negative verdict
  CHECK(parse_json(res2.out)["reason"] == "NotNilpotent");

  auto res3 = run({"classify", "-"}, "{not json");
  CHECK(res3.exit_code == 1);
  auto res4 = run({"classify", "-"}, R"({"order":2,"mul":[[0,1],[1,1]]})");
  CHECK(res4.exit_code == 2);  // valid JSON, invalid table
}

TEST_CASE("realize then verify pipeline") {
  std::string group_doc = group_to_json(fx::product_of_cyclics({4, 4})).dump();
  auto realized = run({"realize", "-"}, group_doc);
  REQUIRE(realized.exit_code == 0);
  auto verified = run({"verify", "-", "--samples", "50", "--seed", "7"}, realized.out);
  CHECK(verified.exit_code == 0);
  Json j = parse_json(verified.out);
  CHECK(j["cocycle_ok"] == true);
  CHECK(j["central"] == true);
  CHECK(j["sampled_collection_ok"] == true);

  auto latex = run({"realize", "--latex", "-"}, group_doc);
  CHECK(latex.exit_code == 0);
  CHECK(latex.out.find("\\langle") != std::string::npos);
  CHECK(latex.out.find("t_{1}") != std::string::npos);
}

TEST_CASE("value-group verb") {
  std::string group_doc = group_to_json(fx::product_of_cyclics({2, 2, 4, 4})).dump();
  auto realized = run({"realize", "-"}, group_doc);
  REQUIRE(realized.exit_code == 0);
  auto vg = run({"value-group", "-"}, realized.out);
  CHECK(vg.exit_code == 0);
  Json j = parse_json(vg.out);
  CHECK(j["invariants"] == Json::array({2, 2, 4, 4}));
  CHECK(j["order"] == 64);
  CHECK(j["ttr"] == "certified");

  // collision recipe: not certified, exit 3
  Recipe collision{fx::collision_presentation(),
                   group_from_presentation(fx::collision_presentation().base),
                   cocycle_from_presentation(fx::collision_presentation()).second,
                   RealizationClaims{}};
  auto bad = run({"value-group", "-"}, recipe_to_json(collision).dump());
  CHECK(bad.exit_code == 3);
  CHECK(parse_json(bad.out)["ttr"] == "not-certified");
}

TEST_CASE("regular-classes and compare verbs") {
  std::string g1 = group_to_json(fx::family3_core(1)).dump();
  auto r1 = run({"realize", "-"}, g1);
  REQUIRE(r1.exit_code == 0);
  auto reg = run({"regular-classes", "-"}, r1.out);
  CHECK(reg.exit_code == 0);
  CHECK(parse_json(reg.out)["regular_classes"] == 1);

  // compare needs two file inputs
  std::string path1 = "/tmp/tga_test_recipe1.json";
  std::string path2 = "/tmp/tga_test_recipe2.json";
  {
    std::ofstream f1(path1);
    f1 << r1.out;
    std::string g2 = group_to_json(fx::product_of_cyclics({2, 2, 2, 2})).dump();
    auto r2 = run({"realize", "-"}, g2);
    REQUIRE(r2.exit_code == 0);
    std::ofstream f2(path2);
    f2 << r2.out;
  }
  auto cmp = run({"compare", path1, path2});
  CHECK(cmp.exit_code == 0);
  Json j = parse_json(cmp.out);
  CHECK(j["verdict"] == "indistinguishable");
}

TEST_CASE("help and unknown verbs") {
  auto help = run({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("classify") != std::string::npos);
  auto bad = run({"frobnicate"});
  CHECK(bad.exit_code == 1);
}
