#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include "engine.hpp"
#include "npc.h"

using namespace npc;
using njson = nlohmann::ordered_json;

namespace {

ProblemDoc fixture_doc(const std::string& name, uint64_t seed = 0,
                       uint32_t prime = 32003) {
  return ProblemDoc::from_fixture(make_fixture(name, seed, prime));
}

njson run_fixture(const std::string& name, const std::string& command,
                  EngineOptions opt = {}) {
  Engine engine(fixture_doc(name, 0, opt.prime), opt);
  return engine.run(command);
}

std::vector<long long> degree_sequence(const njson& products) {
  std::vector<long long> out;
  for (const auto& e : products) out.push_back(e["degree"].get<long long>());
  return out;
}

std::vector<std::string> keys_of(const njson& obj) {
  std::vector<std::string> out;
  for (const auto& item : obj.items()) out.push_back(item.key());
  return out;
}

// Wraps a C string so error paths cannot leak.
struct CStr {
  char* p = nullptr;
  ~CStr() { npc_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

}  // namespace

TEST_CASE("problem documents parse strictly") {
  ProblemDoc doc = ProblemDoc::parse(R"({
    "variables": ["x0", "x1", "x2"],
    "variety": ["x0*x2 - x1^2"],
    "divisors": {"D": ["x0"], "E": ["x1"]}
  })");
  CHECK(doc.variables == std::vector<std::string>{"x0", "x1", "x2"});
  CHECK(doc.variety == std::vector<std::string>{"x0*x2 - x1^2"});
  REQUIRE(doc.divisors.size() == 2);
  CHECK(doc.divisors[0].first == "D");
  CHECK(doc.divisors[1].first == "E");
  CHECK(doc.divisors[1].second == std::vector<std::string>{"x1"});

  // Document -> JSON -> document is the identity, byte for byte.
  std::string dumped = doc.to_json().dump(2);
  CHECK(ProblemDoc::parse(dumped).to_json().dump(2) == dumped);

  CHECK_THROWS_AS(ProblemDoc::parse("not json"), parse_error);
  CHECK_THROWS_AS(ProblemDoc::parse("[1,2]"), parse_error);
  CHECK_THROWS_AS(ProblemDoc::parse(R"({"variety": ["x0"]})"), parse_error);
  CHECK_THROWS_AS(ProblemDoc::parse(R"({"variables": []})"), parse_error);
  CHECK_THROWS_AS(ProblemDoc::parse(R"({"variables": ["x0"], "extra": 1})"),
                  parse_error);
  CHECK_THROWS_AS(
      ProblemDoc::parse(R"({"variables": ["x0"], "variety": "x0"})"),
      parse_error);
  CHECK_THROWS_AS(
      ProblemDoc::parse(R"({"variables": ["x0"], "divisors": ["x0"]})"),
      parse_error);
  CHECK_THROWS_AS(
      ProblemDoc::parse(R"({"variables": ["x0", 7], "variety": []})"),
      parse_error);
}

TEST_CASE("engine construction validates the input") {
  ProblemDoc doc;
  doc.variables = {"x0", "x1", "x2"};
  EngineOptions opt;

  doc.variety = {"x0*x2 - x1^2 +"};
  CHECK_THROWS_AS(Engine(doc, opt), parse_error);

  doc.variety = {"x0*x2 - x1"};
  CHECK_THROWS_AS(Engine(doc, opt), parse_error);  // not homogeneous

  doc.variety = {"x0*x2 - x1^2"};
  doc.divisors = {{"D", {}}};
  CHECK_THROWS_AS(Engine(doc, opt), value_error);  // no generators

  doc.divisors = {{"D", {"x0"}}};
  opt.has_selection = true;
  opt.selection = {"Z"};
  CHECK_THROWS_AS(Engine(doc, opt), value_error);  // unknown divisor

  opt.selection = {"D"};
  Engine ok(doc, opt);
  CHECK(ok.dim() == 1);

  CHECK_THROWS_AS(ok.run("frobnicate"), value_error);
}

TEST_CASE("degree reports") {
  ProblemDoc space;
  space.variables = {"x0", "x1", "x2", "x3"};
  Engine engine(space, EngineOptions{});
  njson r = engine.run("degree");
  CHECK(r["dim"] == 3);
  CHECK(r["degree"] == 1);
  CHECK(r["provenance"]["seed"] == 0);
  CHECK(r["provenance"]["prime"] == 32003);
  CHECK(keys_of(r) == std::vector<std::string>{"dim", "degree", "provenance"});

  // The empty scheme still has a degree report.
  ProblemDoc empty;
  empty.variables = {"x0", "x1", "x2"};
  empty.variety = {"x0", "x1", "x2"};
  njson re = Engine(empty, EngineOptions{}).run("degree");
  CHECK(re["dim"] == -1);
  CHECK(re["degree"] == 0);

  CHECK(run_fixture("quartic-surface", "degree")["degree"] == 4);
  CHECK(run_fixture("quartic-surface", "degree")["dim"] == 2);
  CHECK(run_fixture("veronese-projection", "degree")["degree"] == 4);
  CHECK(run_fixture("ci-threefold", "degree")["dim"] == 3);
  CHECK(run_fixture("ci-threefold", "degree")["degree"] == 4);
  CHECK(run_fixture("segre-p1p2", "degree")["degree"] == 3);
}

TEST_CASE("polar, ed and dual reports") {
  njson p = run_fixture("quartic-surface", "polar");
  CHECK(p["polar_degrees"] == njson::array({4, 8, 12}));
  CHECK(keys_of(p) ==
        std::vector<std::string>{"polar_degrees", "provenance"});

  njson e = run_fixture("quartic-surface", "ed");
  CHECK(e["ed_degree"] == 24);
  CHECK(keys_of(e) == std::vector<std::string>{"ed_degree", "provenance"});

  njson d = run_fixture("quartic-surface", "dual");
  CHECK(d["dual"]["dim"] == 3);
  CHECK(d["dual"]["degree"] == 12);
  CHECK(keys_of(d) == std::vector<std::string>{"dual", "provenance"});

  njson s = run_fixture("segre-p1p2", "dual");
  CHECK(s["dual"]["dim"] == 3);
  CHECK(s["dual"]["degree"] == 3);
  CHECK(run_fixture("segre-p1p2", "ed")["ed_degree"] == 10);

  // A linear variety has no dual data.
  ProblemDoc space;
  space.variables = {"x0", "x1", "x2", "x3"};
  CHECK_THROWS_AS(Engine(space, EngineOptions{}).run("dual"), value_error);
}

TEST_CASE("euler report on the quartic surface") {
  njson r = run_fixture("quartic-surface", "euler");

  CHECK(keys_of(r) ==
        std::vector<std::string>{"polar_degrees", "products", "chern_table",
                                 "chi", "ed_degree", "dual", "provenance"});

  CHECK(r["polar_degrees"] == njson::array({4, 8, 12}));

  REQUIRE(r["products"].size() == 7);
  CHECK(degree_sequence(r["products"]) ==
        std::vector<long long>{4, 4, 8, 6, 12, 8, 16});
  // Entry structure: the pushed-forward point class of the divisor.
  const njson& pushed = r["products"][1];
  CHECK(pushed["m"] == njson::array({0, 0}));
  REQUIRE(pushed["divisors"].size() == 1);
  CHECK(pushed["divisors"][0]["k"] == 1);
  CHECK(pushed["divisors"][0]["a"] == 1);
  CHECK(pushed["degree"] == 4);

  njson chern = njson::object();
  chern["H^2"] = 4;
  chern["c1"] = 4;
  chern["c2"] = 8;
  chern["c1^2"] = 4;
  chern["d1(D)"] = 4;
  chern["c1*d1(D)"] = 4;
  chern["d2(D)"] = 2;
  chern["c1*D"] = 4;
  chern["D^2"] = 2;
  CHECK(r["chern_table"].dump() == chern.dump());

  CHECK(r["chi"].dump() == R"({"0":"1","1":"2","2":"1"})");
  CHECK(r["ed_degree"] == 24);
  CHECK(r["dual"]["dim"] == 3);
  CHECK(r["dual"]["degree"] == 12);
  CHECK(r["provenance"]["retries_used"] == 0);

  // The products command returns exactly the same table.
  njson p = run_fixture("quartic-surface", "products");
  CHECK(keys_of(p) == std::vector<std::string>{"products", "provenance"});
  CHECK(p["products"].dump() == r["products"].dump());
}

TEST_CASE("euler report on the projected Veronese surface") {
  njson r = run_fixture("veronese-projection", "euler");

  CHECK(r["polar_degrees"] == njson::array({4, 6, 3}));
  REQUIRE(r["products"].size() == 11);
  CHECK(degree_sequence(r["products"]) ==
        std::vector<long long>{4, 4, 6, 6, 6, 6, 12, 3, 6, 9, 9});

  njson chern = njson::object();
  chern["H^2"] = 4;
  chern["c1"] = 6;
  chern["c2"] = 3;
  chern["c1^2"] = 9;
  chern["d1(D)"] = 6;
  chern["c1*d1(D)"] = 9;
  chern["d2(D)"] = 0;
  chern["d1(H)"] = 4;
  chern["c1*d1(H)"] = 6;
  chern["d2(H)"] = 2;
  chern["c1*H"] = 6;
  chern["c1*D"] = 9;
  chern["D*H"] = 6;
  chern["D^2"] = 9;
  CHECK(r["chern_table"].dump() == chern.dump());

  CHECK(r["chi"].dump() ==
        R"({"0,0":"1","0,1":"3","0,2":"2","1,0":"9/2","1,1":"6","2,0":"9/2"})");
  CHECK(r["ed_degree"] == 13);
  CHECK(r["dual"]["dim"] == 3);
  CHECK(r["dual"]["degree"] == 3);
}

TEST_CASE("euler report on the complete intersection threefold") {
  njson r = run_fixture("ci-threefold", "euler");

  CHECK(r["polar_degrees"] == njson::array({4, 8, 12, 16}));
  REQUIRE(r["products"].size() == 13);
  CHECK(degree_sequence(r["products"]) ==
        std::vector<long long>{4, 8, 8, 24, 12, 16, 16, 48, 16, 24, 48, 24,
                               32});

  njson chern = njson::object();
  chern["H^3"] = 4;
  chern["c1"] = 8;
  chern["c2"] = 12;
  chern["c1^2"] = 16;
  chern["c1*c2"] = 24;
  chern["d1(D)"] = 8;
  chern["c1*d1(D)"] = 16;
  chern["d2(D)"] = 0;
  chern["c2*d1(D)"] = 24;
  chern["c1^2*d1(D)"] = 32;
  chern["c1*d2(D)"] = 0;
  chern["d3(D)"] = 24;
  chern["c2*D"] = 24;
  chern["c1^2*D"] = 32;
  chern["c1*D^2"] = 32;
  chern["D^3"] = 32;
  CHECK(r["chern_table"].dump() == chern.dump());

  CHECK(r["chi"].dump() == R"({"0":"1","1":"14/3","2":"8","3":"16/3"})");
  CHECK(r["ed_degree"] == 40);
  CHECK(r["dual"]["dim"] == 4);
  CHECK(r["dual"]["degree"] == 16);
}

TEST_CASE("euler report on the Segre threefold") {
  njson r = run_fixture("segre-p1p2", "euler");

  CHECK(r["polar_degrees"] == njson::array({3, 4, 3, 0}));
  REQUIRE(r["products"].size() == 13);
  CHECK(degree_sequence(r["products"]) ==
        std::vector<long long>{3, 5, 4, 10, 3, 7, 5, 12, 0, 6, 14, 3, 9});

  njson chern = njson::object();
  chern["H^3"] = 3;
  chern["c1"] = 8;
  chern["c2"] = 9;
  chern["c1^2"] = 21;
  chern["c1*c2"] = 24;
  chern["d1(D)"] = 5;
  chern["c1*d1(D)"] = 13;
  chern["d2(D)"] = 5;
  chern["c2*d1(D)"] = 15;
  chern["c1^2*d1(D)"] = 33;
  chern["c1*d2(D)"] = 13;
  chern["d3(D)"] = 7;
  chern["c2*D"] = 15;
  chern["c1^2*D"] = 33;
  chern["c1*D^2"] = 20;
  chern["D^3"] = 12;
  CHECK(r["chern_table"].dump() == chern.dump());

  CHECK(r["chi"].dump() == R"({"0":"1","1":"4","2":"5","3":"2"})");
  CHECK(r["ed_degree"] == 10);
  CHECK(r["dual"]["dim"] == 3);
  CHECK(r["dual"]["degree"] == 3);
}

TEST_CASE("euler characteristic of projective space itself") {
  ProblemDoc space;
  space.variables = {"x0", "x1", "x2", "x3"};
  njson r = Engine(space, EngineOptions{}).run("euler");
  CHECK(r["chi"].dump() == R"({"":"1"})");
  CHECK(r["polar_degrees"] == njson::array({1, 0, 0, 0}));
  // Linear: no dual entry in the report.
  CHECK_FALSE(r.contains("dual"));
  CHECK(r["ed_degree"] == 1);
}

TEST_CASE("reports are deterministic and schedule independent") {
  njson base = run_fixture("quartic-surface", "euler");

  CHECK(run_fixture("quartic-surface", "euler").dump(2) == base.dump(2));

  EngineOptions par;
  par.jobs = 4;
  CHECK(run_fixture("quartic-surface", "euler", par).dump(2) ==
        base.dump(2));

  // Another seed draws different random forms, measures the same classes.
  EngineOptions other;
  other.seed = 1;
  njson alt = run_fixture("quartic-surface", "euler", other);
  CHECK(alt["provenance"]["seed"] == 1);
  alt.erase("provenance");
  njson trimmed = base;
  trimmed.erase("provenance");
  CHECK(alt.dump(2) == trimmed.dump(2));

  // Another ground field, same intersection numbers.
  EngineOptions prime;
  prime.prime = 31991;
  njson modp = run_fixture("quartic-surface", "euler", prime);
  modp.erase("provenance");
  CHECK(modp.dump(2) == trimmed.dump(2));
}

TEST_CASE("divisor selection restricts and reorders") {
  EngineOptions h_only;
  h_only.has_selection = true;
  h_only.selection = {"H"};
  njson r = run_fixture("veronese-projection", "euler", h_only);
  CHECK(r["chi"].dump() == R"({"0":"1","1":"3","2":"2"})");
  CHECK(r["products"].size() == 7);

  EngineOptions swapped;
  swapped.has_selection = true;
  swapped.selection = {"H", "D"};
  njson rs = run_fixture("veronese-projection", "euler", swapped);
  CHECK(rs["chi"].dump() ==
        R"({"0,0":"1","0,1":"9/2","0,2":"9/2","1,0":"3","1,1":"6","2,0":"2"})");
}

TEST_CASE("preflight checks gate the commands") {
  // Points: polar classes are undefined.
  ProblemDoc points;
  points.variables = {"x0", "x1", "x2"};
  points.variety = {"x0^2 - x1*x2", "x1^2 - x0*x2"};
  CHECK_THROWS_AS(Engine(points, EngineOptions{}).run("polar"), value_error);
  CHECK(Engine(points, EngineOptions{}).run("degree")["dim"] == 0);

  // Empty scheme.
  ProblemDoc empty;
  empty.variables = {"x0", "x1"};
  empty.variety = {"x0", "x1"};
  CHECK_THROWS_AS(Engine(empty, EngineOptions{}).run("euler"), value_error);

  // Improper intersection: the same hyperplane section listed twice.
  ProblemDoc dup = fixture_doc("quartic-surface");
  dup.divisors = {{"A", {"x0"}}, {"B", {"x0"}}};
  CHECK_THROWS_AS(Engine(dup, EngineOptions{}).run("euler"),
                  improper_intersection_error);
  // Each one alone is a perfectly good divisor.
  EngineOptions pick;
  pick.has_selection = true;
  pick.selection = {"A"};
  njson r = Engine(dup, pick).run("degree");
  CHECK(r["degree"] == 4);

  // Smoothness check rejects a singular variety when asked.
  ProblemDoc cusp;
  cusp.variables = {"x0", "x1", "x2"};
  cusp.variety = {"x1^2*x2 - x0^3"};
  EngineOptions strict;
  strict.check_smooth = true;
  CHECK_THROWS_AS(Engine(cusp, strict).run("polar"), value_error);
  // The quartic surface passes the same gate.
  EngineOptions strict2;
  strict2.check_smooth = true;
  CHECK(run_fixture("quartic-surface", "polar", strict2)["polar_degrees"] ==
        njson::array({4, 8, 12}));
}

TEST_CASE("c api lifecycle") {
  CHECK(std::string(npc_version()) == "0.1.0");
  npc_string_free(nullptr);
  npc_problem_free(nullptr);

  CStr spec, err;
  REQUIRE(npc_fixture_json("quartic-surface", 0, 32003, &spec.p, &err.p) ==
          NPC_OK);
  REQUIRE(spec.p != nullptr);
  CHECK(spec.str() ==
        fixture_doc("quartic-surface").to_json().dump(2));

  npc_problem* prob = nullptr;
  REQUIRE(npc_problem_from_json(spec.p, &prob, &err.p) == NPC_OK);
  REQUIRE(prob != nullptr);

  CHECK(npc_problem_set_option(prob, "seed", 0, &err.p) == NPC_OK);
  CHECK(npc_problem_set_option(prob, "jobs", 2, &err.p) == NPC_OK);
  CHECK(npc_problem_set_option(prob, "retries", 3, &err.p) == NPC_OK);
  CHECK(npc_problem_select_divisors(prob, "D", &err.p) == NPC_OK);

  CStr degree_json;
  REQUIRE(npc_run(prob, "degree", &degree_json.p, &err.p) == NPC_OK);
  njson dr = njson::parse(degree_json.str());
  CHECK(dr["dim"] == 2);
  CHECK(dr["degree"] == 4);

  CStr euler_json;
  REQUIRE(npc_run(prob, "euler", &euler_json.p, &err.p) == NPC_OK);
  njson er = njson::parse(euler_json.str());
  CHECK(er["chi"].dump() == R"({"0":"1","1":"2","2":"1"})");
  CHECK(er["dual"]["degree"] == 12);

  // Selecting nothing returns to all declared divisors.
  CHECK(npc_problem_select_divisors(prob, nullptr, &err.p) == NPC_OK);
  CHECK(npc_problem_select_divisors(prob, "", &err.p) == NPC_OK);

  npc_problem_free(prob);
}

TEST_CASE("c api error mapping") {
  CStr err;
  npc_problem* prob = nullptr;

  CHECK(npc_problem_from_json("{ not json", &prob, &err.p) == NPC_ERR_PARSE);
  CHECK(prob == nullptr);
  CHECK(err.str().find("invalid JSON") != std::string::npos);

  CStr err2;
  CHECK(npc_problem_from_json(nullptr, &prob, &err2.p) ==
        NPC_ERR_BAD_ARGUMENT);

  CStr err3, out3;
  CHECK(npc_fixture_json("no-such-example", 0, 32003, &out3.p, &err3.p) ==
        NPC_ERR_BAD_ARGUMENT);
  CHECK(out3.p == nullptr);
  CHECK(!err3.str().empty());

  CStr err4, out4;
  CHECK(npc_fixture_json("quartic-surface", 0, 32004, &out4.p, &err4.p) ==
        NPC_ERR_BAD_ARGUMENT);  // not a prime

  // Build a real problem, then drive it into each failure class.
  CStr spec;
  REQUIRE(npc_fixture_json("quartic-surface", 0, 32003, &spec.p, nullptr) ==
          NPC_OK);
  REQUIRE(npc_problem_from_json(spec.p, &prob, nullptr) == NPC_OK);

  CStr err5;
  CHECK(npc_problem_set_option(prob, "prime", 9, &err5.p) ==
        NPC_ERR_BAD_ARGUMENT);
  CHECK(npc_problem_set_option(prob, "prime", -7, &err5.p) ==
        NPC_ERR_BAD_ARGUMENT);
  CHECK(npc_problem_set_option(prob, "jobs", 0, &err5.p) ==
        NPC_ERR_BAD_ARGUMENT);
  CHECK(npc_problem_set_option(prob, "retries", -1, &err5.p) ==
        NPC_ERR_BAD_ARGUMENT);
  CHECK(npc_problem_set_option(prob, "warp", 1, &err5.p) ==
        NPC_ERR_BAD_ARGUMENT);
  CHECK(npc_problem_set_option(prob, "check_smooth", 2, &err5.p) ==
        NPC_ERR_BAD_ARGUMENT);

  CStr err6;
  CHECK(npc_problem_select_divisors(prob, "D,,E", &err6.p) ==
        NPC_ERR_BAD_ARGUMENT);

  CStr err7, out7;
  CHECK(npc_run(prob, "frobnicate", &out7.p, &err7.p) ==
        NPC_ERR_BAD_ARGUMENT);
  CHECK(err7.str().find("unknown command") != std::string::npos);

  CStr err8, out8;
  CHECK(npc_problem_select_divisors(prob, "Z", nullptr) == NPC_OK);
  CHECK(npc_run(prob, "degree", &out8.p, &err8.p) == NPC_ERR_BAD_ARGUMENT);
  CHECK(err8.str().find("unknown divisor") != std::string::npos);
  npc_problem_free(prob);

  // Parse and improper intersection failures map to their own codes.
  CStr err9;
  npc_problem* bad = nullptr;
  std::string nonhom = R"({"variables": ["x0","x1"], "variety": ["x0 - 1"]})";
  REQUIRE(npc_problem_from_json(nonhom.c_str(), &bad, nullptr) == NPC_OK);
  CStr out9;
  CHECK(npc_run(bad, "degree", &out9.p, &err9.p) == NPC_ERR_PARSE);
  npc_problem_free(bad);

  ProblemDoc dup = fixture_doc("quartic-surface");
  dup.divisors = {{"A", {"x0"}}, {"B", {"x0"}}};
  npc_problem* improper = nullptr;
  std::string text = dup.to_json().dump();
  REQUIRE(npc_problem_from_json(text.c_str(), &improper, nullptr) == NPC_OK);
  CStr err10, out10;
  CHECK(npc_run(improper, "euler", &out10.p, &err10.p) ==
        NPC_ERR_IMPROPER_INTERSECTION);
  npc_problem_free(improper);
}
