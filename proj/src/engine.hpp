#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fixtures.hpp"
#include "hrr.hpp"

namespace npc {

struct EngineOptions {
  uint64_t seed = 0;
  uint32_t prime = 32003;
  int retries = 3;
  int jobs = 1;
  bool check_smooth = false;
  bool check_proper = true;
  // When has_selection is false every declared divisor participates, in
  // declaration order; otherwise exactly the named ones, in this order.
  bool has_selection = false;
  std::vector<std::string> selection;
};

// The input document: variables, variety generators, named divisor
// generator lists, all polynomials as text.
struct ProblemDoc {
  std::vector<std::string> variables;
  std::vector<std::string> variety;
  std::vector<std::pair<std::string, std::vector<std::string>>> divisors;

  static ProblemDoc parse(const std::string& json_text);
  static ProblemDoc from_fixture(const FixtureDoc& f);
  nlohmann::ordered_json to_json() const;
};

// A prepared computation: generators parsed and reduced mod p, divisor
// ideals with the variety generators adjoined.  One Engine serves any
// number of run() calls; every random draw derives from (seed, purpose),
// so reports are reproducible.
class Engine {
 public:
  Engine(const ProblemDoc& doc, const EngineOptions& opt);

  // command: degree | polar | products | euler | ed | dual.
  nlohmann::ordered_json run(const std::string& command);

  int dim() const { return stats_.dim; }

 private:
  nlohmann::ordered_json provenance(long long retries_used) const;
  DegreeTable measure(const std::set<PolarDescriptor>& wanted) const;
  std::vector<long long> singles_from(const DegreeTable& table) const;
  nlohmann::ordered_json products_json(const DegreeTable& table) const;
  nlohmann::ordered_json chern_table_json(const DegreeTable& table) const;
  nlohmann::ordered_json chi_json(const ChiPolynomial& chi) const;
  void require_positive_dim() const;
  void run_preflight_checks(const std::string& command) const;

  EngineOptions opt_;
  IdealP variety_;
  std::vector<std::string> divisor_names_;
  std::vector<IdealP> divisor_ideals_;
  SchemeStats stats_;
};

}  // namespace npc
