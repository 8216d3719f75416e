#include "npc.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <utility>

#include "engine.hpp"

struct npc_problem {
  npc::ProblemDoc doc;
  npc::EngineOptions opt;
};

namespace {

char* dup_cstring(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_message(char** slot, const std::string& msg) {
  if (slot) *slot = dup_cstring(msg);
}

npc_status status_of(const std::exception& e) {
  if (dynamic_cast<const npc::parse_error*>(&e)) return NPC_ERR_PARSE;
  if (dynamic_cast<const npc::genericity_error*>(&e))
    return NPC_ERR_GENERICITY;
  if (dynamic_cast<const npc::improper_intersection_error*>(&e))
    return NPC_ERR_IMPROPER_INTERSECTION;
  if (dynamic_cast<const npc::value_error*>(&e)) return NPC_ERR_BAD_ARGUMENT;
  return NPC_ERR_INTERNAL;
}

template <class F>
npc_status guarded(char** error_message, F&& body) {
  if (error_message) *error_message = nullptr;
  try {
    return body();
  } catch (const std::exception& e) {
    set_message(error_message, e.what());
    return status_of(e);
  } catch (...) {
    set_message(error_message, "unknown failure");
    return NPC_ERR_INTERNAL;
  }
}

uint32_t checked_prime(long long value) {
  if (value < 3 || value > 0x7fffffffll || !npc::is_prime_u32(
          static_cast<uint32_t>(value)))
    throw npc::value_error("prime must be an odd prime below 2^31, got " +
                           std::to_string(value));
  return static_cast<uint32_t>(value);
}

}  // namespace

extern "C" {

npc_status npc_problem_from_json(const char* json_text, npc_problem** out,
                                 char** error_message) {
  return guarded(error_message, [&]() -> npc_status {
    if (!json_text || !out)
      throw npc::value_error("json_text and out must be non-NULL");
    *out = nullptr;
    npc::ProblemDoc doc = npc::ProblemDoc::parse(json_text);
    *out = new npc_problem{std::move(doc), npc::EngineOptions{}};
    return NPC_OK;
  });
}

void npc_problem_free(npc_problem* problem) { delete problem; }

npc_status npc_problem_set_option(npc_problem* problem, const char* name,
                                  long long value, char** error_message) {
  return guarded(error_message, [&]() -> npc_status {
    if (!problem || !name)
      throw npc::value_error("problem and name must be non-NULL");
    std::string key = name;
    if (key == "seed") {
      problem->opt.seed = static_cast<uint64_t>(value);
    } else if (key == "prime") {
      problem->opt.prime = checked_prime(value);
    } else if (key == "retries") {
      if (value < 0 || value > 10000)
        throw npc::value_error("retries must be in [0, 10000]");
      problem->opt.retries = static_cast<int>(value);
    } else if (key == "jobs") {
      if (value < 1 || value > 1024)
        throw npc::value_error("jobs must be in [1, 1024]");
      problem->opt.jobs = static_cast<int>(value);
    } else if (key == "check_smooth") {
      if (value != 0 && value != 1)
        throw npc::value_error("check_smooth takes 0 or 1");
      problem->opt.check_smooth = value == 1;
    } else if (key == "check_proper") {
      if (value != 0 && value != 1)
        throw npc::value_error("check_proper takes 0 or 1");
      problem->opt.check_proper = value == 1;
    } else {
      throw npc::value_error("unknown option '" + key + "'");
    }
    return NPC_OK;
  });
}

npc_status npc_problem_select_divisors(npc_problem* problem,
                                       const char* names,
                                       char** error_message) {
  return guarded(error_message, [&]() -> npc_status {
    if (!problem) throw npc::value_error("problem must be non-NULL");
    problem->opt.selection.clear();
    if (!names || !*names) {
      problem->opt.has_selection = false;
      return NPC_OK;
    }
    std::string text = names;
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t comma = text.find(',', pos);
      std::string token = comma == std::string::npos
                              ? text.substr(pos)
                              : text.substr(pos, comma - pos);
      if (token.empty())
        throw npc::value_error("empty divisor name in selection '" + text +
                               "'");
      problem->opt.selection.push_back(token);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    problem->opt.has_selection = true;
    return NPC_OK;
  });
}

npc_status npc_run(npc_problem* problem, const char* command,
                   char** report_json, char** error_message) {
  return guarded(error_message, [&]() -> npc_status {
    if (!problem || !command || !report_json)
      throw npc::value_error("problem, command and report_json must be "
                             "non-NULL");
    *report_json = nullptr;
    npc::Engine engine(problem->doc, problem->opt);
    nlohmann::ordered_json report = engine.run(command);
    *report_json = dup_cstring(report.dump(2));
    return NPC_OK;
  });
}

npc_status npc_fixture_json(const char* name, long long seed,
                            long long prime, char** spec_json,
                            char** error_message) {
  return guarded(error_message, [&]() -> npc_status {
    if (!name || !spec_json)
      throw npc::value_error("name and spec_json must be non-NULL");
    *spec_json = nullptr;
    uint32_t p = checked_prime(prime);
    npc::FixtureDoc f =
        npc::make_fixture(name, static_cast<uint64_t>(seed), p);
    *spec_json =
        dup_cstring(npc::ProblemDoc::from_fixture(f).to_json().dump(2));
    return NPC_OK;
  });
}

void npc_string_free(char* s) { std::free(s); }

const char* npc_version(void) { return "0.1.0"; }

}  // extern "C"
