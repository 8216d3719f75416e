// npc command line tool: degrees, polar class tables and Euler
// characteristics of smooth projective varieties presented by ideals.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "npc.h"

namespace {

using json = nlohmann::ordered_json;

struct ComputeOpts {
  std::string spec_path;
  std::string divisors;
  long long seed = 0;
  long long prime = 32003;
  long long retries = 3;
  long long jobs = 1;
  bool check_smooth = false;
  bool no_check_proper = false;
  bool as_json = false;
};

int fail(npc_status status, char* message) {
  std::cerr << "npc: error: " << (message ? message : "unknown failure")
            << "\n";
  npc_string_free(message);
  return static_cast<int>(status);
}

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    out = ss.str();
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    out.push_back(comma == std::string::npos ? text.substr(pos)
                                             : text.substr(pos, comma - pos));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// Divisor names in the order the engine uses them: the --divisors list,
// or every declared divisor in declaration order.
std::vector<std::string> divisor_names(const ComputeOpts& opts,
                                       const std::string& spec_text) {
  if (!opts.divisors.empty()) return split_csv(opts.divisors);
  std::vector<std::string> names;
  json doc = json::parse(spec_text, nullptr, false);
  if (doc.is_object() && doc.contains("divisors") &&
      doc["divisors"].is_object())
    for (const auto& item : doc["divisors"].items())
      names.push_back(item.key());
  return names;
}

std::string product_label(const json& entry,
                          const std::vector<std::string>& names) {
  std::string label;
  auto append = [&label](const std::string& part) {
    if (!label.empty()) label += "*";
    label += part;
  };
  const json& m = entry["m"];
  for (size_t j = 0; j < m.size(); ++j) {
    int mj = m[j].get<int>();
    if (mj == 0) continue;
    std::string part = "[P" + std::to_string(j + 1) + "(X)]";
    if (mj > 1) part += "^" + std::to_string(mj);
    append(part);
  }
  const json& divs = entry["divisors"];
  for (size_t i = 0; i < divs.size(); ++i) {
    if (divs[i]["a"].get<int>() == 0) continue;
    std::string name =
        i < names.size() ? names[i] : "D" + std::to_string(i + 1);
    append("f*[P" + std::to_string(divs[i]["k"].get<int>() - 1) + "(" + name +
           ")]");
  }
  if (label.empty()) label = "[P0(X)]";
  return label;
}

std::string int_list(const json& arr) {
  std::string s = "[";
  for (size_t i = 0; i < arr.size(); ++i) {
    if (i) s += ", ";
    s += arr[i].dump();
  }
  return s + "]";
}

void print_aligned(const std::vector<std::pair<std::string, std::string>>&
                       rows) {
  size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows)
    std::cout << "  " << k << std::string(width - k.size() + 2, ' ') << v
              << "\n";
}

// Multiplier letters match the engine: a, b, c, ... by divisor position.
std::string multiplier_name(size_t i) {
  return std::string(1, static_cast<char>('a' + i));
}

std::string chi_term(const std::string& coeff,
                     const std::vector<int>& exps) {
  std::string mono;
  for (size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!mono.empty()) mono += "*";
    mono += multiplier_name(i);
    if (exps[i] > 1) mono += "^" + std::to_string(exps[i]);
  }
  if (mono.empty()) return coeff;
  if (coeff == "1") return mono;
  if (coeff == "-1") return "-" + mono;
  return coeff + "*" + mono;
}

std::string chi_pretty(const json& chi) {
  std::string out;
  for (const auto& item : chi.items()) {
    std::vector<int> exps;
    for (const std::string& piece : split_csv(item.key()))
      if (!piece.empty()) exps.push_back(std::stoi(piece));
    std::string term = chi_term(item.value().get<std::string>(), exps);
    if (out.empty()) {
      out = term;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

std::string chi_argument(const std::vector<std::string>& names) {
  if (names.empty()) return "O_X";
  std::string s;
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) s += " + ";
    s += multiplier_name(i) + "*" + names[i];
  }
  return s;
}

void render(const std::string& command, const json& report,
            const std::vector<std::string>& names) {
  if (report.contains("dim") && command == "degree") {
    std::cout << "dim " << report["dim"].dump() << "\n";
    std::cout << "degree " << report["degree"].dump() << "\n";
  }
  if (report.contains("polar_degrees"))
    std::cout << "polar degrees " << int_list(report["polar_degrees"])
              << "\n";
  if (report.contains("products")) {
    std::cout << "products:\n";
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& entry : report["products"])
      rows.emplace_back(product_label(entry, names),
                        entry["degree"].dump());
    print_aligned(rows);
  }
  if (report.contains("chern_table")) {
    std::cout << "chern table:\n";
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& item : report["chern_table"].items())
      rows.emplace_back(item.key(), item.value().dump());
    print_aligned(rows);
  }
  if (report.contains("chi"))
    std::cout << "chi(" << chi_argument(names)
              << ") = " << chi_pretty(report["chi"]) << "\n";
  if (report.contains("ed_degree"))
    std::cout << "ED degree " << report["ed_degree"].dump() << "\n";
  if (report.contains("dual"))
    std::cout << "dual variety: dim " << report["dual"]["dim"].dump()
              << ", degree " << report["dual"]["degree"].dump() << "\n";
  if (report.contains("provenance")) {
    const json& p = report["provenance"];
    std::cout << "(seed " << p["seed"].dump() << ", prime "
              << p["prime"].dump() << ", retries used "
              << p["retries_used"].dump() << ")\n";
  }
}

int run_compute(const std::string& command, const ComputeOpts& opts) {
  std::string text;
  if (!read_input(opts.spec_path, text)) {
    std::cerr << "npc: error: cannot read '" << opts.spec_path << "'\n";
    return static_cast<int>(NPC_ERR_PARSE);
  }
  npc_problem* problem = nullptr;
  char* err = nullptr;
  npc_status st = npc_problem_from_json(text.c_str(), &problem, &err);
  if (st != NPC_OK) return fail(st, err);
  std::unique_ptr<npc_problem, decltype(&npc_problem_free)> guard(
      problem, &npc_problem_free);

  const std::pair<const char*, long long> options[] = {
      {"seed", opts.seed},
      {"prime", opts.prime},
      {"retries", opts.retries},
      {"jobs", opts.jobs},
      {"check_smooth", opts.check_smooth ? 1 : 0},
      {"check_proper", opts.no_check_proper ? 0 : 1},
  };
  for (const auto& [name, value] : options) {
    st = npc_problem_set_option(problem, name, value, &err);
    if (st != NPC_OK) return fail(st, err);
  }
  if (!opts.divisors.empty()) {
    st = npc_problem_select_divisors(problem, opts.divisors.c_str(), &err);
    if (st != NPC_OK) return fail(st, err);
  }

  char* report_text = nullptr;
  st = npc_run(problem, command.c_str(), &report_text, &err);
  if (st != NPC_OK) return fail(st, err);

  if (opts.as_json) {
    std::cout << report_text << "\n";
  } else {
    render(command, json::parse(report_text), divisor_names(opts, text));
  }
  npc_string_free(report_text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polar classes, intersection tables and Euler "
               "characteristics of smooth projective varieties"};
  app.set_version_flag("--version", std::string("npc ") + npc_version());
  app.require_subcommand(1);

  int exit_code = 0;

  const std::pair<const char*, const char*> commands[] = {
      {"degree", "dimension and degree of the variety"},
      {"polar", "degrees of the polar classes [P_0(X)] .. [P_n(X)]"},
      {"products", "degrees of all needed polar class products"},
      {"euler", "Euler characteristic of a divisor combination, with the "
                "full degree table"},
      {"ed", "Euclidean distance degree"},
      {"dual", "dimension and degree of the projective dual"},
  };
  for (const auto& [name, description] : commands) {
    auto opts = std::make_shared<ComputeOpts>();
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("spec", opts->spec_path,
                    "problem JSON file, or - for stdin")
        ->required();
    sub->add_option("--divisors", opts->divisors,
                    "comma separated divisor names to use, in order");
    sub->add_option("--seed", opts->seed, "random seed (default 0)");
    sub->add_option("--prime", opts->prime,
                    "coefficient field modulus (default 32003)");
    sub->add_option("--retries", opts->retries,
                    "extra attempts per degenerate random draw (default 3)");
    sub->add_option("--jobs", opts->jobs,
                    "concurrent descriptor measurements (default 1)");
    sub->add_flag("--check-smooth", opts->check_smooth,
                  "verify smoothness of the variety and divisors first");
    sub->add_flag("--no-check-proper", opts->no_check_proper,
                  "skip the proper intersection check");
    sub->add_flag("--json", opts->as_json, "print the raw JSON report");
    std::string cmd = name;
    sub->callback(
        [&exit_code, cmd, opts]() { exit_code = run_compute(cmd, *opts); });
  }

  auto fixture_name = std::make_shared<std::string>();
  auto fixture_seed = std::make_shared<long long>(0);
  auto fixture_prime = std::make_shared<long long>(32003);
  auto fixture_out = std::make_shared<std::string>();
  CLI::App* fix = app.add_subcommand(
      "fixture", "emit a built-in example as a problem JSON document");
  fix->add_option("name", *fixture_name,
                  "quartic-surface | veronese-projection | ci-threefold | "
                  "segre-p1p2")
      ->required();
  fix->add_option("--seed", *fixture_seed, "random seed (default 0)");
  fix->add_option("--prime", *fixture_prime,
                  "coefficient field modulus (default 32003)");
  fix->add_option("-o,--output", *fixture_out,
                  "write to this file instead of stdout");
  fix->callback([&exit_code, fixture_name, fixture_seed, fixture_prime,
                 fixture_out]() {
    char* spec = nullptr;
    char* err = nullptr;
    npc_status st = npc_fixture_json(fixture_name->c_str(), *fixture_seed,
                                     *fixture_prime, &spec, &err);
    if (st != NPC_OK) {
      exit_code = fail(st, err);
      return;
    }
    if (fixture_out->empty()) {
      std::cout << spec << "\n";
    } else {
      std::ofstream out(*fixture_out, std::ios::binary);
      if (!out) {
        std::cerr << "npc: error: cannot write '" << *fixture_out << "'\n";
        npc_string_free(spec);
        exit_code = static_cast<int>(NPC_ERR_BAD_ARGUMENT);
        return;
      }
      out << spec << "\n";
    }
    npc_string_free(spec);
  });

  CLI11_PARSE(app, argc, argv);
  return exit_code;
}
