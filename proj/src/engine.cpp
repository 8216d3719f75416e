#include "engine.hpp"

#include <algorithm>

#include "parse.hpp"

namespace npc {

namespace {

std::vector<std::string> string_array(const nlohmann::ordered_json& j,
                                      const std::string& what) {
  if (!j.is_array())
    throw parse_error("'" + what + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string())
      throw parse_error("'" + what + "' must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

ProblemDoc ProblemDoc::parse(const std::string& json_text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw parse_error("input must be a JSON object");
  ProblemDoc doc;
  bool saw_variables = false;
  for (const auto& [key, value] : j.items()) {
    if (key == "variables") {
      doc.variables = string_array(value, "variables");
      saw_variables = true;
    } else if (key == "variety") {
      doc.variety = string_array(value, "variety");
    } else if (key == "divisors") {
      if (!value.is_object())
        throw parse_error("'divisors' must be an object of generator lists");
      for (const auto& [name, gens] : value.items())
        doc.divisors.emplace_back(name,
                                  string_array(gens, "divisors." + name));
    } else {
      throw parse_error("unknown key '" + key + "' in input");
    }
  }
  if (!saw_variables || doc.variables.empty())
    throw parse_error("input declares no variables");
  return doc;
}

ProblemDoc ProblemDoc::from_fixture(const FixtureDoc& f) {
  ProblemDoc doc;
  doc.variables = f.variables;
  doc.variety = f.variety;
  doc.divisors = f.divisors;
  return doc;
}

nlohmann::ordered_json ProblemDoc::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  j["variables"] = variables;
  j["variety"] = variety;
  nlohmann::ordered_json divs = nlohmann::ordered_json::object();
  for (const auto& [name, gens] : divisors) divs[name] = gens;
  j["divisors"] = std::move(divs);
  return j;
}

Engine::Engine(const ProblemDoc& doc, const EngineOptions& opt) : opt_(opt) {
  RingPtr ringq = Ring::make(doc.variables, Domain::Q, 0,
                             OrderSpec::degrevlex());
  IdealQ vq(ringq);
  for (const std::string& text : doc.variety)
    vq.add(parse_polynomial<Rational>(text, ringq));
  require_homogeneous(vq, "variety");
  variety_ = reduce_mod_p(vq, opt_.prime);

  std::vector<std::pair<std::string, std::vector<std::string>>> chosen;
  if (opt_.has_selection) {
    for (const std::string& name : opt_.selection) {
      auto it = std::find_if(doc.divisors.begin(), doc.divisors.end(),
                             [&](const auto& d) { return d.first == name; });
      if (it == doc.divisors.end())
        throw value_error("unknown divisor '" + name + "'");
      chosen.push_back(*it);
    }
  } else {
    chosen = doc.divisors;
  }
  for (const auto& [name, gens] : chosen) {
    IdealQ jq(ringq);
    for (const std::string& text : gens)
      jq.add(parse_polynomial<Rational>(text, ringq));
    require_homogeneous(jq, "divisor '" + name + "'");
    if (jq.gens.empty())
      throw value_error("divisor '" + name + "' has no generators");
    IdealP jp = reduce_mod_p(jq, opt_.prime);
    for (const PolyP& g : variety_.gens) jp.add_unique(g);
    divisor_names_.push_back(name);
    divisor_ideals_.push_back(std::move(jp));
  }

  stats_ = scheme_stats(variety_);
}

nlohmann::ordered_json Engine::provenance(long long retries_used) const {
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  p["seed"] = opt_.seed;
  p["prime"] = opt_.prime;
  p["retries_used"] = retries_used;
  return p;
}

DegreeTable Engine::measure(const std::set<PolarDescriptor>& wanted) const {
  MeasureOptions mo;
  mo.seed = opt_.seed;
  mo.retries = opt_.retries;
  mo.jobs = opt_.jobs;
  bool with_divisors = false;
  for (const auto& d : wanted)
    if (!d.div.empty()) with_divisors = true;
  return polar_product_table(variety_,
                             with_divisors ? divisor_ideals_
                                           : std::vector<IdealP>{},
                             wanted, stats_.dim, mo);
}

std::vector<long long> Engine::singles_from(const DegreeTable& table) const {
  std::vector<long long> degs;
  for (int j = 0; j <= table.n; ++j)
    degs.push_back(table.at(PolarDescriptor::single(table.n, table.s, j)));
  return degs;
}

nlohmann::ordered_json Engine::products_json(const DegreeTable& table) const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [d, deg] : table.entries) {
    nlohmann::ordered_json e = nlohmann::ordered_json::object();
    e["m"] = d.m;
    nlohmann::ordered_json divs = nlohmann::ordered_json::array();
    for (const auto& [k, a] : d.div) {
      nlohmann::ordered_json one = nlohmann::ordered_json::object();
      one["k"] = k;
      one["a"] = a;
      divs.push_back(std::move(one));
    }
    e["divisors"] = std::move(divs);
    e["degree"] = deg;
    arr.push_back(std::move(e));
  }
  return arr;
}

nlohmann::ordered_json Engine::chern_table_json(
    const DegreeTable& table) const {
  ClassAlgebra alg(table.n, table.s);
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const ChernTableEntry& entry : chern_table_layout(alg, divisor_names_)) {
    long long v = chern_monomial_degree(alg, entry.mono, table);
    if (obj.contains(entry.label)) {
      // Two monomials can share a label when a divisor is named like a
      // class symbol; they must then agree numerically.
      if (obj[entry.label].get<long long>() != v)
        throw internal_error("conflicting values for chern table entry '" +
                             entry.label + "'");
      continue;
    }
    obj[entry.label] = v;
  }
  return obj;
}

nlohmann::ordered_json Engine::chi_json(const ChiPolynomial& chi) const {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& [exps, c] : chi.coeff) {
    std::string key;
    for (size_t i = 0; i < exps.size(); ++i) {
      if (i) key += ",";
      key += std::to_string(exps[i]);
    }
    obj[key] = rat_to_string(c);
  }
  return obj;
}

void Engine::require_positive_dim() const {
  if (stats_.dim < 0) throw value_error("the variety is empty");
  if (stats_.dim == 0)
    throw value_error(
        "the variety is a finite set of points; polar classes need "
        "dimension at least 1");
}

void Engine::run_preflight_checks(const std::string& command) const {
  if (command == "degree") return;
  require_positive_dim();
  bool uses_divisors =
      (command == "products" || command == "euler") &&
      !divisor_ideals_.empty();
  if (uses_divisors && opt_.check_proper &&
      !check_proper_intersection(variety_, divisor_ideals_, stats_.dim))
    throw improper_intersection_error(
        "the divisors do not meet the variety properly; every subset of "
        "size d must cut it in codimension d");
  if (opt_.check_smooth) {
    if (!is_smooth(variety_))
      throw value_error("the variety fails the Jacobian smoothness check");
    if (uses_divisors) {
      for (size_t i = 0; i < divisor_ideals_.size(); ++i)
        if (!is_smooth(divisor_ideals_[i]))
          throw value_error("divisor '" + divisor_names_[i] +
                            "' fails the Jacobian smoothness check");
    }
  }
}

nlohmann::ordered_json Engine::run(const std::string& command) {
  nlohmann::ordered_json report = nlohmann::ordered_json::object();
  run_preflight_checks(command);

  if (command == "degree") {
    report["dim"] = stats_.dim;
    report["degree"] = stats_.degree;
    report["provenance"] = provenance(0);
    return report;
  }

  int n = stats_.dim;
  int r = variety_.ring->nvars() - 1;

  if (command == "polar" || command == "ed" || command == "dual") {
    std::set<PolarDescriptor> wanted;
    for (int j = 0; j <= n; ++j)
      wanted.insert(PolarDescriptor::single(n, 0, j));
    DegreeTable table = measure(wanted);
    std::vector<long long> degs = singles_from(table);
    if (command == "polar") {
      report["polar_degrees"] = degs;
    } else if (command == "ed") {
      report["ed_degree"] = ed_degree(degs);
    } else {
      auto [ddim, ddeg] = dual_stats(degs, r);
      nlohmann::ordered_json dual = nlohmann::ordered_json::object();
      dual["dim"] = ddim;
      dual["degree"] = ddeg;
      report["dual"] = std::move(dual);
    }
    report["provenance"] = provenance(table.retries_used);
    return report;
  }

  if (command == "products" || command == "euler") {
    int s = static_cast<int>(divisor_ideals_.size());
    ClassAlgebra alg(n, s);
    std::set<PolarDescriptor> wanted = plan_needed_descriptors(n, s);
    for (int j = 0; j <= n; ++j)
      wanted.insert(PolarDescriptor::single(n, s, j));
    for (const ChernTableEntry& entry :
         chern_table_layout(alg, divisor_names_))
      for (const PolarDescriptor& d :
           monomial_descriptor_support(alg, entry.mono))
        wanted.insert(d);
    DegreeTable table = measure(wanted);

    if (command == "products") {
      report["products"] = products_json(table);
      report["provenance"] = provenance(table.retries_used);
      return report;
    }

    std::vector<long long> degs = singles_from(table);
    ChiPolynomial chi = assemble_chi(table);
    if (s <= 4) {
      // chi of an integral divisor combination is an Euler characteristic,
      // hence an integer; a fractional value means an inconsistent table.
      std::vector<Rational> point(s, Rational(0));
      std::vector<int> idx(s, -2);
      while (true) {
        for (int i = 0; i < s; ++i) point[i] = Rational(idx[i]);
        if (!rat_is_integer(chi.eval(point)))
          throw internal_error(
              "assembled Euler characteristic is not integral at an "
              "integer point");
        int i = 0;
        for (; i < s; ++i) {
          if (++idx[i] <= 2) break;
          idx[i] = -2;
        }
        if (i == s) break;
      }
    }

    report["polar_degrees"] = degs;
    report["products"] = products_json(table);
    report["chern_table"] = chern_table_json(table);
    report["chi"] = chi_json(chi);
    report["ed_degree"] = ed_degree(degs);
    bool linear = true;
    for (int j = 1; j <= n; ++j)
      if (degs[j] != 0) linear = false;
    if (!linear) {
      auto [ddim, ddeg] = dual_stats(degs, r);
      nlohmann::ordered_json dual = nlohmann::ordered_json::object();
      dual["dim"] = ddim;
      dual["degree"] = ddeg;
      report["dual"] = std::move(dual);
    }
    report["provenance"] = provenance(table.retries_used);
    return report;
  }

  throw value_error("unknown command '" + command +
                    "'; expected degree, polar, products, euler, ed or dual");
}

}  // namespace npc
