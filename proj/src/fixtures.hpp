#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ideal.hpp"

namespace npc {

// A generated example input: variable names, variety generators and named
// divisor generator lists, all as polynomial text over GF(prime).
struct FixtureDoc {
  std::string name;
  std::vector<std::string> variables;
  std::vector<std::string> variety;
  std::vector<std::pair<std::string, std::vector<std::string>>> divisors;
};

std::vector<std::string> fixture_names();

// Builds one of the built-in examples with seeded random coefficients.
// The coefficients vary with the seed; the intersection theory does not.
//   quartic-surface      del Pezzo quartic in P^4 with a rational quartic
//                        curve as divisor
//   veronese-projection  Veronese quartic projected to P^4, a sextic curve
//                        divisor and a hyperplane divisor
//   ci-threefold         (2,2) complete intersection in P^5 with a
//                        (2,2,2) surface divisor
//   segre-p1p2           P^1 x P^2 in P^5 with a divisor of type (1,2)
FixtureDoc make_fixture(const std::string& name, uint64_t seed,
                        uint32_t prime);

}  // namespace npc
