#pragma once

#include <vector>

#include "groebner.hpp"
#include "rational.hpp"

namespace npc {

// Projective dimension and degree of a closed subscheme of P^(nvars-1).
// dim -1 encodes the empty scheme (degree 0).
struct SchemeStats {
  int dim = -1;
  long long degree = 0;
  bool operator==(const SchemeStats&) const = default;
};

// Coefficients of the Hilbert series numerator N(t), where the series of
// k[x]/I over the full denominator (1-t)^nvars equals N(t)/(1-t)^nvars.
// Input: exponent vectors of monomial generators (need not be minimal).
std::vector<BigInt> hilbert_numerator(std::vector<std::vector<int32_t>> gens,
                                      int nvars);

// Reads (dim, degree) off a numerator: strip the (1-t) factors, evaluate
// the rest at 1.
SchemeStats stats_from_numerator(std::vector<BigInt> numerator, int nvars);

// Groebner basis -> leading term ideal -> Hilbert series.  Requires a
// degrevlex ring (any global order works mathematically; pinning one keeps
// results canonical).
SchemeStats scheme_stats(const IdealP& ideal);

// Jacobian criterion: X = V(I) of codimension c is smooth iff I together
// with the c x c minors of the Jacobian of its generators cuts out the
// empty scheme.  Requires a nonempty scheme.
bool is_smooth(const IdealP& ideal);

}  // namespace npc
