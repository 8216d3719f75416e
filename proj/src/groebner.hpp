#pragma once

#include <vector>

#include "ideal.hpp"

namespace npc {

// Reduced Groebner basis of I under its ring's order: monic generators,
// no leading term divides another, every tail is fully reduced.  Sorted
// ascending by leading monomial, so the result is canonical for (I, order).
// The zero ideal gives an empty basis, the unit ideal gives {1}.
std::vector<PolyP> groebner_basis(const IdealP& ideal);

// Remainder of f on division by basis: no term of the result is divisible
// by any leading term.  `basis` need not be a Groebner basis, but normal
// forms are only canonical when it is.
PolyP normal_form(const PolyP& f, const std::vector<PolyP>& basis);

// Generators of I restricted to the subring without `drop_vars`
// (indices into I's ring).  Computed with a two-block order, eliminated
// variables dominant; the result lives in a fresh degrevlex ring on the
// remaining variables.
IdealP eliminate(const IdealP& ideal, const std::vector<int>& drop_vars);

}  // namespace npc
