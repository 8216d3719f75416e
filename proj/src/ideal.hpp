#pragma once

#include <string>
#include <vector>

#include "polynomial.hpp"

namespace npc {

// Generator list in a fixed ring.  Zero generators are dropped on
// construction; homogeneity is the caller's contract and is checked where
// an operation needs it.
template <class K>
struct Ideal {
  RingPtr ring;
  std::vector<Poly<K>> gens;

  Ideal() = default;
  explicit Ideal(RingPtr r) : ring(std::move(r)) {}
  Ideal(RingPtr r, std::vector<Poly<K>> g) : ring(std::move(r)) {
    for (auto& p : g) {
      require_compatible(p.ring(), ring);
      if (!p.is_zero()) gens.push_back(std::move(p));
    }
  }

  void add(Poly<K> p) {
    require_compatible(p.ring(), ring);
    if (!p.is_zero()) gens.push_back(std::move(p));
  }

  // Appends p unless an equal generator is already present.
  void add_unique(const Poly<K>& p) {
    if (p.is_zero()) return;
    for (const auto& g : gens)
      if (g == p) return;
    gens.push_back(p);
  }
};

using IdealQ = Ideal<Rational>;
using IdealP = Ideal<Fp>;

template <class K>
void require_homogeneous(const Ideal<K>& ideal, const std::string& what) {
  for (const auto& g : ideal.gens)
    if (!g.is_homogeneous())
      throw parse_error(what + ": generator '" + to_string(g) +
                        "' is not homogeneous");
}

inline IdealP reduce_mod_p(const IdealQ& ideal, uint32_t prime) {
  RingPtr dst =
      Ring::make(ideal.ring->vars(), Domain::Fp, prime, ideal.ring->order());
  IdealP out(dst);
  for (const auto& g : ideal.gens) {
    // Clear denominators first: scaling a generator does not change the
    // ideal, and it avoids spurious prime-divides-denominator failures.
    BigInt l = 1;
    for (const auto& t : g.terms()) l = boost::multiprecision::lcm(l, rat_den(t.coeff));
    PolyQ scaled = g.scaled(Rational(l));
    PolyP r = reduce_mod_p(scaled, dst);
    if (r.is_zero())
      throw value_error("generator '" + to_string(g) + "' vanishes mod " +
                        std::to_string(prime) + "; choose a different prime");
    out.add(std::move(r));
  }
  return out;
}

}  // namespace npc
