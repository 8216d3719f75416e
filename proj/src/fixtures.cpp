#include "fixtures.hpp"

#include <utility>

#include "groebner.hpp"
#include "hilbert.hpp"
#include "matrix.hpp"
#include "rng.hpp"

namespace npc {

namespace {

std::vector<std::string> numbered(const std::string& base, int count) {
  std::vector<std::string> v;
  v.reserve(count);
  for (int i = 0; i < count; ++i) v.push_back(base + std::to_string(i));
  return v;
}

void monomials_in_range(int nvars, int lo, int hi, int deg,
                        std::vector<int32_t>& exps,
                        std::vector<Monomial>& out, int pos) {
  if (pos == hi - 1) {
    exps[pos] = deg;
    out.push_back(Monomial(exps));
    exps[pos] = 0;
    return;
  }
  for (int d = deg; d >= 0; --d) {
    exps[pos] = d;
    monomials_in_range(nvars, lo, hi, deg - d, exps, out, pos + 1);
  }
  exps[pos] = 0;
}

std::vector<Monomial> monomials_in_range(int nvars, int lo, int hi, int deg) {
  std::vector<Monomial> out;
  std::vector<int32_t> exps(nvars, 0);
  monomials_in_range(nvars, lo, hi, deg, exps, out, lo);
  return out;
}

// Dense form of the given degree supported on variables [lo, hi);
// coefficients uniform in GF(p), zeros included.
PolyP random_form(const RingPtr& ring, int lo, int hi, int deg,
                  RandomStream& rng) {
  uint32_t p = ring->prime();
  std::vector<Term<Fp>> raw;
  for (const Monomial& m : monomials_in_range(ring->nvars(), lo, hi, deg))
    raw.push_back({m, Fp(rng.below(p), p)});
  return PolyP::collect(ring, std::move(raw));
}

// Bihomogeneous form: degree d1 on [lo1, hi1), degree d2 on [lo2, hi2).
PolyP random_biform(const RingPtr& ring, int lo1, int hi1, int d1, int lo2,
                    int hi2, int d2, RandomStream& rng) {
  uint32_t p = ring->prime();
  std::vector<Term<Fp>> raw;
  for (const Monomial& m1 : monomials_in_range(ring->nvars(), lo1, hi1, d1))
    for (const Monomial& m2 : monomials_in_range(ring->nvars(), lo2, hi2, d2))
      raw.push_back({m1 * m2, Fp(rng.below(p), p)});
  return PolyP::collect(ring, std::move(raw));
}

PolyP linear_combination(const std::vector<PolyP>& gens, RandomStream& rng) {
  uint32_t p = gens.front().ring()->prime();
  PolyP acc = PolyP::zero(gens.front().ring());
  for (const PolyP& g : gens) acc = acc + g.scaled(Fp(rng.below(p), p));
  return acc;
}

// Invertible matrix over GF(p), entries uniform; redrawn until the
// determinant is nonzero.
std::vector<std::vector<Fp>> random_invertible(int n, uint32_t p,
                                               RandomStream& rng) {
  while (true) {
    std::vector<std::vector<Fp>> m(n, std::vector<Fp>(n, Fp(0, p)));
    for (auto& row : m)
      for (auto& e : row) e = Fp(rng.below(p), p);
    auto g = m;
    bool singular = false;
    for (int col = 0; col < n && !singular; ++col) {
      int pivot = -1;
      for (int r = col; r < n; ++r)
        if (!g[r][col].is_zero()) {
          pivot = r;
          break;
        }
      if (pivot < 0) {
        singular = true;
        break;
      }
      std::swap(g[pivot], g[col]);
      Fp inv = g[col][col].inv();
      for (int r = col + 1; r < n; ++r) {
        Fp f = g[r][col] * inv;
        for (int c = col; c < n; ++c) g[r][c] = g[r][c] - f * g[col][c];
      }
    }
    if (!singular) return m;
  }
}

std::vector<std::string> poly_strings(const std::vector<PolyP>& gens) {
  std::vector<std::string> out;
  out.reserve(gens.size());
  for (const PolyP& g : gens) out.push_back(to_string(g));
  return out;
}

SchemeStats stats_of(const RingPtr& ring, const std::vector<PolyP>& gens) {
  return scheme_stats(IdealP(ring, gens));
}

// del Pezzo quartic surface: D is the curve of 2x2 minors of a 2x4
// matrix of random linear forms in P^4 (a rational quartic), X is cut by
// two random quadrics from the minor ideal.
FixtureDoc quartic_surface(uint64_t seed, uint32_t prime) {
  for (uint64_t attempt = 0;; ++attempt) {
    if (attempt == 16)
      throw genericity_error(
          "quartic-surface: no generic draw after 16 attempts");
    RandomStream rng = derived_stream(seed, "fixture|quartic-surface",
                                      attempt);
    RingPtr ring = Ring::make(numbered("x", 5), Domain::Fp, prime,
                              OrderSpec::degrevlex());
    PolyMatrix<Fp> m(ring, 2, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 4; ++j) m.at(i, j) = random_form(ring, 0, 5, 1, rng);
    std::vector<PolyP> minors = minors_with_required_rows(m, 2, {});
    if (minors.size() != 6) continue;
    std::vector<PolyP> quadrics = {linear_combination(minors, rng),
                                   linear_combination(minors, rng)};
    if (!(stats_of(ring, quadrics) == SchemeStats{2, 4})) continue;
    if (!(stats_of(ring, minors) == SchemeStats{1, 4})) continue;
    FixtureDoc doc;
    doc.name = "quartic-surface";
    doc.variables = ring->vars();
    doc.variety = poly_strings(quadrics);
    doc.divisors.emplace_back("D", poly_strings(minors));
    return doc;
  }
}

// Veronese surface in P^5 projected from a point off the secant variety,
// landing in P^4 as a smooth quartic.  The divisors are the image D of a
// random plane cubic (a sextic curve) and a hyperplane section H.
FixtureDoc veronese_projection(uint64_t seed, uint32_t prime) {
  for (uint64_t attempt = 0;; ++attempt) {
    if (attempt == 16)
      throw genericity_error(
          "veronese-projection: no generic draw after 16 attempts");
    RandomStream rng = derived_stream(seed, "fixture|veronese-projection",
                                      attempt);
    std::vector<std::string> vars = numbered("y", 3);
    for (const std::string& v : numbered("x", 5)) vars.push_back(v);
    RingPtr graph_ring =
        Ring::make(vars, Domain::Fp, prime, OrderSpec::degrevlex());
    auto y = [&](int i) { return PolyP::variable(graph_ring, i); };
    auto x = [&](int i) { return PolyP::variable(graph_ring, 3 + i); };
    // Quadrics spanning the hyperplanes through the projection center
    // (1:1:-1:0:0:0) on the Veronese of (y0^2, y1^2, y2^2, y0y1, y0y2,
    // y1y2); the center has rank 3, hence lies off the secant variety and
    // the projection is an embedding.
    std::vector<PolyP> base = {y(0) * y(0) + y(2) * y(2),
                               y(1) * y(1) + y(2) * y(2),
                               y(0) * y(1),
                               y(0) * y(2),
                               y(1) * y(2)};
    auto g = random_invertible(5, prime, rng);
    std::vector<PolyP> graph;
    for (int i = 0; i < 5; ++i) {
      PolyP u = PolyP::zero(graph_ring);
      for (int j = 0; j < 5; ++j) u = u + base[j].scaled(g[i][j]);
      graph.push_back(x(i) - u);
    }
    std::vector<int> drop = {0, 1, 2};
    IdealP variety = eliminate(IdealP(graph_ring, graph), drop);
    if (!(scheme_stats(variety) == SchemeStats{2, 4})) continue;

    std::vector<PolyP> graph_cubic = graph;
    graph_cubic.push_back(random_form(graph_ring, 0, 3, 3, rng));
    IdealP cubic_image = eliminate(IdealP(graph_ring, graph_cubic), drop);
    if (!(scheme_stats(cubic_image) == SchemeStats{1, 6})) continue;

    PolyP section = random_form(variety.ring, 0, 5, 1, rng);
    IdealP slice = variety;
    slice.add(section);
    if (!(scheme_stats(slice) == SchemeStats{1, 4})) continue;

    FixtureDoc doc;
    doc.name = "veronese-projection";
    doc.variables = variety.ring->vars();
    doc.variety = poly_strings(variety.gens);
    doc.divisors.emplace_back("D", poly_strings(cubic_image.gens));
    doc.divisors.emplace_back("H",
                              std::vector<std::string>{to_string(section)});
    return doc;
  }
}

// (2,2) complete intersection threefold in P^5 containing the (2,2,2)
// complete intersection surface D.
FixtureDoc ci_threefold(uint64_t seed, uint32_t prime) {
  for (uint64_t attempt = 0;; ++attempt) {
    if (attempt == 16)
      throw genericity_error("ci-threefold: no generic draw after 16 attempts");
    RandomStream rng = derived_stream(seed, "fixture|ci-threefold", attempt);
    RingPtr ring = Ring::make(numbered("x", 6), Domain::Fp, prime,
                              OrderSpec::degrevlex());
    std::vector<PolyP> surface = {random_form(ring, 0, 6, 2, rng),
                                  random_form(ring, 0, 6, 2, rng),
                                  random_form(ring, 0, 6, 2, rng)};
    std::vector<PolyP> variety = {linear_combination(surface, rng),
                                  linear_combination(surface, rng)};
    if (!(stats_of(ring, variety) == SchemeStats{3, 4})) continue;
    if (!(stats_of(ring, surface) == SchemeStats{2, 8})) continue;
    FixtureDoc doc;
    doc.name = "ci-threefold";
    doc.variables = ring->vars();
    doc.variety = poly_strings(variety);
    doc.divisors.emplace_back("D", poly_strings(surface));
    return doc;
  }
}

// P^1 x P^2 Segre embedded in P^5 through a random coordinate change,
// with a divisor of type (1,2) obtained by graph elimination.
FixtureDoc segre_p1p2(uint64_t seed, uint32_t prime) {
  for (uint64_t attempt = 0;; ++attempt) {
    if (attempt == 16)
      throw genericity_error("segre-p1p2: no generic draw after 16 attempts");
    RandomStream rng = derived_stream(seed, "fixture|segre-p1p2", attempt);
    RingPtr ring = Ring::make(numbered("x", 6), Domain::Fp, prime,
                              OrderSpec::degrevlex());
    auto g = random_invertible(6, prime, rng);
    std::vector<PolyP> rows;  // entries of the 2x3 matrix, row major
    for (int k = 0; k < 6; ++k) {
      PolyP mk = PolyP::zero(ring);
      for (int j = 0; j < 6; ++j)
        mk = mk + PolyP::variable(ring, j).scaled(g[k][j]);
      rows.push_back(mk);
    }
    PolyMatrix<Fp> m(ring, 2, 3);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j) m.at(i, j) = rows[3 * i + j];
    std::vector<PolyP> variety = minors_with_required_rows(m, 2, {});
    if (variety.size() != 3) continue;
    if (!(stats_of(ring, variety) == SchemeStats{3, 3})) continue;

    // Graph of P^1 x P^2 -> P^5 in coordinates (s, t, y0, y1, y2, x...):
    // matrix entry (i, j) pairs with (s, t)_i * y_j.
    std::vector<std::string> vars = {"s", "t", "y0", "y1", "y2"};
    for (const std::string& v : numbered("x", 6)) vars.push_back(v);
    RingPtr graph_ring =
        Ring::make(vars, Domain::Fp, prime, OrderSpec::degrevlex());
    std::vector<PolyP> graph;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j) {
        PolyP entry = PolyP::zero(graph_ring);
        for (int c = 0; c < 6; ++c)
          entry = entry + PolyP::variable(graph_ring, 5 + c).scaled(g[3 * i + j][c]);
        graph.push_back(entry - PolyP::variable(graph_ring, i) *
                                    PolyP::variable(graph_ring, 2 + j));
      }
    graph.push_back(random_biform(graph_ring, 0, 2, 1, 2, 5, 2, rng));
    IdealP divisor =
        eliminate(IdealP(graph_ring, graph), {0, 1, 2, 3, 4});
    if (!(scheme_stats(divisor) == SchemeStats{2, 5})) continue;

    FixtureDoc doc;
    doc.name = "segre-p1p2";
    doc.variables = ring->vars();
    doc.variety = poly_strings(variety);
    doc.divisors.emplace_back("D", poly_strings(divisor.gens));
    return doc;
  }
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"quartic-surface", "veronese-projection", "ci-threefold",
          "segre-p1p2"};
}

FixtureDoc make_fixture(const std::string& name, uint64_t seed,
                        uint32_t prime) {
  if (name == "quartic-surface") return quartic_surface(seed, prime);
  if (name == "veronese-projection") return veronese_projection(seed, prime);
  if (name == "ci-threefold") return ci_threefold(seed, prime);
  if (name == "segre-p1p2") return segre_p1p2(seed, prime);
  throw value_error("unknown fixture '" + name +
                    "'; available: quartic-surface, veronese-projection, "
                    "ci-threefold, segre-p1p2");
}

}  // namespace npc
