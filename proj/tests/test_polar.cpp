#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <numeric>

#include "fixtures.hpp"
#include "parse.hpp"
#include "polar.hpp"

using namespace npc;

namespace {

constexpr uint32_t kP = 32003;

RingPtr ringP(int nvars) {
  std::vector<std::string> v;
  for (int i = 0; i < nvars; ++i) v.push_back("x" + std::to_string(i));
  return Ring::make(v, Domain::Fp, kP, OrderSpec::degrevlex());
}

PolyP pp(const std::string& text, const RingPtr& ring) {
  return parse_polynomial<Fp>(text, ring);
}

PolyP dense_form(const RingPtr& ring, int deg, RandomStream& rng) {
  std::vector<Term<Fp>> raw;
  std::vector<int32_t> e(ring->nvars(), 0);
  std::function<void(int, int)> rec = [&](int v, int left) {
    if (v == ring->nvars() - 1) {
      e[v] = left;
      raw.push_back({Monomial(e), Fp(rng.below(kP), kP)});
      e[v] = 0;
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[v] = k;
      rec(v + 1, left - k);
    }
    e[v] = 0;
  };
  rec(0, deg);
  return PolyP::collect(ring, std::move(raw));
}

struct Problem {
  RingPtr ring;
  IdealP variety;
  std::vector<IdealP> divisors;  // each already contains the variety gens
  int n = 0;
};

Problem load(const std::string& name, uint64_t seed) {
  FixtureDoc f = make_fixture(name, seed, kP);
  RingPtr ring =
      Ring::make(f.variables, Domain::Fp, kP, OrderSpec::degrevlex());
  Problem p;
  p.ring = ring;
  p.variety = IdealP(ring);
  for (const auto& g : f.variety) p.variety.add(pp(g, ring));
  for (const auto& [dname, gens] : f.divisors) {
    IdealP d(ring, p.variety.gens);
    for (const auto& g : gens) d.add_unique(pp(g, ring));
    p.divisors.push_back(std::move(d));
  }
  p.n = scheme_stats(p.variety).dim;
  return p;
}

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Closed form for a generic complete intersection of hypersurfaces of
// degrees `degs` in P^r: expand the tangent Chern series
// (1+H)^(r+1) / prod(1 + d_i H), then convert Chern coefficients to polar
// degrees with alternating binomial weights.
std::vector<long long> ci_polar_oracle(int r, const std::vector<int>& degs) {
  int n = r - static_cast<int>(degs.size());
  std::vector<long long> gamma(n + 1, 0);
  for (int j = 0; j <= n; ++j) gamma[j] = binom(r + 1, j);
  for (int d : degs) {
    std::vector<long long> inv(n + 1), next(n + 1, 0);
    long long pw = 1;
    for (int k = 0; k <= n; ++k, pw *= -d) inv[k] = pw;
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= j; ++k) next[j] += gamma[j - k] * inv[k];
    gamma = next;
  }
  long long degree = 1;
  for (int d : degs) degree *= d;
  std::vector<long long> out(n + 1, 0);
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= j; ++i) {
      long long term = binom(n - i + 1, j - i) * gamma[i] * degree;
      out[j] += (i % 2 == 0) ? term : -term;
    }
  return out;
}

}  // namespace

TEST_CASE("descriptor identity, ordering and labels") {
  PolarDescriptor t = PolarDescriptor::trivial(2, 1);
  CHECK(t.codim() == 0);
  CHECK(t.label({"D"}) == "[P0(X)]");

  PolarDescriptor p1 = PolarDescriptor::single(2, 1, 1);
  PolarDescriptor p2 = PolarDescriptor::single(2, 1, 2);
  CHECK(p1.codim() == 1);
  CHECK(p2.codim() == 2);
  CHECK(t < p1);
  CHECK(p1 < p2);
  CHECK(p1.label({"D"}) == "[P1(X)]");

  PolarDescriptor mix = PolarDescriptor::trivial(3, 2);
  mix.m[0] = 2;
  mix.div[0] = {1, 1};
  CHECK(mix.codim() == 3);
  CHECK(mix.label({"D", "E"}) == "[P1(X)]^2*f*[P0(D)]");
  CHECK(mix.key() == "m:2:0:0|d:1.1:1.0");

  // Divisors that are switched off do not contribute to identity.
  PolarDescriptor a = PolarDescriptor::trivial(2, 1);
  PolarDescriptor b = PolarDescriptor::trivial(2, 1);
  b.div[0] = {3, 0};
  b.canonicalize();
  CHECK(a == b);
}

TEST_CASE("polar equations adjoin the expected rank conditions") {
  Problem q = load("quartic-surface", 0);
  REQUIRE(q.n == 2);
  size_t base = q.variety.gens.size();

  RandomStream rng(7);
  IdealP same = polar_power_equations(q.variety, q.n, 0, 1, rng);
  CHECK(same.gens.size() == base);
  same = polar_power_equations(q.variety, q.n, 1, 0, rng);
  CHECK(same.gens.size() == base);

  // j = 1 on a surface in P^4: the matrix is square, one determinant.
  IdealP one = polar_power_equations(q.variety, q.n, 1, 1, rng);
  REQUIRE(one.gens.size() == base + 1);
  CHECK(one.gens.back().total_degree() == 2);
  CHECK(one.gens.back().is_homogeneous());

  // j = 2: a 4 x 5 matrix, five maximal minors through both linear rows.
  IdealP five = polar_power_equations(q.variety, q.n, 2, 1, rng);
  CHECK(five.gens.size() == base + 5);
  for (size_t i = base; i < five.gens.size(); ++i)
    CHECK(five.gens[i].total_degree() == 2);

  // Two batches draw independent forms.
  IdealP twice = polar_power_equations(q.variety, q.n, 1, 2, rng);
  CHECK(twice.gens.size() == base + 2);

  CHECK_THROWS_AS(polar_power_equations(q.variety, q.n, 3, 1, rng),
                  value_error);
  CHECK_THROWS_AS(polar_power_equations(q.variety, q.n, -1, 1, rng),
                  value_error);
  CHECK_THROWS_AS(polar_power_equations(q.variety, q.n, 1, -1, rng),
                  value_error);
}

TEST_CASE("measured degrees on the quartic surface") {
  Problem q = load("quartic-surface", 0);
  MeasureOptions opt;

  int extras = -1;
  PolarDescriptor t = PolarDescriptor::trivial(q.n, 1);
  CHECK(measure_descriptor(q.variety, q.divisors, t, q.n, opt, &extras) == 4);
  CHECK(extras == 0);

  // The trivial class degree is the degree of the scheme itself.
  CHECK(scheme_stats(q.variety).degree == 4);

  PolarDescriptor p1sq = PolarDescriptor::trivial(q.n, 1);
  p1sq.m[0] = 2;
  CHECK(measure_descriptor(q.variety, q.divisors, p1sq, q.n, opt) == 16);

  PolarDescriptor pushed = PolarDescriptor::trivial(q.n, 1);
  pushed.div[0] = {1, 1};
  CHECK(measure_descriptor(q.variety, q.divisors, pushed, q.n, opt) == 4);

  auto degs = polar_class_degrees(q.variety, q.n, opt);
  CHECK(degs == std::vector<long long>{4, 8, 12});
  CHECK(ed_degree(degs) == 24);
  CHECK(dual_stats(degs, 4) == std::pair<int, long long>{3, 12});
}

TEST_CASE("measure rejects malformed descriptors") {
  Problem q = load("quartic-surface", 0);
  MeasureOptions opt;

  // Shape mismatch: wrong m length, wrong divisor count.
  CHECK_THROWS_AS(measure_descriptor(q.variety, q.divisors,
                                     PolarDescriptor::trivial(3, 1), q.n, opt),
                  value_error);
  CHECK_THROWS_AS(measure_descriptor(q.variety, q.divisors,
                                     PolarDescriptor::trivial(2, 0), q.n, opt),
                  value_error);

  // Codimension beyond the dimension of the variety.
  PolarDescriptor deep = PolarDescriptor::trivial(q.n, 1);
  deep.m[1] = 2;
  CHECK_THROWS_AS(measure_descriptor(q.variety, q.divisors, deep, q.n, opt),
                  value_error);

  // A dimension claim the scheme cannot satisfy exhausts its attempts.
  MeasureOptions tight;
  tight.retries = 0;
  CHECK_THROWS_AS(measure_descriptor(q.variety, {}, PolarDescriptor::trivial(3, 0),
                                     3, tight),
                  genericity_error);
}

TEST_CASE("vanishing top polar class on the Segre threefold") {
  Problem s = load("segre-p1p2", 0);
  REQUIRE(s.n == 3);
  PolarDescriptor top = PolarDescriptor::single(s.n, 1, 3);
  MeasureOptions opt;
  CHECK(measure_descriptor(s.variety, s.divisors, top, s.n, opt) == 0);

  auto degs = polar_class_degrees(s.variety, s.n, opt);
  CHECK(degs == std::vector<long long>{3, 4, 3, 0});
  CHECK(ed_degree(degs) == 10);
  // The vanishing top class is a positive dual defect.
  CHECK(dual_stats(degs, 5) == std::pair<int, long long>{3, 3});
}

TEST_CASE("polar degrees of the projected Veronese surface") {
  Problem v = load("veronese-projection", 0);
  REQUIRE(v.n == 2);
  auto degs = polar_class_degrees(v.variety, v.n, MeasureOptions{});
  CHECK(degs == std::vector<long long>{4, 6, 3});
  CHECK(ed_degree(degs) == 13);
  CHECK(dual_stats(degs, 4) == std::pair<int, long long>{3, 3});
}

TEST_CASE("polar degrees match the complete intersection closed form") {
  struct Case {
    int r;
    std::vector<int> degs;
  };
  std::vector<Case> cases = {
      {2, {2}},    {2, {3}},    {3, {2}},    {3, {3}},
      {3, {2, 2}}, {4, {2}},    {4, {3}},    {4, {2, 2}},
      {4, {2, 3}}, {5, {2, 2}}, {5, {2, 3}}, {5, {3, 3}},
  };
  RandomStream rng(101);
  for (const auto& c : cases) {
    CAPTURE(c.r);
    RingPtr ring = ringP(c.r + 1);
    IdealP i(ring);
    for (int d : c.degs) i.add(dense_form(ring, d, rng));
    int n = c.r - static_cast<int>(c.degs.size());
    auto got = polar_class_degrees(i, n, MeasureOptions{});
    auto want = ci_polar_oracle(c.r, c.degs);
    CHECK(got == want);
  }
}

TEST_CASE("dual variety statistics from polar degrees") {
  CHECK(dual_stats({4, 8, 12, 16}, 5) == std::pair<int, long long>{4, 16});
  CHECK(dual_stats({3, 4, 3, 0}, 5) == std::pair<int, long long>{3, 3});
  CHECK(dual_stats({2, 2, 2}, 3) == std::pair<int, long long>{2, 2});
  CHECK(dual_stats({4, 8, 12}, 4) == std::pair<int, long long>{3, 12});
  CHECK_THROWS_AS(dual_stats({5, 0, 0}, 4), value_error);
  CHECK_THROWS_AS(dual_stats({1, 0}, 3), value_error);

  CHECK(ed_degree({4, 8, 12}) == 24);
  CHECK(ed_degree({4, 6, 3}) == 13);
  CHECK(ed_degree({3, 4, 3, 0}) == 10);
  CHECK(ed_degree({}) == 0);
}

TEST_CASE("index set enumeration") {
  auto m21 = full_index_set(2, 1);
  CHECK(m21.size() == 7);
  auto m31 = full_index_set(3, 1);
  CHECK(m31.size() == 14);
  auto m22 = full_index_set(2, 2);
  CHECK(m22.size() == 11);

  // Every member is canonical and fits inside the dimension.
  for (const auto& d : m31) {
    CHECK(d.codim() <= 3);
    for (const auto& [k, a] : d.div)
      if (a == 0) CHECK(k == 1);
  }

  // The cube of the first polar class is present at full codimension.
  PolarDescriptor cube = PolarDescriptor::trivial(3, 1);
  cube.m[0] = 3;
  CHECK(m31.count(cube) == 1);
  CHECK(m21.count(PolarDescriptor::trivial(2, 1)) == 1);
}

TEST_CASE("product table is deterministic and schedule independent") {
  Problem q = load("quartic-surface", 0);
  auto wanted = full_index_set(q.n, 1);

  MeasureOptions a;
  a.seed = 0;
  DegreeTable t1 = polar_product_table(q.variety, q.divisors, wanted, q.n, a);
  DegreeTable t2 = polar_product_table(q.variety, q.divisors, wanted, q.n, a);
  CHECK(t1.entries == t2.entries);
  CHECK(t1.retries_used == t2.retries_used);

  MeasureOptions par = a;
  par.jobs = 4;
  DegreeTable t3 =
      polar_product_table(q.variety, q.divisors, wanted, q.n, par);
  CHECK(t1.entries == t3.entries);

  // A different seed draws different forms but measures the same class.
  MeasureOptions b;
  b.seed = 12345;
  DegreeTable t4 = polar_product_table(q.variety, q.divisors, wanted, q.n, b);
  CHECK(t1.entries == t4.entries);

  // Spot values against the known table.
  PolarDescriptor p2 = PolarDescriptor::single(q.n, 1, 2);
  CHECK(t1.at(p2) == 12);
  PolarDescriptor p1d = PolarDescriptor::trivial(q.n, 1);
  p1d.m[0] = 1;
  p1d.div[0] = {1, 1};
  CHECK(t1.at(p1d) == 8);

  PolarDescriptor missing = PolarDescriptor::trivial(q.n, 1);
  missing.div[0] = {2, 1};
  CHECK(t1.entries.count(missing) == 1);
  CHECK(t1.at(missing) == 6);
  PolarDescriptor absent = PolarDescriptor::trivial(3, 1);
  CHECK_THROWS_AS(t1.at(absent), value_error);
}

TEST_CASE("proper intersection screening") {
  Problem q = load("quartic-surface", 0);
  CHECK(check_proper_intersection(q.variety, q.divisors, q.n));
  CHECK(check_proper_intersection(q.variety, {}, q.n));

  // The same divisor listed twice can never cut the codimension twice.
  std::vector<IdealP> twice = {q.divisors[0], q.divisors[0]};
  CHECK_FALSE(check_proper_intersection(q.variety, twice, q.n));
}
