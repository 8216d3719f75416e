#include "polar.hpp"

#include <atomic>
#include <bit>
#include <functional>
#include <thread>

#include "matrix.hpp"

namespace npc {

namespace {

PolyP random_linear_form(const RingPtr& ring, RandomStream& rng) {
  std::vector<Term<Fp>> ts;
  for (int v = 0; v < ring->nvars(); ++v) {
    uint32_t c = rng.below(ring->prime());
    if (c != 0)
      ts.push_back({Monomial::var(v, ring->nvars()), Fp(c, ring->prime())});
  }
  return PolyP::collect(ring, std::move(ts));
}

}  // namespace

IdealP polar_power_equations(const IdealP& ideal, int dim, int j, int m,
                             RandomStream& rng) {
  if (m < 0) throw value_error("polar_power_equations: negative multiplicity");
  if (j < 0 || j > dim)
    throw value_error("polar index " + std::to_string(j) +
                      " out of range for dimension " + std::to_string(dim));
  IdealP out(ideal.ring, ideal.gens);
  if (j == 0 || m == 0) return out;

  RingPtr ring = ideal.ring;
  int r = ring->nvars() - 1;
  int t = static_cast<int>(ideal.gens.size());
  int nforms = dim - j + 2;
  int k = r - j + 2;

  for (int batch = 0; batch < m; ++batch) {
    std::vector<PolyP> stacked = ideal.gens;
    for (int f = 0; f < nforms; ++f)
      stacked.push_back(random_linear_form(ring, rng));
    PolyMatrix<Fp> mat = jacobian(stacked, ring);
    std::vector<int> required;
    for (int row = t; row < t + nforms; ++row) required.push_back(row);
    for (auto& d : minors_with_required_rows(mat, k, required))
      out.add_unique(d);
  }
  return out;
}

long long measure_descriptor(const IdealP& ideal,
                             const std::vector<IdealP>& divisors,
                             const PolarDescriptor& descriptor, int n,
                             const MeasureOptions& options,
                             int* extra_attempts) {
  PolarDescriptor desc = descriptor;
  desc.canonicalize();
  if (static_cast<int>(desc.m.size()) != n ||
      desc.div.size() != divisors.size())
    throw value_error("descriptor shape does not match the problem");
  int codim = desc.codim();
  if (codim > n)
    throw value_error("descriptor " + desc.key() +
                      " has codimension beyond the variety dimension");
  int expected_dim = n - codim;

  int attempts = 1 + std::max(0, options.retries);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    RandomStream rng =
        derived_stream(options.seed, "measure|" + desc.key(), attempt);

    IdealP cut(ideal.ring, ideal.gens);
    for (int j = 1; j <= n; ++j) {
      if (desc.m[j - 1] == 0) continue;
      IdealP part = polar_power_equations(ideal, n, j, desc.m[j - 1], rng);
      for (const auto& g : part.gens) cut.add_unique(g);
    }
    for (size_t i = 0; i < divisors.size(); ++i) {
      if (desc.div[i].second == 0) continue;
      IdealP part = polar_power_equations(divisors[i], n - 1,
                                          desc.div[i].first - 1, 1, rng);
      for (const auto& g : part.gens) cut.add_unique(g);
    }

    SchemeStats st = scheme_stats(cut);
    if (st.dim == -1) {
      if (extra_attempts) *extra_attempts = attempt;
      return 0;
    }
    if (st.dim == expected_dim) {
      if (extra_attempts) *extra_attempts = attempt;
      return st.degree;
    }
  }
  throw genericity_error(
      "descriptor " + desc.key() + " produced a scheme of dimension != " +
      std::to_string(expected_dim) + " in " + std::to_string(attempts) +
      " attempts; the random linear forms keep landing outside the generic "
      "locus");
}

DegreeTable polar_product_table(const IdealP& ideal,
                                const std::vector<IdealP>& divisors,
                                const std::set<PolarDescriptor>& wanted,
                                int n, const MeasureOptions& options) {
  std::vector<PolarDescriptor> order(wanted.begin(), wanted.end());
  std::vector<long long> degrees(order.size(), 0);
  std::vector<int> extras(order.size(), 0);
  std::vector<std::exception_ptr> errors(order.size());

  auto work = [&](size_t idx) {
    try {
      degrees[idx] = measure_descriptor(ideal, divisors, order[idx], n,
                                        options, &extras[idx]);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  };

  int jobs = std::max(1, options.jobs);
  if (jobs == 1 || order.size() <= 1) {
    for (size_t i = 0; i < order.size(); ++i) work(i);
  } else {
    std::atomic<size_t> cursor{0};
    auto runner = [&]() {
      for (;;) {
        size_t i = cursor.fetch_add(1);
        if (i >= order.size()) return;
        work(i);
      }
    };
    std::vector<std::thread> pool;
    int nthreads = std::min<size_t>(jobs, order.size());
    pool.reserve(nthreads);
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(runner);
    for (auto& th : pool) th.join();
  }

  for (size_t i = 0; i < order.size(); ++i)
    if (errors[i]) std::rethrow_exception(errors[i]);

  DegreeTable table;
  table.n = n;
  table.s = static_cast<int>(divisors.size());
  table.seed = options.seed;
  table.prime = ideal.ring->prime();
  for (size_t i = 0; i < order.size(); ++i) {
    PolarDescriptor d = order[i];
    d.canonicalize();
    table.entries[d] = degrees[i];
    table.retries_used += extras[i];
  }
  return table;
}

std::vector<long long> polar_class_degrees(const IdealP& ideal, int n,
                                           const MeasureOptions& options) {
  std::set<PolarDescriptor> singles;
  for (int j = 0; j <= n; ++j) singles.insert(PolarDescriptor::single(n, 0, j));
  DegreeTable t = polar_product_table(ideal, {}, singles, n, options);
  std::vector<long long> out;
  for (int j = 0; j <= n; ++j)
    out.push_back(t.at(PolarDescriptor::single(n, 0, j)));
  return out;
}

std::set<PolarDescriptor> full_index_set(int n, int s) {
  std::set<PolarDescriptor> out;
  // Enumerate the m-part by remaining weight, then the divisor part.
  std::vector<int> m(n, 0);
  std::function<void(int, int, PolarDescriptor&)> divisors =
      [&](int i, int budget, PolarDescriptor& d) {
        if (i == s) {
          PolarDescriptor c = d;
          c.canonicalize();
          out.insert(c);
          return;
        }
        d.div[i] = {1, 0};
        divisors(i + 1, budget, d);
        for (int k = 1; k <= budget; ++k) {
          d.div[i] = {k, 1};
          divisors(i + 1, budget - k, d);
        }
        d.div[i] = {1, 0};
      };
  std::function<void(int, int)> mpart = [&](int j, int budget) {
    if (j > n) {
      PolarDescriptor d;
      d.m = m;
      d.div.assign(s, {1, 0});
      divisors(0, budget, d);
      return;
    }
    for (int cnt = 0; cnt * j <= budget; ++cnt) {
      m[j - 1] = cnt;
      mpart(j + 1, budget - cnt * j);
    }
    m[j - 1] = 0;
  };
  mpart(1, n);
  return out;
}

std::pair<int, long long> dual_stats(const std::vector<long long>& degrees,
                                     int r) {
  int n = static_cast<int>(degrees.size()) - 1;
  int jstar = 0;
  for (int j = 1; j <= n; ++j)
    if (degrees[j] != 0) jstar = j;
  if (jstar == 0)
    throw value_error(
        "all higher polar degrees vanish (a linear space); the dual is "
        "degenerate and has no degree here");
  int defect = n - jstar;
  return {r - 1 - defect, degrees[jstar]};
}

long long ed_degree(const std::vector<long long>& degrees) {
  long long s = 0;
  for (long long d : degrees) s += d;
  return s;
}

bool check_proper_intersection(const IdealP& ideal,
                               const std::vector<IdealP>& divisors, int n) {
  int s = static_cast<int>(divisors.size());
  for (uint32_t mask = 1; mask < (1u << s); ++mask) {
    int size = std::popcount(mask);
    if (size > n) continue;
    IdealP cut(ideal.ring, ideal.gens);
    for (int i = 0; i < s; ++i)
      if (mask & (1u << i))
        for (const auto& g : divisors[i].gens) cut.add_unique(g);
    SchemeStats st = scheme_stats(cut);
    if (st.dim != n - size && st.dim != -1) return false;
  }
  return true;
}

}  // namespace npc
