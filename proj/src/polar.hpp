#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hilbert.hpp"
#include "rng.hpp"

namespace npc {

// One intersection product of polar classes on an n-dimensional variety
// with s marked divisors:
//
//   prod_j [P_j(X)]^(m_j) * prod_(i : a_i = 1) f_* [P_(k_i - 1)(D_i)]
//
// m is indexed by j = 1..n.  A divisor with a_i = 0 does not appear; its
// k_i is normalized to 1 so equal products compare equal.
struct PolarDescriptor {
  std::vector<int> m;
  std::vector<std::pair<int, int>> div;  // (k_i, a_i)

  static PolarDescriptor trivial(int n, int s) {
    PolarDescriptor d;
    d.m.assign(n, 0);
    d.div.assign(s, {1, 0});
    return d;
  }
  static PolarDescriptor single(int n, int s, int j) {
    PolarDescriptor d = trivial(n, s);
    if (j > 0) d.m[j - 1] = 1;
    return d;
  }

  void canonicalize() {
    for (auto& [k, a] : div)
      if (a == 0) k = 1;
  }

  int codim() const {
    int c = 0;
    for (size_t j = 0; j < m.size(); ++j) c += static_cast<int>(j + 1) * m[j];
    for (const auto& [k, a] : div) c += a * k;
    return c;
  }

  bool operator<(const PolarDescriptor& o) const {
    if (codim() != o.codim()) return codim() < o.codim();
    if (m != o.m) return m < o.m;
    return div < o.div;
  }
  bool operator==(const PolarDescriptor& o) const {
    return m == o.m && div == o.div;
  }

  // Stable identity string; also the seed tag for this measurement.
  std::string key() const {
    std::string s = "m";
    for (int x : m) s += ":" + std::to_string(x);
    s += "|d";
    for (const auto& [k, a] : div)
      s += ":" + std::to_string(k) + "." + std::to_string(a);
    return s;
  }

  std::string label(const std::vector<std::string>& divisor_names) const {
    std::string s;
    auto append = [&s](const std::string& part) {
      if (!s.empty()) s += "*";
      s += part;
    };
    for (size_t j = 0; j < m.size(); ++j) {
      if (m[j] == 0) continue;
      std::string part = "[P" + std::to_string(j + 1) + "(X)]";
      if (m[j] > 1) part += "^" + std::to_string(m[j]);
      append(part);
    }
    for (size_t i = 0; i < div.size(); ++i) {
      if (div[i].second == 0) continue;
      append("f*[P" + std::to_string(div[i].first - 1) + "(" +
             divisor_names[i] + ")]");
    }
    if (s.empty()) s = "[P0(X)]";
    return s;
  }
};

// Measured intersection degrees, keyed by descriptor.
struct DegreeTable {
  int n = 0;
  int s = 0;
  uint64_t seed = 0;
  uint32_t prime = 0;
  std::map<PolarDescriptor, long long> entries;
  long long retries_used = 0;

  long long at(const PolarDescriptor& d) const {
    auto it = entries.find(d);
    if (it == entries.end())
      throw value_error("degree table has no entry for descriptor " +
                        d.key());
    return it->second;
  }
};

struct MeasureOptions {
  uint64_t seed = 0;
  int retries = 3;
  int jobs = 1;
};

// Equations of the j-th polar class construction applied m times to the
// scheme of `ideal` (projective dimension `dim`): for each batch, adjoin
// the (r - j + 2)-minors of the Jacobian of the generators stacked over
// dim - j + 2 fresh random linear forms, keeping only minors that use all
// of the linear-form rows.  j = 0 or m = 0 returns the ideal unchanged.
IdealP polar_power_equations(const IdealP& ideal, int dim, int j, int m,
                             RandomStream& rng);

// Degree of one descriptor's intersection class.  `divisors[i]` must
// already contain the variety generators.  Draws fresh randomness per
// attempt; after `retries` extra attempts with the wrong dimension the
// genericity error propagates.  An empty intersection has degree 0.
// `attempts_used` (optional) reports how many retries were consumed.
long long measure_descriptor(const IdealP& ideal,
                             const std::vector<IdealP>& divisors,
                             const PolarDescriptor& descriptor, int n,
                             const MeasureOptions& options,
                             int* extra_attempts = nullptr);

// deg [P_j(X)] for j = 0..n.
std::vector<long long> polar_class_degrees(const IdealP& ideal, int n,
                                           const MeasureOptions& options);

// Measures every requested descriptor; with options.jobs > 1 the
// descriptors are measured concurrently (results are independent of the
// schedule because each descriptor derives its own random stream).
DegreeTable polar_product_table(const IdealP& ideal,
                                const std::vector<IdealP>& divisors,
                                const std::set<PolarDescriptor>& wanted,
                                int n, const MeasureOptions& options);

// All products of total codimension <= n: the index set of the product
// algorithm.
std::set<PolarDescriptor> full_index_set(int n, int s);

// (dim, degree) of the projective dual from the polar degrees, via the
// defect: the last j with deg P_j != 0 determines dual dimension
// r - 1 - (n - j); its polar degree is the dual degree.  All zero (a
// linear space) has no biduality data and is rejected.
std::pair<int, long long> dual_stats(const std::vector<long long>& degrees,
                                     int r);

// Sum of the polar degrees.
long long ed_degree(const std::vector<long long>& degrees);

// True when every subset of the divisors meets X in the expected
// codimension (empty intersections allowed).
bool check_proper_intersection(const IdealP& ideal,
                               const std::vector<IdealP>& divisors, int n);

}  // namespace npc
