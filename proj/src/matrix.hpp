#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace npc {

// Dense matrix of polynomials, row major.
template <class K>
struct PolyMatrix {
  RingPtr ring;
  int nrows = 0;
  int ncols = 0;
  std::vector<Poly<K>> a;

  PolyMatrix(RingPtr r, int rows, int cols)
      : ring(std::move(r)), nrows(rows), ncols(cols) {
    a.assign(static_cast<size_t>(rows) * cols, Poly<K>::zero(ring));
  }

  Poly<K>& at(int i, int j) { return a[static_cast<size_t>(i) * ncols + j]; }
  const Poly<K>& at(int i, int j) const {
    return a[static_cast<size_t>(i) * ncols + j];
  }
};

// Rows are the gradients of the generators, in order.  No generators give
// a 0 x nvars matrix.
template <class K>
PolyMatrix<K> jacobian(const std::vector<Poly<K>>& gens, const RingPtr& ring) {
  PolyMatrix<K> m(ring, static_cast<int>(gens.size()), ring->nvars());
  for (size_t i = 0; i < gens.size(); ++i) {
    require_compatible(gens[i].ring(), ring);
    for (int j = 0; j < ring->nvars(); ++j)
      m.at(static_cast<int>(i), j) = differentiate(gens[i], j);
  }
  return m;
}

namespace detail {

// Laplace expansion along the first live row with all subdeterminants
// memoized on (row set, column set).  The memo is shared across every
// minor of one enumeration, which is what makes large required-row
// families affordable: sub-blocks of the constant rows are computed once.
template <class K>
class DetCache {
 public:
  explicit DetCache(const PolyMatrix<K>& m) : m_(m) {}

  const Poly<K>& det(uint64_t rmask, uint64_t cmask) {
    auto key = std::make_pair(rmask, cmask);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Poly<K> result = Poly<K>::zero(m_.ring);
    int r0 = std::countr_zero(rmask);
    uint64_t rrest = rmask & (rmask - 1);
    if (rrest == 0) {
      int c0 = std::countr_zero(cmask);
      result = m_.at(r0, c0);
    } else {
      int sign = 1;
      uint64_t cols = cmask;
      while (cols) {
        int c = std::countr_zero(cols);
        cols &= cols - 1;
        const Poly<K>& entry = m_.at(r0, c);
        if (!entry.is_zero()) {
          const Poly<K>& sub = det(rrest, cmask & ~(uint64_t(1) << c));
          if (!sub.is_zero()) {
            Poly<K> prod = entry * sub;
            result = sign > 0 ? result + prod : result - prod;
          }
        }
        sign = -sign;
      }
    }
    return memo_.emplace(key, std::move(result)).first->second;
  }

 private:
  const PolyMatrix<K>& m_;
  std::map<std::pair<uint64_t, uint64_t>, Poly<K>> memo_;
};

inline bool next_combination(std::vector<int>& idx, int n) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - (k - i)) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

// All k x k minors whose row set contains `required_rows`.  Identically
// zero determinants are dropped; the order (row sets outer, column sets
// inner, both lexicographic) is deterministic.
template <class K>
std::vector<Poly<K>> minors_with_required_rows(
    const PolyMatrix<K>& m, int k, const std::vector<int>& required_rows) {
  if (k < 1 || k > m.nrows || k > m.ncols)
    throw value_error("minor size " + std::to_string(k) +
                      " out of range for a " + std::to_string(m.nrows) + "x" +
                      std::to_string(m.ncols) + " matrix");
  if (m.nrows > 63 || m.ncols > 63)
    throw value_error("matrix too large for minor enumeration");
  uint64_t req = 0;
  for (int r : required_rows) {
    if (r < 0 || r >= m.nrows)
      throw value_error("required row out of range");
    req |= uint64_t(1) << r;
  }
  int nreq = std::popcount(req);
  std::vector<Poly<K>> out;
  if (nreq > k) return out;

  std::vector<int> free_rows;
  for (int r = 0; r < m.nrows; ++r)
    if (!(req & (uint64_t(1) << r))) free_rows.push_back(r);

  detail::DetCache<K> cache(m);
  int pick = k - nreq;
  std::vector<int> rsel(pick);
  for (int i = 0; i < pick; ++i) rsel[i] = i;
  bool rows_left = true;
  while (rows_left) {
    uint64_t rmask = req;
    for (int i : rsel) rmask |= uint64_t(1) << free_rows[i];

    std::vector<int> csel(k);
    for (int i = 0; i < k; ++i) csel[i] = i;
    bool cols_left = true;
    while (cols_left) {
      uint64_t cmask = 0;
      for (int c : csel) cmask |= uint64_t(1) << c;
      const Poly<K>& d = cache.det(rmask, cmask);
      if (!d.is_zero()) out.push_back(d);
      cols_left = detail::next_combination(csel, m.ncols);
    }
    if (pick == 0) break;
    rows_left = detail::next_combination(rsel, static_cast<int>(free_rows.size()));
  }
  return out;
}

}  // namespace npc
