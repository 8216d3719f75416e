#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "error.hpp"

namespace npc {

// Power product in a fixed number of variables.  Exponents are dense and
// non-negative; total degree is cached.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int32_t> exps) : e_(std::move(exps)) {
    deg_ = std::accumulate(e_.begin(), e_.end(), int32_t{0});
  }
  static Monomial one(int nvars) {
    return Monomial(std::vector<int32_t>(nvars, 0));
  }
  static Monomial var(int i, int nvars, int32_t power = 1) {
    std::vector<int32_t> e(nvars, 0);
    e[i] = power;
    return Monomial(std::move(e));
  }

  int nvars() const { return static_cast<int>(e_.size()); }
  int32_t degree() const { return deg_; }
  int32_t operator[](int i) const { return e_[i]; }
  const std::vector<int32_t>& exps() const { return e_; }
  bool is_one() const { return deg_ == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<int32_t> e(a.e_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = a.e_[i] + b.e_[i];
    Monomial m;
    m.e_ = std::move(e);
    m.deg_ = a.deg_ + b.deg_;
    return m;
  }

  bool divides(const Monomial& b) const {
    if (deg_ > b.deg_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > b.e_[i]) return false;
    return true;
  }

  // b / a, defined only when a | b.
  friend Monomial quotient(const Monomial& b, const Monomial& a) {
    std::vector<int32_t> e(a.e_.size());
    for (size_t i = 0; i < e.size(); ++i) {
      e[i] = b.e_[i] - a.e_[i];
      if (e[i] < 0) throw internal_error("monomial quotient not defined");
    }
    Monomial m;
    m.e_ = std::move(e);
    m.deg_ = b.deg_ - a.deg_;
    return m;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    std::vector<int32_t> e(a.e_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.e_[i], b.e_[i]);
    return Monomial(std::move(e));
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e_.size(); ++i)
      if (a.e_[i] > 0 && b.e_[i] > 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.e_ == b.e_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }

 private:
  std::vector<int32_t> e_;
  int32_t deg_ = 0;
};

// Graded reverse lexicographic comparison restricted to variables
// [lo, hi).  Returns <0 if a<b, 0 if equal, >0 if a>b.
inline int degrevlex_cmp(const std::vector<int32_t>& a,
                         const std::vector<int32_t>& b, int lo, int hi) {
  int32_t da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i) {
    int32_t d = a[i] - b[i];
    if (d != 0) return d > 0 ? -1 : 1;  // bigger tail exponent is smaller
  }
  return 0;
}

// Monomial order: plain degrevlex, or a two-block elimination order whose
// first `block` variables dominate (degrevlex within each block).
struct OrderSpec {
  enum Kind { kDegrevlex, kBlock };
  Kind kind = kDegrevlex;
  int block = 0;

  static OrderSpec degrevlex() { return {kDegrevlex, 0}; }
  static OrderSpec elimination(int block) { return {kBlock, block}; }

  int cmp(const Monomial& a, const Monomial& b) const {
    const auto& ea = a.exps();
    const auto& eb = b.exps();
    int n = static_cast<int>(ea.size());
    if (kind == kDegrevlex) return degrevlex_cmp(ea, eb, 0, n);
    int c = degrevlex_cmp(ea, eb, 0, block);
    if (c != 0) return c;
    return degrevlex_cmp(ea, eb, block, n);
  }
  bool less(const Monomial& a, const Monomial& b) const {
    return cmp(a, b) < 0;
  }
  bool operator==(const OrderSpec& o) const {
    return kind == o.kind && (kind == kDegrevlex || block == o.block);
  }
};

}  // namespace npc
