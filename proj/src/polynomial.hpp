#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "fp.hpp"
#include "rational.hpp"
#include "ring.hpp"

namespace npc {

template <class K>
inline bool coeff_is_zero(const K& c) {
  if constexpr (std::is_same_v<K, Fp>)
    return c.is_zero();
  else
    return c == 0;
}

template <class K>
inline K coeff_one(const RingPtr& ring) {
  if constexpr (std::is_same_v<K, Fp>)
    return Fp(1, ring->prime());
  else
    return Rational(1);
}

template <class K>
inline K coeff_from_int(long long n, const RingPtr& ring) {
  if constexpr (std::is_same_v<K, Fp>)
    return Fp::from_int(n, ring->prime());
  else
    return Rational(n);
}

template <class K>
struct Term {
  Monomial mon;
  K coeff;
};

// Multivariate polynomial with terms kept strictly descending in the
// ring's monomial order; no zero coefficients are stored.
template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }

  static Poly constant(RingPtr ring, K c) {
    Poly p(ring);
    if (!coeff_is_zero(c))
      p.terms_.push_back({Monomial::one(ring->nvars()), std::move(c)});
    return p;
  }

  static Poly variable(RingPtr ring, int i) {
    Poly p(ring);
    p.terms_.push_back(
        {Monomial::var(i, ring->nvars()), coeff_one<K>(ring)});
    return p;
  }

  static Poly term(RingPtr ring, Monomial m, K c) {
    Poly p(ring);
    if (!coeff_is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  // Collects arbitrary (monomial, coeff) pairs: sorts, merges, drops zeros.
  static Poly collect(RingPtr ring, std::vector<Term<K>> raw) {
    const OrderSpec& o = ring->order();
    std::sort(raw.begin(), raw.end(),
              [&o](const Term<K>& a, const Term<K>& b) {
                return o.cmp(a.mon, b.mon) > 0;
              });
    Poly p(ring);
    for (auto& t : raw) {
      if (!p.terms_.empty() && p.terms_.back().mon == t.mon) {
        p.terms_.back().coeff = p.terms_.back().coeff + t.coeff;
      } else {
        p.terms_.push_back(std::move(t));
      }
      if (!p.terms_.empty() && coeff_is_zero(p.terms_.back().coeff))
        p.terms_.pop_back();
    }
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term<K>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t nterms() const { return terms_.size(); }

  const Term<K>& lead() const {
    if (terms_.empty()) throw value_error("lead term of zero polynomial");
    return terms_.front();
  }

  int32_t total_degree() const {
    int32_t d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mon.degree());
    return d;  // -1 for the zero polynomial
  }

  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mon.degree() != terms_.front().mon.degree()) return false;
    return true;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mon == b.terms_[i].mon) ||
          !(a.terms_[i].coeff == b.terms_[i].coeff))
        return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    return merge(a, b, false);
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    return merge(a, b, true);
  }
  friend Poly operator-(const Poly& a) {
    Poly r(a.ring_);
    r.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_) r.terms_.push_back({t.mon, -t.coeff});
    return r;
  }

  Poly scaled(const K& c) const {
    Poly r(ring_);
    if (coeff_is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      K p = t.coeff * c;
      if (!coeff_is_zero(p)) r.terms_.push_back({t.mon, std::move(p)});
    }
    return r;
  }

  // c * m * (*this)
  Poly mul_term(const K& c, const Monomial& m) const {
    Poly r(ring_);
    if (coeff_is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      K p = t.coeff * c;
      if (!coeff_is_zero(p)) r.terms_.push_back({t.mon * m, std::move(p)});
    }
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    require_compatible(a.ring_, b.ring_);
    if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
    const OrderSpec& o = a.ring_->order();
    auto desc = [&o](const Monomial& x, const Monomial& y) {
      return o.cmp(x, y) > 0;
    };
    std::map<Monomial, K, decltype(desc)> acc(desc);
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_) {
        Monomial m = ta.mon * tb.mon;
        K c = ta.coeff * tb.coeff;
        auto it = acc.find(m);
        if (it == acc.end()) {
          if (!coeff_is_zero(c)) acc.emplace(std::move(m), std::move(c));
        } else {
          it->second = it->second + c;
          if (coeff_is_zero(it->second)) acc.erase(it);
        }
      }
    Poly r(a.ring_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) r.terms_.push_back({m, c});
    return r;
  }

  Poly pow(int e) const {
    if (e < 0) throw value_error("negative polynomial power");
    Poly r = constant(ring_, coeff_one<K>(ring_));
    Poly base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = e > 1 ? base * base : base;
      e >>= 1;
    }
    return r;
  }

  // *this -= c * m * g.  The workhorse of polynomial reduction.
  void sub_scaled(const K& c, const Monomial& m, const Poly& g) {
    *this = merge(*this, g.mul_term(c, m), true);
  }

 private:
  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    require_compatible(a.ring_, b.ring_);
    const OrderSpec& o = a.ring_->order();
    Poly r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      int c = o.cmp(a.terms_[i].mon, b.terms_[j].mon);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        const auto& t = b.terms_[j++];
        r.terms_.push_back({t.mon, subtract ? K(-t.coeff) : t.coeff});
      } else {
        K s = subtract ? K(a.terms_[i].coeff - b.terms_[j].coeff)
                       : K(a.terms_[i].coeff + b.terms_[j].coeff);
        if (!coeff_is_zero(s)) r.terms_.push_back({a.terms_[i].mon, s});
        ++i;
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) {
      const auto& t = b.terms_[j];
      r.terms_.push_back({t.mon, subtract ? K(-t.coeff) : t.coeff});
    }
    return r;
  }

  RingPtr ring_;
  std::vector<Term<K>> terms_;
};

using PolyQ = Poly<Rational>;
using PolyP = Poly<Fp>;

template <class K>
Poly<K> differentiate(const Poly<K>& p, int var) {
  if (var < 0 || var >= p.ring()->nvars())
    throw value_error("differentiate: no such variable");
  std::vector<Term<K>> out;
  for (const auto& t : p.terms()) {
    int32_t e = t.mon[var];
    if (e == 0) continue;
    std::vector<int32_t> exps = t.mon.exps();
    exps[var] -= 1;
    K c = t.coeff * coeff_from_int<K>(e, p.ring());
    if (!coeff_is_zero(c)) out.push_back({Monomial(std::move(exps)), c});
  }
  return Poly<K>::collect(p.ring(), std::move(out));
}

// p with variable i replaced by images[i]; images live in `target`.
template <class K>
Poly<K> substitute(const Poly<K>& p, const RingPtr& target,
                   const std::vector<Poly<K>>& images) {
  if (static_cast<int>(images.size()) != p.ring()->nvars())
    throw value_error("substitute: one image per variable required");
  Poly<K> acc = Poly<K>::zero(target);
  for (const auto& t : p.terms()) {
    Poly<K> prod = Poly<K>::constant(target, t.coeff);
    for (int v = 0; v < p.ring()->nvars(); ++v)
      if (t.mon[v] > 0) prod = prod * images[v].pow(t.mon[v]);
    acc = acc + prod;
  }
  return acc;
}

inline PolyP make_monic(const PolyP& p) {
  if (p.is_zero()) return p;
  return p.scaled(p.lead().coeff.inv());
}

// Coefficient-wise reduction Q -> GF(p).  Fails if p divides any
// denominator; terms whose numerator is divisible by p disappear.
inline PolyP reduce_mod_p(const PolyQ& p, uint32_t prime) {
  RingPtr src = p.ring();
  RingPtr dst =
      Ring::make(src->vars(), Domain::Fp, prime, src->order());
  std::vector<Term<Fp>> out;
  for (const auto& t : p.terms()) {
    Fp c = reduce_rational(t.coeff, prime);
    if (!c.is_zero()) out.push_back({t.mon, c});
  }
  return PolyP::collect(dst, std::move(out));
}

inline PolyP reduce_mod_p(const PolyQ& p, const RingPtr& dst) {
  if (dst->domain() != Domain::Fp)
    throw internal_error("reduce_mod_p: target ring is not GF(p)");
  std::vector<Term<Fp>> out;
  for (const auto& t : p.terms()) {
    Fp c = reduce_rational(t.coeff, dst->prime());
    if (!c.is_zero()) out.push_back({t.mon, c});
  }
  return PolyP::collect(dst, std::move(out));
}

template <class K>
std::string coeff_str(const K& c) {
  if constexpr (std::is_same_v<K, Fp>)
    return c.str();
  else
    return rat_to_string(c);
}

// Canonical text form: terms in ring order, explicit '*' and '^'.
// GF(p) coefficients print as representatives in [0, p).
template <class K>
std::string to_string(const Poly<K>& p) {
  if (p.is_zero()) return "0";
  const auto& vars = p.ring()->vars();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    K c = t.coeff;
    bool neg = false;
    if constexpr (std::is_same_v<K, Rational>) {
      if (c < 0) {
        neg = true;
        c = -c;
      }
    }
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string cs = coeff_str(c);
    bool wrote_coeff = false;
    if (t.mon.is_one()) {
      out += cs;
      continue;
    }
    if (cs != "1") {
      out += cs;
      wrote_coeff = true;
    }
    for (int v = 0; v < t.mon.nvars(); ++v) {
      if (t.mon[v] == 0) continue;
      if (wrote_coeff) out += "*";
      out += vars[v];
      if (t.mon[v] > 1) out += "^" + std::to_string(t.mon[v]);
      wrote_coeff = true;
    }
  }
  return out;
}

}  // namespace npc
