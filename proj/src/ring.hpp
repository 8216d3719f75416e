#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "error.hpp"
#include "fp.hpp"
#include "monomial.hpp"

namespace npc {

enum class Domain { Q, Fp };

// Polynomial ring: named variables, coefficient domain, monomial order.
// Immutable; shared by the polynomials living in it.
class Ring {
 public:
  static std::shared_ptr<const Ring> make(std::vector<std::string> vars,
                                          Domain domain, uint32_t prime,
                                          OrderSpec order) {
    if (domain == Domain::Fp) {
      if (!is_prime_u32(prime) || prime < 3 || prime > (1u << 31))
        throw value_error("modulus " + std::to_string(prime) +
                          " is not an odd prime below 2^31");
    }
    std::map<std::string, int> index;
    for (size_t i = 0; i < vars.size(); ++i) {
      if (vars[i].empty()) throw parse_error("empty variable name");
      if (!index.emplace(vars[i], static_cast<int>(i)).second)
        throw parse_error("duplicate variable name '" + vars[i] + "'");
    }
    auto r = std::shared_ptr<Ring>(new Ring());
    r->vars_ = std::move(vars);
    r->index_ = std::move(index);
    r->domain_ = domain;
    r->prime_ = domain == Domain::Fp ? prime : 0;
    r->order_ = order;
    return r;
  }

  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var_name(int i) const { return vars_[i]; }
  int var_index(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
  }
  Domain domain() const { return domain_; }
  uint32_t prime() const { return prime_; }
  const OrderSpec& order() const { return order_; }

  bool same_structure(const Ring& o) const {
    return vars_ == o.vars_ && domain_ == o.domain_ && prime_ == o.prime_ &&
           order_ == o.order_;
  }

 private:
  Ring() = default;
  std::vector<std::string> vars_;
  std::map<std::string, int> index_;
  Domain domain_ = Domain::Q;
  uint32_t prime_ = 0;
  OrderSpec order_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline void require_compatible(const RingPtr& a, const RingPtr& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !a->same_structure(*b))
    throw internal_error("operands live in different rings");
}

}  // namespace npc
