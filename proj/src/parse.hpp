#pragma once

#include <cctype>
#include <string>

#include "polynomial.hpp"

namespace npc {

// Recursive-descent parser for the input polynomial syntax:
//
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coef? ('*'? factor)*
//   factor := var ('^' nat)? | '(' poly ')'
//   coef   := int | int '/' int
//
// '*' between factors is optional, whitespace is insignificant, variables
// must be declared in the ring.  Over GF(p) integer literals are reduced
// and fractions use the inverse mod p.
namespace detail {

template <class K>
class PolyParser {
 public:
  PolyParser(const std::string& text, RingPtr ring)
      : s_(text), ring_(std::move(ring)) {}

  Poly<K> run() {
    skip_ws();
    if (eof()) fail("empty polynomial");
    Poly<K> p = parse_poly();
    skip_ws();
    if (!eof()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error("at position " + std::to_string(pos_ + 1) + ": " + msg);
  }

  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return eof() ? '\0' : s_[pos_]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() {
    skip_ws();
    return std::isdigit(static_cast<unsigned char>(peek()));
  }
  bool at_ident() {
    skip_ws();
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  BigInt parse_nat() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a number");
    std::string digits;
    while (!eof() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      digits += s_[pos_++];
    return BigInt(digits);
  }

  std::string parse_ident() {
    skip_ws();
    std::string name;
    name += s_[pos_++];
    while (!eof()) {
      char c = s_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
        name += s_[pos_++];
      else
        break;
    }
    return name;
  }

  K coeff_from_fraction(const BigInt& num, const BigInt& den) {
    if (den == 0) fail("zero denominator");
    if constexpr (std::is_same_v<K, Fp>) {
      return reduce_rational(Rational(num, den), ring_->prime());
    } else {
      return Rational(num, den);
    }
  }

  Poly<K> parse_poly() {
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    Poly<K> acc = parse_term(neg);
    for (;;) {
      skip_ws();
      if (accept('-'))
        acc = acc + parse_term(true);
      else if (accept('+'))
        acc = acc + parse_term(false);
      else
        break;
    }
    return acc;
  }

  Poly<K> parse_term(bool negate) {
    Poly<K> acc;
    bool have = false;
    if (at_digit()) {
      BigInt num = parse_nat();
      BigInt den = 1;
      size_t save = pos_;
      if (accept('/')) {
        if (at_digit())
          den = parse_nat();
        else
          pos_ = save;  // '/' belongs to something else; not ours
      }
      acc = Poly<K>::constant(ring_, coeff_from_fraction(num, den));
      have = true;
    }
    for (;;) {
      skip_ws();
      bool star = false;
      size_t save = pos_;
      if (accept('*')) star = true;
      if (at_ident() || peek() == '(') {
        Poly<K> f = parse_factor();
        acc = have ? acc * f : f;
        have = true;
      } else {
        if (star) pos_ = save;  // dangling '*' is an error at outer level
        break;
      }
    }
    if (!have) fail("expected a term");
    skip_ws();
    if (peek() == '*') fail("expected a factor after '*'");
    if (negate) return -acc;
    return acc;
  }

  Poly<K> parse_factor() {
    skip_ws();
    if (accept('(')) {
      Poly<K> inner = parse_poly();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    size_t at = pos_;
    std::string name = parse_ident();
    int v = ring_->var_index(name);
    if (v < 0) {
      pos_ = at;
      fail("unknown variable '" + name + "'");
    }
    int32_t e = 1;
    if (accept('^')) {
      BigInt n = parse_nat();
      if (n > 100000) fail("exponent too large");
      e = n.convert_to<int32_t>();
    }
    return Poly<K>::term(ring_, Monomial::var(v, ring_->nvars(), e),
                         coeff_one<K>(ring_));
  }

  const std::string& s_;
  size_t pos_ = 0;
  RingPtr ring_;
};

}  // namespace detail

template <class K>
Poly<K> parse_polynomial(const std::string& text, const RingPtr& ring) {
  if ((ring->domain() == Domain::Fp) != std::is_same_v<K, Fp>)
    throw internal_error("parse_polynomial: coefficient type vs ring domain");
  return detail::PolyParser<K>(text, ring).run();
}

}  // namespace npc
