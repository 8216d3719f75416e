#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "polar.hpp"

namespace npc {

// Symbol universe for the intersection calculus on an n-fold X in P^r
// with s marked divisors: the hyperplane class H, Chern classes c_j of
// T_X, divisor classes D_i, pushed-forward divisor Chern classes
// d_(j,i) = f_* c_(j-1)(T_(D_i)), and the polar classes Px_j = [P_j(X)],
// Pd_(l,i) = f_* [P_l(D_i)].  Coefficients are rational polynomials in
// the divisor multipliers a_1..a_s.
class ClassAlgebra {
 public:
  ClassAlgebra(int n, int s);

  int n() const { return n_; }
  int s() const { return s_; }
  int nsym() const { return static_cast<int>(weight_.size()); }
  int weight(int sym) const { return weight_[sym]; }

  int id_H() const { return 0; }
  int id_c(int j) const { return 1 + (j - 1); }
  int id_D(int i) const { return 1 + n_ + i; }
  int id_d(int j, int i) const { return 1 + n_ + s_ + i * n_ + (j - 1); }
  int id_Px(int j) const { return 1 + n_ + s_ + s_ * n_ + (j - 1); }
  int id_Pd(int l, int i) const {
    return 1 + 2 * n_ + s_ + s_ * n_ + i * n_ + l;
  }

  bool is_c(int sym) const { return sym >= 1 && sym <= n_; }
  bool is_D(int sym) const { return sym > n_ && sym <= n_ + s_; }
  bool is_d(int sym) const {
    return sym > n_ + s_ && sym <= n_ + s_ + s_ * n_;
  }
  bool is_Px(int sym) const {
    return sym > n_ + s_ + s_ * n_ && sym <= 2 * n_ + s_ + s_ * n_;
  }
  bool is_Pd(int sym) const { return sym > 2 * n_ + s_ + s_ * n_; }

  // Inverses of the id maps, valid when the corresponding is_* holds.
  int c_index(int sym) const { return sym; }                  // j
  int D_index(int sym) const { return sym - 1 - n_; }         // i
  int d_index_j(int sym) const { return (sym - 1 - n_ - s_) % n_ + 1; }
  int d_index_i(int sym) const { return (sym - 1 - n_ - s_) / n_; }
  int Px_index(int sym) const { return sym - n_ - s_ - s_ * n_; }  // j
  int Pd_index_l(int sym) const {
    return (sym - 1 - 2 * n_ - s_ - s_ * n_) % n_;
  }
  int Pd_index_i(int sym) const {
    return (sym - 1 - 2 * n_ - s_ - s_ * n_) / n_;
  }

  std::string sym_name(int sym,
                       const std::vector<std::string>& divisor_names) const;

  const RingPtr& coeff_ring() const { return aring_; }

 private:
  int n_, s_;
  std::vector<int> weight_;
  RingPtr aring_;
};

using ClassMono = std::vector<uint8_t>;

// Weight-graded commutative polynomial in the algebra's symbols,
// truncated beyond weight n (higher classes vanish on an n-fold).
class GradedClass {
 public:
  explicit GradedClass(const ClassAlgebra* alg) : alg_(alg) {}
  static GradedClass zero(const ClassAlgebra& alg) { return GradedClass(&alg); }
  static GradedClass one(const ClassAlgebra& alg);
  static GradedClass symbol(const ClassAlgebra& alg, int sym);

  const ClassAlgebra& alg() const { return *alg_; }
  const std::map<ClassMono, PolyQ>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  int mono_weight(const ClassMono& m) const;

  void add_term(const ClassMono& m, const PolyQ& coeff);

  friend GradedClass operator+(const GradedClass& a, const GradedClass& b);
  friend GradedClass operator-(const GradedClass& a, const GradedClass& b);
  friend GradedClass operator*(const GradedClass& a, const GradedClass& b);
  friend bool operator==(const GradedClass& a, const GradedClass& b) {
    return a.t_ == b.t_;
  }

  GradedClass scaled(const Rational& c) const;
  GradedClass scaled(const PolyQ& c) const;
  GradedClass weight_part(int w) const;

 private:
  const ClassAlgebra* alg_;
  std::map<ClassMono, PolyQ> t_;
};

// Exact value of a polynomial with rational coefficients in the divisor
// multipliers; the Euler characteristic as a function of a_1..a_s.
struct ChiPolynomial {
  int s = 0;
  std::vector<std::string> var_names;
  std::map<std::vector<int>, Rational> coeff;

  Rational eval(const std::vector<Rational>& a) const;
  std::string pretty() const;
};

long long binomial(int n, int k);

// Newton power sums p_1..p_n of the Chern roots as polynomials in the
// c_j; index 0 is an unused placeholder.
std::vector<GradedClass> chern_power_sums(const ClassAlgebra& alg);

// Todd class of T_X through weight n, a polynomial in the c_j.
GradedClass todd_class(const ClassAlgebra& alg);

// exp(a_1 D_1 + ... + a_s D_s) through weight n.
GradedClass chern_character(const ClassAlgebra& alg);

// Rewrites every divisor power D_i^k through the adjunction relation
//   d_(k,i) = sum_(j=1..k) (-1)^(j+1) c_(k-j) D_i^j
// so the result involves each d_(j,i) at most linearly and no D_i at all.
GradedClass eliminate_divisor_powers(const GradedClass& g);

// c_j and d_(j,i) in polar language:
//   c_j     -> sum_i (-1)^i binom(n-i+1, j-i) H^(j-i) Px_i
//   d_(j,i) -> sum_l (-1)^l binom(n-l, j-1-l) H^(j-1-l) Pd_(l,i)
GradedClass polar_substitution(const GradedClass& g);

// The inverse rewriting (same coefficient family); polar_substitution and
// chern_from_polar compose to the identity in both directions.
GradedClass chern_from_polar(const GradedClass& g);

// Monomial in H, Px, Pd (at most one Pd per divisor) -> measurement
// descriptor.  H powers carry no information beyond the codimension.
PolarDescriptor descriptor_of(const ClassAlgebra& alg, const ClassMono& m);

// Descriptors whose degrees the chi assembly will look up.
std::set<PolarDescriptor> plan_needed_descriptors(int n, int s);

// deg of a monomial in {H, c, D, d} of weight <= n under the measured
// table: eliminate divisor powers, pass to polar language, sum table
// degrees.  The result is provably an integer; a fractional sum means the
// table is inconsistent.
long long chern_monomial_degree(const ClassAlgebra& alg, const ClassMono& m,
                                const DegreeTable& table);

// The descriptors chern_monomial_degree would look up for this monomial.
std::set<PolarDescriptor> monomial_descriptor_support(const ClassAlgebra& alg,
                                                      const ClassMono& m);

// chi(X, a_1 D_1 + ... + a_s D_s) assembled from measured degrees.
ChiPolynomial assemble_chi(const DegreeTable& table);

// Monomials reported alongside chi: H^n, the c-monomials of the Todd
// supports, each d_(j,i) against the complementary Todd support, and the
// weight-n divisor powers.
struct ChernTableEntry {
  std::string label;
  ClassMono mono;
};
std::vector<ChernTableEntry> chern_table_layout(
    const ClassAlgebra& alg, const std::vector<std::string>& divisor_names);

// Surfaces with one divisor satisfy chi(aD) = aD(aD - K)/2 + chi(O);
// evaluates that closed form from the same table.
Rational surface_shortcut(const DegreeTable& table, const Rational& a);

// Compares the shortcut with the assembled chi at small integer points.
bool surface_shortcut_check(const DegreeTable& table);

}  // namespace npc
