#include "hrr.hpp"

#include <algorithm>

namespace npc {

namespace {

std::vector<std::string> multiplier_names(int s) {
  if (s > 26) throw value_error("more than 26 divisors are not supported");
  std::vector<std::string> names;
  for (int i = 0; i < s; ++i) names.push_back(std::string(1, 'a' + i));
  return names;
}

}  // namespace

ClassAlgebra::ClassAlgebra(int n, int s) : n_(n), s_(s) {
  if (n < 1) throw value_error("class algebra needs dimension >= 1");
  if (s < 0) throw value_error("negative divisor count");
  weight_.assign(1 + 2 * n + s + 2 * s * n, 0);
  weight_[id_H()] = 1;
  for (int j = 1; j <= n; ++j) weight_[id_c(j)] = j;
  for (int i = 0; i < s; ++i) weight_[id_D(i)] = 1;
  for (int i = 0; i < s; ++i)
    for (int j = 1; j <= n; ++j) weight_[id_d(j, i)] = j;
  for (int j = 1; j <= n; ++j) weight_[id_Px(j)] = j;
  for (int i = 0; i < s; ++i)
    for (int l = 0; l < n; ++l) weight_[id_Pd(l, i)] = l + 1;
  aring_ = Ring::make(multiplier_names(s), Domain::Q, 0,
                      OrderSpec::degrevlex());
}

std::string ClassAlgebra::sym_name(
    int sym, const std::vector<std::string>& divisor_names) const {
  auto dname = [&](int i) {
    return i < static_cast<int>(divisor_names.size())
               ? divisor_names[i]
               : "D" + std::to_string(i + 1);
  };
  if (sym == id_H()) return "H";
  if (is_c(sym)) return "c" + std::to_string(c_index(sym));
  if (is_D(sym)) return dname(D_index(sym));
  if (is_d(sym))
    return "d" + std::to_string(d_index_j(sym)) + "(" + dname(d_index_i(sym)) +
           ")";
  if (is_Px(sym)) return "[P" + std::to_string(Px_index(sym)) + "(X)]";
  if (is_Pd(sym))
    return "f*[P" + std::to_string(Pd_index_l(sym)) + "(" +
           dname(Pd_index_i(sym)) + ")]";
  throw internal_error("unknown symbol id");
}

GradedClass GradedClass::one(const ClassAlgebra& alg) {
  GradedClass g(&alg);
  g.add_term(ClassMono(alg.nsym(), 0),
             PolyQ::constant(alg.coeff_ring(), Rational(1)));
  return g;
}

GradedClass GradedClass::symbol(const ClassAlgebra& alg, int sym) {
  GradedClass g(&alg);
  ClassMono m(alg.nsym(), 0);
  m[sym] = 1;
  g.add_term(m, PolyQ::constant(alg.coeff_ring(), Rational(1)));
  return g;
}

int GradedClass::mono_weight(const ClassMono& m) const {
  int w = 0;
  for (int i = 0; i < alg_->nsym(); ++i) w += m[i] * alg_->weight(i);
  return w;
}

void GradedClass::add_term(const ClassMono& m, const PolyQ& coeff) {
  if (coeff.is_zero()) return;
  if (mono_weight(m) > alg_->n()) return;  // vanishes on an n-fold
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, coeff);
  } else {
    it->second = it->second + coeff;
    if (it->second.is_zero()) t_.erase(it);
  }
}

GradedClass operator+(const GradedClass& a, const GradedClass& b) {
  GradedClass r = a;
  for (const auto& [m, c] : b.t_) r.add_term(m, c);
  return r;
}

GradedClass operator-(const GradedClass& a, const GradedClass& b) {
  GradedClass r = a;
  for (const auto& [m, c] : b.t_) r.add_term(m, -c);
  return r;
}

GradedClass operator*(const GradedClass& a, const GradedClass& b) {
  GradedClass r(a.alg_);
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) {
      ClassMono m(ma.size());
      for (size_t i = 0; i < m.size(); ++i)
        m[i] = static_cast<uint8_t>(ma[i] + mb[i]);
      r.add_term(m, ca * cb);
    }
  return r;
}

GradedClass GradedClass::scaled(const Rational& c) const {
  return scaled(PolyQ::constant(alg_->coeff_ring(), c));
}

GradedClass GradedClass::scaled(const PolyQ& c) const {
  GradedClass r(alg_);
  for (const auto& [m, k] : t_) r.add_term(m, k * c);
  return r;
}

GradedClass GradedClass::weight_part(int w) const {
  GradedClass r(alg_);
  for (const auto& [m, c] : t_)
    if (mono_weight(m) == w) r.add_term(m, c);
  return r;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Rational ChiPolynomial::eval(const std::vector<Rational>& a) const {
  if (static_cast<int>(a.size()) != s)
    throw value_error("chi evaluation needs one value per divisor");
  Rational sum = 0;
  for (const auto& [e, c] : coeff) {
    Rational term = c;
    for (int i = 0; i < s; ++i)
      for (int k = 0; k < e[i]; ++k) term *= a[i];
    sum += term;
  }
  return sum;
}

std::string ChiPolynomial::pretty() const {
  if (coeff.empty()) return "0";
  // Exponent-lexicographic order, the same order the coefficient map
  // already carries; keep it so every rendering of chi agrees.
  std::string out;
  bool first = true;
  for (const auto& [e, c] : coeff) {
    Rational v = c;
    bool neg = v < 0;
    if (neg) v = -v;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    bool all_zero = true;
    for (int x : e) all_zero &= x == 0;
    std::string body;
    if (v != 1 || all_zero) body = rat_to_string(v);
    for (int i = 0; i < s; ++i) {
      if (e[i] == 0) continue;
      if (!body.empty()) body += "*";
      body += var_names[i];
      if (e[i] > 1) body += "^" + std::to_string(e[i]);
    }
    out += body;
  }
  return out;
}

// Power sums of the Chern roots via Newton's identity:
//   p_m = sum_(i=1..m-1) (-1)^(i-1) c_i p_(m-i) + (-1)^(m-1) m c_m.
std::vector<GradedClass> chern_power_sums(const ClassAlgebra& alg) {
  int n = alg.n();
  std::vector<GradedClass> p;
  p.push_back(GradedClass::one(alg));  // p_0 unused placeholder
  for (int m = 1; m <= n; ++m) {
    GradedClass pm = GradedClass::zero(alg);
    for (int i = 1; i < m; ++i) {
      GradedClass term = GradedClass::symbol(alg, alg.id_c(i)) * p[m - i];
      pm = (i % 2 == 1) ? pm + term : pm - term;
    }
    GradedClass last =
        GradedClass::symbol(alg, alg.id_c(m)).scaled(Rational(m));
    pm = (m % 2 == 1) ? pm + last : pm - last;
    p.push_back(pm);
  }
  return p;
}

namespace {

GradedClass gc_exp(const GradedClass& e) {
  const ClassAlgebra& alg = e.alg();
  GradedClass sum = GradedClass::one(alg);
  GradedClass power = GradedClass::one(alg);
  Rational factorial = 1;
  for (int k = 1; k <= alg.n(); ++k) {
    power = power * e;
    factorial *= k;
    sum = sum + power.scaled(Rational(1) / factorial);
  }
  return sum;
}

GradedClass gc_pow(const GradedClass& g, int e) {
  GradedClass r = GradedClass::one(g.alg());
  for (int i = 0; i < e; ++i) r = r * g;
  return r;
}

// Coefficients of log(t / (1 - e^(-t))) through degree n.
std::vector<Rational> todd_log_series(int n) {
  // b = (1 - e^(-t)) / t = sum (-1)^k t^k / (k+1)!
  std::vector<Rational> b(n + 1);
  Rational fact = 1;
  for (int k = 0; k <= n; ++k) {
    fact *= k + 1;
    b[k] = Rational((k % 2 == 0) ? 1 : -1) / fact;
  }
  // a = 1 / b
  std::vector<Rational> a(n + 1);
  a[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rational s = 0;
    for (int i = 1; i <= k; ++i) s += b[i] * a[k - i];
    a[k] = -s;
  }
  // lam = log(a) via lam' = a'/a:  k*lam_k = k*a_k - sum_(i<k) i*lam_i a_(k-i)
  std::vector<Rational> lam(n + 1);
  for (int k = 1; k <= n; ++k) {
    Rational s = Rational(k) * a[k];
    for (int i = 1; i < k; ++i) s -= Rational(i) * lam[i] * a[k - i];
    lam[k] = s / k;
  }
  return lam;
}

}  // namespace

GradedClass todd_class(const ClassAlgebra& alg) {
  int n = alg.n();
  std::vector<Rational> lam = todd_log_series(n);
  std::vector<GradedClass> p = chern_power_sums(alg);
  GradedClass e = GradedClass::zero(alg);
  for (int m = 1; m <= n; ++m)
    if (lam[m] != 0) e = e + p[m].scaled(lam[m]);
  return gc_exp(e);
}

GradedClass chern_character(const ClassAlgebra& alg) {
  GradedClass l = GradedClass::zero(alg);
  for (int i = 0; i < alg.s(); ++i)
    l = l + GradedClass::symbol(alg, alg.id_D(i))
                .scaled(PolyQ::variable(alg.coeff_ring(), i));
  return gc_exp(l);
}

GradedClass eliminate_divisor_powers(const GradedClass& g) {
  const ClassAlgebra& alg = g.alg();
  int n = alg.n();
  int s = alg.s();

  // dexp[i][k] = D_i^k rewritten in c and d_(.,i); each term carries
  // exactly one d factor.
  std::vector<std::vector<GradedClass>> dexp(
      s, std::vector<GradedClass>(n + 1, GradedClass::zero(alg)));
  for (int i = 0; i < s; ++i) {
    for (int k = 1; k <= n; ++k) {
      // D^k = (-1)^(k+1) d_k + sum_(j<k) (-1)^(k+j+1) c_(k-j) D^j
      GradedClass acc = GradedClass::symbol(alg, alg.id_d(k, i));
      if (k % 2 == 0) acc = acc.scaled(Rational(-1));
      for (int j = 1; j < k; ++j) {
        GradedClass term =
            GradedClass::symbol(alg, alg.id_c(k - j)) * dexp[i][j];
        acc = ((k + j + 1) % 2 == 0) ? acc + term : acc - term;
      }
      dexp[i][k] = acc;
    }
  }

  GradedClass out = GradedClass::zero(alg);
  for (const auto& [m, coeff] : g.terms()) {
    ClassMono rest = m;
    GradedClass factor = GradedClass::one(alg);
    bool any = false;
    for (int i = 0; i < s; ++i) {
      int e = m[alg.id_D(i)];
      if (e == 0) continue;
      if (e > n) throw internal_error("divisor power beyond the dimension");
      rest[alg.id_D(i)] = 0;
      factor = factor * dexp[i][e];
      any = true;
    }
    if (!any) {
      out.add_term(m, coeff);
      continue;
    }
    GradedClass base(&alg);
    base.add_term(rest, coeff);
    out = out + base * factor;
  }
  return out;
}

namespace {

// Shared machinery: replace selected symbols by classes.
GradedClass substitute_symbols(const GradedClass& g,
                               const std::map<int, GradedClass>& rules) {
  const ClassAlgebra& alg = g.alg();
  std::map<std::pair<int, int>, GradedClass> powers;
  auto rule_power = [&](int sym, int e) -> const GradedClass& {
    auto key = std::make_pair(sym, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    return powers.emplace(key, gc_pow(rules.at(sym), e)).first->second;
  };

  GradedClass out = GradedClass::zero(alg);
  for (const auto& [m, coeff] : g.terms()) {
    ClassMono rest = m;
    GradedClass factor = GradedClass::one(alg);
    bool any = false;
    for (int sym = 0; sym < alg.nsym(); ++sym) {
      if (m[sym] == 0 || !rules.count(sym)) continue;
      factor = factor * rule_power(sym, m[sym]);
      rest[sym] = 0;
      any = true;
    }
    if (!any) {
      out.add_term(m, coeff);
      continue;
    }
    GradedClass base(&alg);
    base.add_term(rest, coeff);
    out = out + base * factor;
  }
  return out;
}

GradedClass h_power_times(const ClassAlgebra& alg, int h, int sym,
                          long long coeff) {
  GradedClass g(&alg);
  ClassMono m(alg.nsym(), 0);
  m[alg.id_H()] = static_cast<uint8_t>(h);
  if (sym >= 0) m[sym] += 1;
  g.add_term(m, PolyQ::constant(alg.coeff_ring(), Rational(coeff)));
  return g;
}

}  // namespace

GradedClass polar_substitution(const GradedClass& g) {
  const ClassAlgebra& alg = g.alg();
  int n = alg.n();
  std::map<int, GradedClass> rules;
  for (int j = 1; j <= n; ++j) {
    GradedClass rhs = GradedClass::zero(alg);
    for (int i = 0; i <= j; ++i) {
      long long b = binomial(n - i + 1, j - i);
      if (b == 0) continue;
      long long c = (i % 2 == 0) ? b : -b;
      rhs = rhs + h_power_times(alg, j - i, i == 0 ? -1 : alg.id_Px(i), c);
    }
    rules.emplace(alg.id_c(j), rhs);
  }
  for (int i = 0; i < alg.s(); ++i)
    for (int j = 1; j <= n; ++j) {
      GradedClass rhs = GradedClass::zero(alg);
      for (int l = 0; l <= j - 1; ++l) {
        long long b = binomial(n - l, j - 1 - l);
        if (b == 0) continue;
        long long c = (l % 2 == 0) ? b : -b;
        rhs = rhs + h_power_times(alg, j - 1 - l, alg.id_Pd(l, i), c);
      }
      rules.emplace(alg.id_d(j, i), rhs);
    }
  return substitute_symbols(g, rules);
}

GradedClass chern_from_polar(const GradedClass& g) {
  const ClassAlgebra& alg = g.alg();
  int n = alg.n();
  std::map<int, GradedClass> rules;
  for (int j = 1; j <= n; ++j) {
    GradedClass rhs = GradedClass::zero(alg);
    for (int i = 0; i <= j; ++i) {
      long long b = binomial(n - i + 1, j - i);
      if (b == 0) continue;
      long long c = (i % 2 == 0) ? b : -b;
      rhs = rhs + h_power_times(alg, j - i, i == 0 ? -1 : alg.id_c(i), c);
    }
    rules.emplace(alg.id_Px(j), rhs);
  }
  for (int i = 0; i < alg.s(); ++i)
    for (int k = 0; k < n; ++k) {
      GradedClass rhs = GradedClass::zero(alg);
      for (int l = 0; l <= k; ++l) {
        long long b = binomial(n - l, k - l);
        if (b == 0) continue;
        long long c = (l % 2 == 0) ? b : -b;
        rhs = rhs + h_power_times(alg, k - l, alg.id_d(l + 1, i), c);
      }
      rules.emplace(alg.id_Pd(k, i), rhs);
    }
  return substitute_symbols(g, rules);
}

PolarDescriptor descriptor_of(const ClassAlgebra& alg, const ClassMono& m) {
  PolarDescriptor d = PolarDescriptor::trivial(alg.n(), alg.s());
  for (int sym = 0; sym < alg.nsym(); ++sym) {
    if (m[sym] == 0) continue;
    if (sym == alg.id_H()) continue;  // absorbed by the degree convention
    if (alg.is_Px(sym)) {
      d.m[alg.Px_index(sym) - 1] += m[sym];
    } else if (alg.is_Pd(sym)) {
      int i = alg.Pd_index_i(sym);
      if (m[sym] > 1 || d.div[i].second != 0)
        throw internal_error(
            "two polar classes of one divisor in a single monomial");
      d.div[i] = {alg.Pd_index_l(sym) + 1, 1};
    } else {
      throw internal_error("descriptor_of: non-polar symbol survives");
    }
  }
  return d;
}

namespace {

GradedClass chi_weight_n_class(const ClassAlgebra& alg) {
  GradedClass full = chern_character(alg) * todd_class(alg);
  GradedClass flat = polar_substitution(eliminate_divisor_powers(full));
  return flat.weight_part(alg.n());
}

}  // namespace

std::set<PolarDescriptor> plan_needed_descriptors(int n, int s) {
  ClassAlgebra alg(n, s);
  std::set<PolarDescriptor> out;
  GradedClass top = chi_weight_n_class(alg);
  for (const auto& [m, coeff] : top.terms()) out.insert(descriptor_of(alg, m));
  return out;
}

long long chern_monomial_degree(const ClassAlgebra& alg, const ClassMono& m,
                                const DegreeTable& table) {
  GradedClass g(&alg);
  g.add_term(m, PolyQ::constant(alg.coeff_ring(), Rational(1)));
  GradedClass flat = polar_substitution(eliminate_divisor_powers(g));
  Rational sum = 0;
  for (const auto& [mono, coeff] : flat.terms()) {
    if (coeff.is_zero()) continue;
    if (coeff.nterms() != 1 || !coeff.lead().mon.is_one())
      throw internal_error("chern monomial with divisor-multiplier content");
    sum += coeff.lead().coeff *
           Rational(table.at(descriptor_of(alg, mono)));
  }
  if (!rat_is_integer(sum))
    throw internal_error("non-integral degree for a chern monomial");
  return to_longlong(rat_num(sum));
}

std::set<PolarDescriptor> monomial_descriptor_support(const ClassAlgebra& alg,
                                                      const ClassMono& m) {
  GradedClass g(&alg);
  g.add_term(m, PolyQ::constant(alg.coeff_ring(), Rational(1)));
  GradedClass flat = polar_substitution(eliminate_divisor_powers(g));
  std::set<PolarDescriptor> out;
  for (const auto& [mono, coeff] : flat.terms())
    if (!coeff.is_zero()) out.insert(descriptor_of(alg, mono));
  return out;
}

ChiPolynomial assemble_chi(const DegreeTable& table) {
  ClassAlgebra alg(table.n, table.s);
  PolyQ acc = PolyQ::zero(alg.coeff_ring());
  GradedClass top = chi_weight_n_class(alg);
  for (const auto& [m, coeff] : top.terms()) {
    long long deg = table.at(descriptor_of(alg, m));
    if (deg == 0) continue;
    acc = acc + coeff.scaled(Rational(deg));
  }
  ChiPolynomial chi;
  chi.s = table.s;
  chi.var_names = alg.coeff_ring()->vars();
  for (const auto& t : acc.terms()) {
    std::vector<int> e(t.mon.exps().begin(), t.mon.exps().end());
    chi.coeff[e] = t.coeff;
  }
  return chi;
}

std::vector<ChernTableEntry> chern_table_layout(
    const ClassAlgebra& alg, const std::vector<std::string>& divisor_names) {
  int n = alg.n();
  int s = alg.s();
  GradedClass td = todd_class(alg);

  // Todd supports by weight; weight 0 is the empty monomial.
  std::vector<std::vector<ClassMono>> support(n + 1);
  support[0].push_back(ClassMono(alg.nsym(), 0));
  for (const auto& [m, coeff] : td.terms()) {
    int w = 0;
    for (int sym = 0; sym < alg.nsym(); ++sym) w += m[sym] * alg.weight(sym);
    if (w >= 1 && w <= n) support[w].push_back(m);
  }

  auto label_of = [&](const ClassMono& m) {
    std::string out;
    for (int sym = 0; sym < alg.nsym(); ++sym) {
      if (m[sym] == 0) continue;
      if (!out.empty()) out += "*";
      out += alg.sym_name(sym, divisor_names);
      if (m[sym] > 1) out += "^" + std::to_string(m[sym]);
    }
    return out;
  };

  std::vector<ChernTableEntry> entries;
  ClassMono hn(alg.nsym(), 0);
  hn[alg.id_H()] = static_cast<uint8_t>(n);
  entries.push_back({label_of(hn), hn});

  for (int w = 1; w <= n; ++w)
    for (const auto& m : support[w]) entries.push_back({label_of(m), m});

  for (int i = 0; i < s; ++i)
    for (int w = 1; w <= n; ++w)
      for (int j = 1; j <= w; ++j)
        for (const auto& mu : support[w - j]) {
          ClassMono m = mu;
          m[alg.id_d(j, i)] += 1;
          entries.push_back({label_of(m), m});
        }

  // Divisor powers of total weight n.
  std::vector<int> k(s, 0);
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (i == s) {
      int total = n - remaining;
      if (total == 0) return;
      for (const auto& mu : support[remaining]) {
        ClassMono m = mu;
        for (int q = 0; q < s; ++q)
          m[alg.id_D(q)] = static_cast<uint8_t>(k[q]);
        entries.push_back({label_of(m), m});
      }
      return;
    }
    for (int kq = 0; kq <= remaining; ++kq) {
      k[i] = kq;
      rec(i + 1, remaining - kq);
    }
    k[i] = 0;
  };
  rec(0, n);
  return entries;
}

Rational surface_shortcut(const DegreeTable& table, const Rational& a) {
  if (table.n != 2 || table.s != 1)
    throw value_error(
        "the surface shortcut needs a surface with exactly one divisor");
  ClassAlgebra alg(2, 1);
  auto mono = [&](std::initializer_list<std::pair<int, int>> parts) {
    ClassMono m(alg.nsym(), 0);
    for (auto [sym, e] : parts) m[sym] = static_cast<uint8_t>(e);
    return m;
  };
  long long dd =
      chern_monomial_degree(alg, mono({{alg.id_D(0), 2}}), table);
  long long c1d = chern_monomial_degree(
      alg, mono({{alg.id_c(1), 1}, {alg.id_D(0), 1}}), table);
  long long c11 = chern_monomial_degree(alg, mono({{alg.id_c(1), 2}}), table);
  long long c2 = chern_monomial_degree(alg, mono({{alg.id_c(2), 1}}), table);
  // chi(aD) = aD(aD - K)/2 + chi(O), K = -c_1, chi(O) = (c_1^2 + c_2)/12
  return a * a * Rational(dd) / 2 + a * Rational(c1d) / 2 +
         Rational(c11 + c2) / 12;
}

bool surface_shortcut_check(const DegreeTable& table) {
  ChiPolynomial chi = assemble_chi(table);
  for (int a = -2; a <= 2; ++a) {
    if (surface_shortcut(table, Rational(a)) != chi.eval({Rational(a)}))
      return false;
  }
  return true;
}

}  // namespace npc
