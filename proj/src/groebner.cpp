#include "groebner.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace npc {

PolyP normal_form(const PolyP& f, const std::vector<PolyP>& basis) {
  if (f.is_zero()) return f;
  RingPtr ring = f.ring();
  PolyP rest = f;
  std::vector<Term<Fp>> kept;
  while (!rest.is_zero()) {
    const Term<Fp>& lt = rest.lead();
    bool reduced = false;
    for (const PolyP& g : basis) {
      if (g.is_zero()) continue;
      const Term<Fp>& gl = g.lead();
      if (gl.mon.divides(lt.mon)) {
        rest.sub_scaled(lt.coeff / gl.coeff, quotient(lt.mon, gl.mon), g);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      kept.push_back(lt);
      rest.sub_scaled(lt.coeff, lt.mon,
                      PolyP::constant(ring, Fp(1, ring->prime())));
    }
  }
  // Leading terms were peeled off in strictly decreasing order.
  PolyP out(ring);
  for (auto& t : kept) out = out + PolyP::term(ring, t.mon, t.coeff);
  return out;
}

namespace {

struct SPair {
  int i, j;
  Monomial lcm_mon;
  int32_t sugar;
  int32_t lcm_deg;
};

struct SPairWorse {
  const OrderSpec* order;
  bool operator()(const SPair& a, const SPair& b) const {
    if (a.sugar != b.sugar) return a.sugar > b.sugar;
    if (a.lcm_deg != b.lcm_deg) return a.lcm_deg > b.lcm_deg;
    int c = order->cmp(a.lcm_mon, b.lcm_mon);
    if (c != 0) return c > 0;
    if (a.j != b.j) return a.j > b.j;
    return a.i > b.i;
  }
};

}  // namespace

std::vector<PolyP> groebner_basis(const IdealP& ideal) {
  RingPtr ring = ideal.ring;
  const OrderSpec& order = ring->order();

  std::vector<PolyP> g;
  std::vector<int32_t> sugar;
  for (const PolyP& f : ideal.gens) {
    if (f.is_zero()) continue;
    g.push_back(make_monic(f));
    sugar.push_back(f.total_degree());
  }

  std::priority_queue<SPair, std::vector<SPair>, SPairWorse> pairs(
      SPairWorse{&order});
  std::set<std::pair<int, int>> done;  // treated pairs, for the chain rule

  auto push_pair = [&](int i, int j) {
    const Monomial& a = g[i].lead().mon;
    const Monomial& b = g[j].lead().mon;
    if (coprime(a, b)) {
      // Buchberger's first criterion: the S-polynomial reduces to zero.
      done.insert({i, j});
      return;
    }
    Monomial l = lcm(a, b);
    int32_t s = std::max(sugar[i] + l.degree() - a.degree(),
                         sugar[j] + l.degree() - b.degree());
    pairs.push(SPair{i, j, l, s, l.degree()});
  };

  for (int j = 1; j < static_cast<int>(g.size()); ++j)
    for (int i = 0; i < j; ++i) push_pair(i, j);

  while (!pairs.empty()) {
    SPair pr = pairs.top();
    pairs.pop();

    // Chain criterion: if some other element divides the lcm and both
    // flanking pairs were already treated, this pair is redundant.
    bool skip = false;
    for (int k = 0; k < static_cast<int>(g.size()) && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!g[k].lead().mon.divides(pr.lcm_mon)) continue;
      auto key1 = std::minmax(pr.i, k);
      auto key2 = std::minmax(pr.j, k);
      if (done.count({key1.first, key1.second}) &&
          done.count({key2.first, key2.second}))
        skip = true;
    }
    done.insert({pr.i, pr.j});
    if (skip) continue;

    const PolyP& fi = g[pr.i];
    const PolyP& fj = g[pr.j];
    PolyP s = fi.mul_term(Fp(1, ring->prime()),
                          quotient(pr.lcm_mon, fi.lead().mon));
    s.sub_scaled(Fp(1, ring->prime()), quotient(pr.lcm_mon, fj.lead().mon),
                 fj);
    PolyP r = normal_form(s, g);
    if (r.is_zero()) continue;

    g.push_back(make_monic(r));
    sugar.push_back(pr.sugar);
    int idx = static_cast<int>(g.size()) - 1;
    for (int i = 0; i < idx; ++i) push_pair(i, idx);
  }

  // Minimalize.  Input generators may share a leading monomial (elements
  // added by the loop never do, they enter in normal form), so scan in
  // increasing lead order and keep the first element of each divisibility
  // class.  A dropped element's lead stays covered transitively.
  std::vector<size_t> by_lead(g.size());
  for (size_t i = 0; i < g.size(); ++i) by_lead[i] = i;
  std::sort(by_lead.begin(), by_lead.end(), [&](size_t a, size_t b) {
    int c = order.cmp(g[a].lead().mon, g[b].lead().mon);
    if (c != 0) return c < 0;
    return a < b;
  });
  std::vector<PolyP> minimal;
  for (size_t i : by_lead) {
    bool redundant = false;
    for (const PolyP& kept : minimal)
      if (kept.lead().mon.divides(g[i].lead().mon)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g[i]);
  }

  // Tail-reduce each survivor against the others.
  std::vector<PolyP> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<PolyP> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    PolyP r = normal_form(minimal[i], others);
    if (!r.is_zero()) reduced.push_back(make_monic(r));
  }

  std::sort(reduced.begin(), reduced.end(), [&](const PolyP& a, const PolyP& b) {
    return order.cmp(a.lead().mon, b.lead().mon) < 0;
  });
  return reduced;
}

IdealP eliminate(const IdealP& ideal, const std::vector<int>& drop_vars) {
  RingPtr ring = ideal.ring;
  int n = ring->nvars();
  std::vector<bool> dropped(n, false);
  for (int v : drop_vars) {
    if (v < 0 || v >= n) throw value_error("eliminate: no such variable");
    dropped[v] = true;
  }
  int b = 0;
  for (int v = 0; v < n; ++v)
    if (dropped[v]) ++b;
  if (b == 0) return ideal;

  // Permute the dropped variables to the front of a two-block ring.
  std::vector<int> perm;  // position in block ring -> original index
  std::vector<std::string> block_vars;
  for (int v = 0; v < n; ++v)
    if (dropped[v]) {
      perm.push_back(v);
      block_vars.push_back(ring->var_name(v));
    }
  for (int v = 0; v < n; ++v)
    if (!dropped[v]) {
      perm.push_back(v);
      block_vars.push_back(ring->var_name(v));
    }
  RingPtr block_ring = Ring::make(block_vars, Domain::Fp, ring->prime(),
                                  OrderSpec::elimination(b));

  IdealP moved(block_ring);
  for (const PolyP& p : ideal.gens) {
    std::vector<Term<Fp>> ts;
    for (const auto& t : p.terms()) {
      std::vector<int32_t> e(n);
      for (int pos = 0; pos < n; ++pos) e[pos] = t.mon[perm[pos]];
      ts.push_back({Monomial(std::move(e)), t.coeff});
    }
    moved.add(PolyP::collect(block_ring, std::move(ts)));
  }

  std::vector<PolyP> basis = groebner_basis(moved);

  std::vector<std::string> rest_vars(block_vars.begin() + b, block_vars.end());
  RingPtr out_ring =
      Ring::make(rest_vars, Domain::Fp, ring->prime(), OrderSpec::degrevlex());
  IdealP out(out_ring);
  for (const PolyP& p : basis) {
    bool pure = true;
    for (const auto& t : p.terms())
      for (int pos = 0; pos < b && pure; ++pos)
        if (t.mon[pos] > 0) pure = false;
    if (!pure) continue;
    std::vector<Term<Fp>> ts;
    for (const auto& t : p.terms()) {
      std::vector<int32_t> e(t.mon.exps().begin() + b, t.mon.exps().end());
      ts.push_back({Monomial(std::move(e)), t.coeff});
    }
    out.add(PolyP::collect(out_ring, std::move(ts)));
  }
  return out;
}

}  // namespace npc
