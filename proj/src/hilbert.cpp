#include "hilbert.hpp"

#include <algorithm>
#include <map>

#include "matrix.hpp"

namespace npc {

namespace {

using ZPoly = std::vector<BigInt>;  // coefficient of t^i at index i

ZPoly zp_one() { return {BigInt(1)}; }

void zp_add_shifted(ZPoly& a, const ZPoly& b, int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift);
  for (size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// 1 - t^d
ZPoly zp_one_minus_power(int d) {
  ZPoly r(d + 1);
  r[0] = 1;
  r[d] = -1;
  return r;
}

bool divides_exp(const std::vector<int32_t>& a, const std::vector<int32_t>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

int32_t total(const std::vector<int32_t>& e) {
  int32_t s = 0;
  for (int32_t x : e) s += x;
  return s;
}

void minimalize(std::vector<std::vector<int32_t>>& gens) {
  std::sort(gens.begin(), gens.end(),
            [](const auto& a, const auto& b) {
              int32_t ta = total(a), tb = total(b);
              if (ta != tb) return ta < tb;
              return a < b;
            });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<std::vector<int32_t>> out;
  for (auto& g : gens) {
    bool covered = false;
    for (const auto& kept : out)
      if (divides_exp(kept, g)) {
        covered = true;
        break;
      }
    if (!covered) out.push_back(std::move(g));
  }
  gens = std::move(out);
}

struct NumeratorWorker {
  std::map<std::vector<std::vector<int32_t>>, ZPoly> memo;

  // gens minimal, sorted.  Recursion: split on a frequently used variable,
  //   N(I) = N(I + (x)) + t * N(I : x).
  ZPoly run(std::vector<std::vector<int32_t>> gens) {
    if (gens.empty()) return zp_one();
    if (gens.size() == 1) {
      if (total(gens[0]) == 0) return {};  // unit ideal
      return zp_one_minus_power(total(gens[0]));
    }

    // Support-disjoint generators multiply.
    {
      bool disjoint = true;
      size_t nv = gens[0].size();
      std::vector<int> seen(nv, 0);
      for (const auto& g : gens)
        for (size_t v = 0; v < nv && disjoint; ++v)
          if (g[v] > 0 && seen[v]++ > 0) disjoint = false;
      if (disjoint) {
        ZPoly r = zp_one();
        for (const auto& g : gens) r = zp_mul(r, zp_one_minus_power(total(g)));
        return r;
      }
    }

    auto it = memo.find(gens);
    if (it != memo.end()) return it->second;

    size_t nv = gens[0].size();
    int best_var = -1, best_count = 0;
    for (size_t v = 0; v < nv; ++v) {
      int count = 0;
      for (const auto& g : gens)
        if (g[v] > 0) ++count;
      if (count > best_count) {
        best_count = count;
        best_var = static_cast<int>(v);
      }
    }

    std::vector<std::vector<int32_t>> plus;  // I + (x_v)
    std::vector<int32_t> xv(nv, 0);
    xv[best_var] = 1;
    plus.push_back(xv);
    for (const auto& g : gens)
      if (g[best_var] == 0) plus.push_back(g);
    minimalize(plus);

    std::vector<std::vector<int32_t>> colon;  // I : x_v
    for (auto g : gens) {
      if (g[best_var] > 0) g[best_var] -= 1;
      colon.push_back(std::move(g));
    }
    minimalize(colon);

    ZPoly np = run(std::move(plus));
    ZPoly nc = run(std::move(colon));
    ZPoly r = np;
    zp_add_shifted(r, nc, 1);
    memo.emplace(std::move(gens), r);
    return r;
  }
};

}  // namespace

std::vector<BigInt> hilbert_numerator(std::vector<std::vector<int32_t>> gens,
                                      int nvars) {
  for (const auto& g : gens)
    if (static_cast<int>(g.size()) != nvars)
      throw value_error("hilbert_numerator: exponent length mismatch");
  minimalize(gens);
  NumeratorWorker w;
  ZPoly n = w.run(std::move(gens));
  while (!n.empty() && n.back() == 0) n.pop_back();
  return n;
}

SchemeStats stats_from_numerator(std::vector<BigInt> numerator, int nvars) {
  while (!numerator.empty() && numerator.back() == 0) numerator.pop_back();
  if (numerator.empty()) return {-1, 0};  // unit ideal

  auto eval_at_one = [](const ZPoly& p) {
    BigInt s = 0;
    for (const auto& c : p) s += c;
    return s;
  };

  int e = 0;
  while (eval_at_one(numerator) == 0) {
    // numerator = (1 - t) * q  =>  q_i = n_i + q_{i-1}
    ZPoly q(numerator.size() - 1);
    BigInt carry = 0;
    for (size_t i = 0; i + 1 < numerator.size(); ++i) {
      carry = numerator[i] + carry;
      q[i] = carry;
    }
    numerator = std::move(q);
    ++e;
    if (numerator.empty()) return {-1, 0};
  }

  int d = nvars - e;
  if (d <= 0) return {-1, 0};
  BigInt deg = eval_at_one(numerator);
  if (deg <= 0)
    throw internal_error("nonpositive degree from Hilbert numerator");
  return {d - 1, to_longlong(deg)};
}

SchemeStats scheme_stats(const IdealP& ideal) {
  if (ideal.ring->order().kind != OrderSpec::kDegrevlex)
    throw value_error("scheme_stats requires a degrevlex ring");
  std::vector<PolyP> basis = groebner_basis(ideal);
  if (!basis.empty() && basis.front().lead().mon.is_one())
    return {-1, 0};
  std::vector<std::vector<int32_t>> lead;
  lead.reserve(basis.size());
  for (const PolyP& g : basis) lead.push_back(g.lead().mon.exps());
  return stats_from_numerator(hilbert_numerator(std::move(lead),
                                                ideal.ring->nvars()),
                              ideal.ring->nvars());
}

bool is_smooth(const IdealP& ideal) {
  SchemeStats st = scheme_stats(ideal);
  if (st.dim < 0) throw value_error("is_smooth: empty scheme");
  int codim = ideal.ring->nvars() - 1 - st.dim;
  if (codim == 0) return true;  // all of P^r
  PolyMatrix<Fp> jac = jacobian(ideal.gens, ideal.ring);
  if (codim > jac.nrows) return false;  // cannot reach the required rank
  std::vector<PolyP> minors = minors_with_required_rows(jac, codim, {});
  IdealP sing(ideal.ring, ideal.gens);
  for (auto& m : minors) sing.add_unique(m);
  return scheme_stats(sing).dim == -1;
}

}  // namespace npc
