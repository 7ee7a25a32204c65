#include "ccycle/lagrangian.hpp"

#include <algorithm>
#include <map>

namespace ccycle {

void LagrangianCycle::normalize() {
  std::map<std::string, CycleTerm> acc;
  for (const auto& t : terms) {
    auto [it, fresh] = acc.emplace(t.stratum_id, t);
    if (!fresh) it->second.coeff += t.coeff;
  }
  terms.clear();
  for (auto& [id, t] : acc)
    if (t.coeff != 0) terms.push_back(t);
}

long long LagrangianCycle::coeff_of(const std::string& id) const {
  for (const auto& t : terms)
    if (t.stratum_id == id) return t.coeff;
  return 0;
}

LagrangianCycle add(const LagrangianCycle& a, const LagrangianCycle& b) {
  LagrangianCycle out = a;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  out.normalize();
  return out;
}

LagrangianCycle scale(long long k, const LagrangianCycle& a) {
  LagrangianCycle out = a;
  for (auto& t : out.terms) t.coeff *= k;
  out.normalize();
  return out;
}

BundleRingClass cotangent_bundle_ring_zero(int n) {
  return br_zero(n, n, chern_cotangent(n));
}

BundleRingClass flat_completion_class(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("flat_completion_class: bad flat dimension");
  BundleRingClass z = cotangent_bundle_ring_zero(n);
  CohClass ck = chern_cotangent(k);  // c(T*P^k), truncated at h^k
  for (int j = 0; j <= k; ++j) {
    int a = (n - k) + j;
    if (a > n) continue;
    z.coeffs[a][k - j] += ck.coeffs[j];
  }
  return z;
}

ConormalSymbol conormal_of_flat(int n, const std::string& stratum_id, int k) {
  return ConormalSymbol{stratum_id, n, k, flat_completion_class(n, k)};
}

ConormalSymbol conormal_symbol(const PosetPtr& poset, const std::string& stratum_id) {
  const Stratum& s = poset->at(stratum_id);
  if (!s.flat)
    throw poset_error("conormal_symbol: stratum " + stratum_id +
                      " has no linear closure data and no supplied completion class");
  return conormal_of_flat(poset->n, stratum_id, s.dim);
}

LagrangianCycle cc(const ConstructibleFunction& alpha, const EulerTable& e) {
  auto c = decompose_euler(alpha, e);
  LagrangianCycle out;
  const StratPoset& p = *alpha.poset;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    long long sign = (p.strata[i].dim % 2 == 0) ? 1 : -1;
    out.terms.push_back({p.strata[i].id, p.strata[i].dim, sign * c[i]});
  }
  out.normalize();
  return out;
}

ConstructibleFunction cc_inverse(const LagrangianCycle& l, const PosetPtr& poset,
                                 const EulerTable& e) {
  // Recover Eu-coefficients and recompose the function values.
  std::vector<long long> values(poset->strata.size(), 0);
  for (const auto& t : l.terms) {
    int zi = poset->idx(t.stratum_id);
    long long sign = (poset->strata[zi].dim % 2 == 0) ? 1 : -1;
    long long c = sign * t.coeff;
    for (size_t s = 0; s < poset->strata.size(); ++s)
      values[s] += c * e.value(t.stratum_id, poset->strata[s].id);
  }
  return ConstructibleFunction(poset, std::move(values));
}

MorseTable morse_table_from_euler(const PosetPtr& poset, const EulerTable& e) {
  MorseTable m;
  for (const auto& t : poset->strata) {
    auto c = decompose_euler(indicator_of_closure(poset, t.id), e);
    for (size_t s = 0; s < c.size(); ++s)
      if (c[s] != 0) m.nmd[poset->strata[s].id][t.id] = c[s];
  }
  return m;
}

LagrangianCycle cc_from_morse(const ConstructibleFunction& alpha, const MorseTable& m) {
  const PosetPtr& p = alpha.poset;
  // Decompose α in the indicator basis of stratum closures.
  auto d = decompose_euler(alpha, EulerTable::all_ones(*p));
  std::vector<long long> w(p->strata.size(), 0);
  for (size_t s = 0; s < w.size(); ++s)
    for (size_t t = 0; t < d.size(); ++t)
      if (d[t] != 0) w[s] += d[t] * m.value(p->strata[s].id, p->strata[t].id);
  return cc_from_morse_weights(p, w);
}

LagrangianCycle cc_from_morse_weights(const PosetPtr& poset,
                                      const std::vector<long long>& weights) {
  if (weights.size() != poset->strata.size())
    throw poset_error("cc_from_morse: missing weight entries");
  LagrangianCycle out;
  for (size_t s = 0; s < weights.size(); ++s) {
    if (weights[s] == 0) continue;
    long long sign = (poset->strata[s].dim % 2 == 0) ? 1 : -1;
    out.terms.push_back({poset->strata[s].id, poset->strata[s].dim, sign * weights[s]});
  }
  out.normalize();
  return out;
}

GradedClass segre(const ConormalSymbol& c) {
  GradedClass out(c.n);
  BundleRingClass cur = c.completion;
  // ζ is nilpotent: degrees above dim P(T*P^n ⊕ 1) vanish in normal form.
  for (int i = 0; i <= 2 * c.n + 1 && !cur.is_zero(); ++i) {
    out = add(out, bundle_pushforward(cur));
    cur = mul_zeta(cur);
  }
  return out;
}

GradedClass dual_mather(const ConormalSymbol& c) {
  return cap(chern_cotangent(c.n), segre(c));
}

GradedClass dual_csm(const ConstructibleFunction& alpha, const EulerTable& e) {
  auto c = decompose_euler(alpha, e);
  const StratPoset& p = *alpha.poset;
  GradedClass out(p.n);
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    long long sign = (p.strata[i].dim % 2 == 0) ? 1 : -1;
    ConormalSymbol sym = conormal_symbol(alpha.poset, p.strata[i].id);
    out = add(out, scale(sign * c[i], dual_mather(sym)));
  }
  return out;
}

}  // namespace ccycle
