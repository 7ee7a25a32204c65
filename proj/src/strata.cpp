#include "ccycle/strata.hpp"

#include <algorithm>

#include "ccycle/arrangements.hpp"

namespace ccycle {

const Stratum& StratPoset::at(const std::string& id) const { return strata[idx(id)]; }

int StratPoset::idx(const std::string& id) const {
  auto it = index.find(id);
  if (it == index.end()) throw poset_error("unknown stratum id: " + id);
  return it->second;
}

bool StratPoset::leq(const std::string& s, const std::string& z) const {
  if (s == z) return true;
  return at(z).below.count(s) > 0;
}

void StratPoset::finalize() {
  std::sort(strata.begin(), strata.end(), [](const Stratum& a, const Stratum& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return a.id < b.id;
  });
  index.clear();
  for (size_t i = 0; i < strata.size(); ++i) {
    if (!index.emplace(strata[i].id, static_cast<int>(i)).second)
      throw poset_error("duplicate stratum id: " + strata[i].id);
  }
  for (const auto& s : strata) {
    for (const auto& t : s.below) {
      const Stratum& u = at(t);
      if (u.dim >= s.dim)
        throw poset_error("closure order must decrease dimension: " + t + " < " + s.id);
      // transitivity of the declared down-sets
      for (const auto& v : u.below)
        if (!s.below.count(v))
          throw poset_error("down-set of " + s.id + " is not transitive (missing " + v + ")");
    }
    if (s.mather && s.mather->coeffs.at(s.dim) != 1)
      throw poset_error("Mather class of " + s.id + " must have leading coefficient 1");
  }
}

long long EulerTable::value(const std::string& z, const std::string& s) const {
  auto it = e.find(z);
  if (it == e.end()) return 0;
  auto jt = it->second.find(s);
  return jt == it->second.end() ? 0 : jt->second;
}

void EulerTable::validate(const StratPoset& poset) const {
  for (const auto& s : poset.strata) {
    if (value(s.id, s.id) != 1)
      throw poset_error("Euler table is not unitriangular at " + s.id);
    for (const auto& t : poset.strata) {
      if (value(s.id, t.id) != 0 && !poset.leq(t.id, s.id))
        throw poset_error("Euler table entry outside closure order: e[" + s.id + "][" + t.id + "]");
    }
  }
}

EulerTable EulerTable::all_ones(const StratPoset& poset) {
  EulerTable t;
  for (const auto& z : poset.strata) {
    t.e[z.id][z.id] = 1;
    for (const auto& s : z.below) t.e[z.id][s] = 1;
  }
  return t;
}

ConstructibleFunction::ConstructibleFunction(PosetPtr p, std::vector<long long> v)
    : poset(std::move(p)), values(std::move(v)) {
  if (values.size() != poset->strata.size())
    throw poset_error("constructible function not defined on every stratum");
}

bool ConstructibleFunction::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](long long v) { return v == 0; });
}

long long MorseTable::value(const std::string& s, const std::string& t) const {
  auto it = nmd.find(s);
  if (it == nmd.end()) return 0;
  auto jt = it->second.find(t);
  return jt == it->second.end() ? 0 : jt->second;
}

ConstructibleFunction zero_function(PosetPtr p) {
  std::vector<long long> v(p->strata.size(), 0);
  return ConstructibleFunction(std::move(p), std::move(v));
}

ConstructibleFunction constant_function(PosetPtr p, long long c) {
  std::vector<long long> v(p->strata.size(), c);
  return ConstructibleFunction(std::move(p), std::move(v));
}

ConstructibleFunction indicator_of_closure(PosetPtr p, const std::string& z) {
  std::vector<long long> v(p->strata.size(), 0);
  for (size_t i = 0; i < p->strata.size(); ++i)
    if (p->leq(p->strata[i].id, z)) v[i] = 1;
  return ConstructibleFunction(std::move(p), std::move(v));
}

ConstructibleFunction euler_obstruction(PosetPtr p, const EulerTable& e, const std::string& z) {
  std::vector<long long> v(p->strata.size(), 0);
  for (size_t i = 0; i < p->strata.size(); ++i) v[i] = e.value(z, p->strata[i].id);
  return ConstructibleFunction(std::move(p), std::move(v));
}

ConstructibleFunction add(const ConstructibleFunction& a, const ConstructibleFunction& b) {
  if (a.poset != b.poset) throw poset_error("add: functions on different posets");
  std::vector<long long> v(a.values.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = a.values[i] + b.values[i];
  return ConstructibleFunction(a.poset, std::move(v));
}

ConstructibleFunction scale(long long k, const ConstructibleFunction& a) {
  std::vector<long long> v(a.values.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = k * a.values[i];
  return ConstructibleFunction(a.poset, std::move(v));
}

PosetPtr trivial_poset(int n) {
  auto p = std::make_shared<StratPoset>();
  p->ambient = StratPoset::Ambient::Proj;
  p->n = n;
  Stratum s;
  s.id = "F0";
  s.dim = n;
  s.chi_c = n + 1;
  s.flat = QMat{};
  s.pushforward = GradedClass::basis(n, n);
  s.mather = smooth_flat_mather(n, n);
  p->strata.push_back(std::move(s));
  p->source_hyperplanes = std::vector<QVec>{};
  p->finalize();
  return p;
}

PosetPtr product_poset(const PosetPtr& p, const PosetPtr& q) {
  if (p->ambient != StratPoset::Ambient::Proj || q->ambient != StratPoset::Ambient::Proj)
    throw poset_error("product_poset: factors must be single projective posets");
  auto out = std::make_shared<StratPoset>();
  out->ambient = StratPoset::Ambient::BiProj;
  out->n = p->n;
  out->m = q->n;
  for (const auto& a : p->strata)
    for (const auto& b : q->strata) {
      Stratum s;
      s.id = a.id + "*" + b.id;
      s.dim = a.dim + b.dim;
      s.chi_c = a.chi_c * b.chi_c;
      for (const auto& a2 : p->strata)
        for (const auto& b2 : q->strata) {
          if (a2.id == a.id && b2.id == b.id) continue;
          if (p->leq(a2.id, a.id) && q->leq(b2.id, b.id)) s.below.insert(a2.id + "*" + b2.id);
        }
      if (a.pushforward && b.pushforward) s.pushforward_bi = cross(*a.pushforward, *b.pushforward);
      if (a.mather && b.mather) s.mather_bi = cross(*a.mather, *b.mather);
      out->strata.push_back(std::move(s));
    }
  out->finalize();
  return out;
}

EulerTable product_euler_table(const PosetPtr& p, const EulerTable& ep,
                               const PosetPtr& q, const EulerTable& eq) {
  EulerTable t;
  for (const auto& az : p->strata)
    for (const auto& bz : q->strata)
      for (const auto& as : p->strata)
        for (const auto& bs : q->strata) {
          long long v = ep.value(az.id, as.id) * eq.value(bz.id, bs.id);
          if (v != 0) t.e[az.id + "*" + bz.id][as.id + "*" + bs.id] = v;
        }
  return t;
}

std::vector<long long> decompose_euler(const ConstructibleFunction& alpha, const EulerTable& e) {
  const StratPoset& p = *alpha.poset;
  e.validate(p);
  std::vector<long long> c(p.strata.size(), 0);
  // strata are stored in decreasing dimension order already
  for (size_t i = 0; i < p.strata.size(); ++i) {
    long long v = alpha.values[i];
    for (size_t j = 0; j < i; ++j) v -= c[j] * e.value(p.strata[j].id, p.strata[i].id);
    c[i] = v;  // e[S][S] = 1
  }
  return c;
}

long long euler_integral(const ConstructibleFunction& alpha) {
  long long s = 0;
  for (size_t i = 0; i < alpha.values.size(); ++i)
    s += alpha.poset->strata[i].chi_c * alpha.values[i];
  return s;
}

ConstructibleFunction product(const ConstructibleFunction& alpha,
                              const ConstructibleFunction& beta) {
  if (alpha.poset != beta.poset) throw poset_error("product: functions on different posets");
  std::vector<long long> v(alpha.values.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = alpha.values[i] * beta.values[i];
  return ConstructibleFunction(alpha.poset, std::move(v));
}

GradedClass csm(const ConstructibleFunction& alpha, const EulerTable& e) {
  const StratPoset& p = *alpha.poset;
  if (p.ambient != StratPoset::Ambient::Proj)
    throw poset_error("csm: poset is not over a single projective space");
  auto c = decompose_euler(alpha, e);
  GradedClass out(p.n);
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!p.strata[i].mather)
      throw poset_error("csm: missing Mather class for stratum " + p.strata[i].id);
    out = add(out, scale(c[i], *p.strata[i].mather));
  }
  return out;
}

BiGradedClass csm_bi(const ConstructibleFunction& alpha, const EulerTable& e) {
  const StratPoset& p = *alpha.poset;
  if (p.ambient != StratPoset::Ambient::BiProj)
    throw poset_error("csm_bi: poset is not over a product");
  auto c = decompose_euler(alpha, e);
  BiGradedClass out(p.n, p.m);
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!p.strata[i].mather_bi)
      throw poset_error("csm_bi: missing Mather class for stratum " + p.strata[i].id);
    out = add(out, scale(c[i], *p.strata[i].mather_bi));
  }
  return out;
}

ConstructibleFunction cross_fn(const ConstructibleFunction& alpha,
                               const ConstructibleFunction& beta) {
  PosetPtr prod = product_poset(alpha.poset, beta.poset);
  std::vector<long long> v(prod->strata.size());
  for (size_t i = 0; i < v.size(); ++i) {
    const std::string& id = prod->strata[i].id;
    auto star = id.find('*');
    v[i] = alpha.at(id.substr(0, star)) * beta.at(id.substr(star + 1));
  }
  return ConstructibleFunction(std::move(prod), std::move(v));
}

ConstructibleFunction Refinement::pull_first(const ConstructibleFunction& alpha) const {
  std::vector<long long> v(poset->strata.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = alpha.values[to_first[i]];
  return ConstructibleFunction(poset, std::move(v));
}

ConstructibleFunction Refinement::pull_second(const ConstructibleFunction& beta) const {
  std::vector<long long> v(poset->strata.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = beta.values[to_second[i]];
  return ConstructibleFunction(poset, std::move(v));
}

Refinement common_refinement(const PosetPtr& p1, const PosetPtr& p2) {
  if (!p1->source_hyperplanes || !p2->source_hyperplanes)
    throw poset_error("common_refinement: posets must carry linear (arrangement) data");
  if (p1->n != p2->n) throw poset_error("common_refinement: ambient dimensions differ");
  return refine_arrangement_posets(p1, p2);
}

GradedClass smooth_flat_mather(int n, int k) {
  // c(TP^k) ∩ [P^k], pushed to H_*(P^n).
  GradedClass out(n);
  for (int j = 0; j <= k; ++j) out.coeffs[k - j] = binom(k + 1, j);
  return out;
}

}  // namespace ccycle
