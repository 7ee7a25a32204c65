#pragma once

#include <random>

#include "ccycle/strata.hpp"

namespace test_helpers {

using namespace ccycle;

/// Random poset with strictly decreasing dimensions (so any downward relation
/// set is valid) and a transitively closed closure order.
inline PosetPtr random_poset(std::mt19937_64& rng, int max_strata = 12) {
  std::uniform_int_distribution<int> size_dist(1, max_strata);
  std::uniform_int_distribution<int> coin(0, 1);
  int count = size_dist(rng);
  auto p = std::make_shared<StratPoset>();
  p->n = count;  // ambient dimension large enough for every stratum
  std::vector<std::set<std::string>> below(count);
  std::vector<std::vector<bool>> rel(count, std::vector<bool>(count, false));
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j) rel[i][j] = coin(rng) == 1;
  // Transitive closure.
  for (int k = 0; k < count; ++k)
    for (int i = 0; i < count; ++i)
      for (int j = 0; j < count; ++j)
        if (rel[i][k] && rel[k][j]) rel[i][j] = true;
  std::uniform_int_distribution<long long> chi(-3, 3);
  for (int i = 0; i < count; ++i) {
    Stratum s;
    s.id = "S" + std::to_string(i);
    s.dim = count - i;  // strictly decreasing in declaration order
    s.chi_c = chi(rng);
    for (int j = i + 1; j < count; ++j)
      if (rel[i][j]) s.below.insert("S" + std::to_string(j));
    p->strata.push_back(std::move(s));
  }
  p->finalize();
  return p;
}

inline EulerTable random_unitriangular(std::mt19937_64& rng, const PosetPtr& p) {
  std::uniform_int_distribution<long long> val(-3, 3);
  EulerTable t;
  for (const auto& z : p->strata) {
    t.e[z.id][z.id] = 1;
    for (const auto& s : z.below) t.e[z.id][s] = val(rng);
  }
  return t;
}

inline ConstructibleFunction random_function(std::mt19937_64& rng, const PosetPtr& p) {
  std::uniform_int_distribution<long long> val(-5, 5);
  std::vector<long long> v(p->strata.size());
  for (auto& x : v) x = val(rng);
  return ConstructibleFunction(p, std::move(v));
}

}  // namespace test_helpers
