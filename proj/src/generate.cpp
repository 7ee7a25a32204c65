#include "ccycle/generate.hpp"

#include <algorithm>
#include <set>

namespace ccycle {

namespace {

QVec random_form_in_block(int n, int lo, int hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  QVec v(n + 1, Rat(0));
  for (;;) {
    bool nonzero = false;
    for (int i = lo; i <= hi; ++i) {
      int c = coeff(rng);
      v[i] = Rat(c);
      if (c != 0) nonzero = true;
    }
    if (nonzero) return v;
  }
}

}  // namespace

Arrangement random_arrangement_in_block(int n, int lo, int hi, int count, std::mt19937_64& rng) {
  std::vector<QVec> hs;
  std::set<std::string> seen;
  int attempts = 0;
  while (static_cast<int>(hs.size()) < count) {
    if (++attempts > 10000)
      throw arrangement_error("random_arrangement_in_block: cannot draw enough distinct forms");
    QVec v = random_form_in_block(n, lo, hi, rng);
    std::string key = row_space_key(QMat{v}, n + 1);
    if (!seen.insert(key).second) continue;
    hs.push_back(std::move(v));
  }
  return Arrangement(n, std::move(hs));
}

std::pair<Arrangement, Arrangement> splayed_coordinate_pair(int n, int split, int ka, int kb,
                                                            std::mt19937_64& rng) {
  if (split < 0 || split >= n) throw arrangement_error("splayed_coordinate_pair: bad split");
  Arrangement a = random_arrangement_in_block(n, 0, split, ka, rng);
  Arrangement b = random_arrangement_in_block(n, split + 1, n, kb, rng);
  return {std::move(a), std::move(b)};
}

ConicSupport full_flat_support(const ArrangementModel& m) {
  ConicSupport s;
  s.n = m.poset->n;
  for (const auto& z : m.poset->strata) s.components.push_back({z.id, *z.flat});
  return s;
}

std::pair<Arrangement, Arrangement> generic_arrangement_pair(int n, int ka, int kb,
                                                             std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Arrangement a = random_arrangement_in_block(n, 0, n, ka, rng);
    Arrangement b = random_arrangement_in_block(n, 0, n, kb, rng);
    ArrangementModel ma = strat_poset_from_arrangement(a);
    ArrangementModel mb = strat_poset_from_arrangement(b);
    if (is_noncharacteristic_diagonal(full_flat_support(ma), full_flat_support(mb)).ok)
      return {std::move(a), std::move(b)};
  }
  throw arrangement_error("generic_arrangement_pair: transversality redraw limit reached");
}

ConstructibleFunction random_flat_function(const ArrangementModel& m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  ConstructibleFunction f = zero_function(m.poset);
  for (const auto& z : m.poset->strata) {
    int c = coeff(rng);
    if (c != 0) f = add(f, scale(c, indicator_of_closure(m.poset, z.id)));
  }
  return f;
}

QMat random_transversal_embedding(int n, int k, const ConicSupport& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    QMat e(k + 1, QVec(n + 1, Rat(0)));
    for (auto& row : e)
      for (auto& x : row) x = Rat(coeff(rng));
    if (rank(e) != k + 1) continue;
    if (is_noncharacteristic_map(LinearMapData::embedding(e), s).ok) return e;
  }
  throw microlocal_error("random_transversal_embedding: redraw limit reached");
}

namespace {

json indicator_json(const ConstructibleFunction& f) {
  // Serialize via the decomposition in the indicator basis so the casefile
  // stays readable.
  auto d = decompose_euler(f, EulerTable::all_ones(*f.poset));
  json coeffs = json::object();
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) coeffs[f.poset->strata[i].id] = d[i];
  return json{{"indicator_coeffs", std::move(coeffs)}};
}

json splayed_family(int n, std::mt19937_64& rng, unsigned long long seed) {
  json cases = json::array();
  int idx = 0;
  for (int split = 0; split < n; ++split) {
    for (int rep = 0; rep < 3; ++rep) {
      // A one-coordinate block carries a single hyperplane up to scale.
      int ka = split == 0 ? 1 : 3;
      int kb = split == n - 1 ? 1 : 3;
      auto [a, b] = splayed_coordinate_pair(n, split, ka, kb, rng);
      ArrangementModel ma = strat_poset_from_arrangement(a);
      ArrangementModel mb = strat_poset_from_arrangement(b);
      ConstructibleFunction alpha = random_flat_function(ma, rng);
      ConstructibleFunction beta = random_flat_function(mb, rng);
      std::string base =
          "splayed-n" + std::to_string(n) + "-s" + std::to_string(seed) + "-" + std::to_string(idx++);
      cases.push_back(json{{"id", base + "-splay"},
                           {"kind", "splayed-check"},
                           {"inputs",
                            json{{"arrangement_a", to_json(a)},
                                 {"arrangement_b", to_json(b)},
                                 {"alpha", indicator_json(alpha)},
                                 {"beta", indicator_json(beta)}}},
                           {"expectations", json{{"splayed", true}}}});
      cases.push_back(json{{"id", base + "-int"},
                           {"kind", "intersection-formula"},
                           {"inputs",
                            json{{"arrangement_a", to_json(a)},
                                 {"arrangement_b", to_json(b)},
                                 {"alpha", indicator_json(alpha)},
                                 {"beta", indicator_json(beta)}}},
                           {"expectations", json{{"equal", true}, {"hypothesis_certified", true}}}});
    }
  }
  return cases;
}

json generic_family(int n, std::mt19937_64& rng, unsigned long long seed) {
  json cases = json::array();
  for (int rep = 0; rep < 4; ++rep) {
    auto [a, b] = generic_arrangement_pair(n, 2, 2, rng);
    ArrangementModel ma = strat_poset_from_arrangement(a);
    ArrangementModel mb = strat_poset_from_arrangement(b);
    ConstructibleFunction alpha = random_flat_function(ma, rng);
    ConstructibleFunction beta = random_flat_function(mb, rng);
    std::string base =
        "generic-n" + std::to_string(n) + "-s" + std::to_string(seed) + "-" + std::to_string(rep);
    json inputs{{"arrangement_a", to_json(a)},
                {"arrangement_b", to_json(b)},
                {"alpha", indicator_json(alpha)},
                {"beta", indicator_json(beta)}};
    cases.push_back(json{{"id", base + "-nc"},
                         {"kind", "noncharacteristic-check"},
                         {"inputs", inputs},
                         {"expectations", json{{"noncharacteristic", true}}}});
    cases.push_back(json{{"id", base + "-int"},
                         {"kind", "intersection-formula"},
                         {"inputs", inputs},
                         {"expectations", json{{"equal", true}, {"hypothesis_certified", true}}}});
    cases.push_back(json{{"id", base + "-idx"},
                         {"kind", "index-formula"},
                         {"inputs", inputs},
                         {"expectations", json{{"equal", true}}}});
  }
  return cases;
}

json flag_family(int n, unsigned long long seed) {
  // Boolean arrangement x_1 = 0, ..., x_n = 0: its lattice contains the full
  // flag of coordinate flats P^0 ⊂ P^1 ⊂ ... ⊂ P^n.
  std::vector<QVec> hs;
  for (int i = 1; i <= n; ++i) {
    QVec v(n + 1, Rat(0));
    v[i] = Rat(1);
    hs.push_back(std::move(v));
  }
  Arrangement a(n, std::move(hs));
  ArrangementModel m = strat_poset_from_arrangement(a);
  json cases = json::array();
  for (int k = 0; k <= n; ++k) {
    // Flat x_{k+1} = ... = x_n = 0 of dimension k.
    QMat rows;
    for (int i = k + 1; i <= n; ++i) {
      QVec v(n + 1, Rat(0));
      v[i] = Rat(1);
      rows.push_back(std::move(v));
    }
    int fi = m.lattice.find_by_rows(rows);
    const std::string& id = m.lattice.flats[fi].id;
    json alpha{{"indicator_coeffs", json::object({{id, 1}})}};
    cases.push_back(json{{"id", "flag-n" + std::to_string(n) + "-s" + std::to_string(seed) + "-k" +
                                    std::to_string(k)},
                         {"kind", "csm-compute"},
                         {"inputs", json{{"arrangement", to_json(a)}, {"alpha", alpha}}},
                         {"expectations", json{{"csm", to_json(smooth_flat_mather(n, k))}}}});
  }
  return cases;
}

}  // namespace

json generate_casefile(const std::string& family, int n, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  json cases;
  if (family == "splayed-coordinate-pair")
    cases = splayed_family(n, rng, seed);
  else if (family == "generic-arrangement-pair")
    cases = generic_family(n, rng, seed);
  else if (family == "flag-of-flats")
    cases = flag_family(n, seed);
  else
    throw io_error("unknown family: " + family);
  return json{{"family", family}, {"n", n}, {"seed", seed}, {"cases", std::move(cases)}};
}

}  // namespace ccycle
