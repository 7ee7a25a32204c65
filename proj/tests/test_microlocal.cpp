#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ccycle/generate.hpp"
#include "ccycle/microlocal.hpp"

using namespace ccycle;

namespace {

QVec form(std::initializer_list<long long> cs) {
  QVec v;
  for (long long c : cs) v.push_back(Rat(c));
  return v;
}

ArrangementModel model(const Arrangement& a) { return strat_poset_from_arrangement(a); }

// [P^j] -> [P^{j-(n-k)}] for a linear embedding P^k -> P^n.
GradedClass gysin_to(const GradedClass& x, int k) {
  GradedClass out(k);
  for (int j = x.n - k; j <= x.n; ++j) out.coeffs[j - (x.n - k)] = x.coeffs[j];
  return out;
}

}  // namespace

TEST_CASE("support of characteristic cycles") {
  ArrangementModel one = model(Arrangement(2, {form({0, 0, 1})}));
  CHECK(support(cc(zero_function(one.poset), one.table), one.poset).components.empty());

  PosetPtr t = trivial_poset(2);
  auto s = support(cc(constant_function(t, 1), EulerTable::all_ones(*t)), t);
  REQUIRE(s.components.size() == 1);
  CHECK(s.components[0].rows.empty());  // zero section

  const std::string& line_id = one.poset->strata[1].id;
  auto sl = support(cc(indicator_of_closure(one.poset, line_id), one.table), one.poset);
  REQUIRE(sl.components.size() == 1);
  CHECK(sl.components[0].stratum_id == line_id);
}

TEST_CASE("is_splayed_pair examples") {
  ArrangementModel ax = model(Arrangement(2, {form({1, 0, 0})}));
  ArrangementModel ay = model(Arrangement(2, {form({0, 1, 0})}));
  ConstructibleFunction ix = indicator_of_closure(ax.poset, ax.poset->strata[1].id);
  ConstructibleFunction iy = indicator_of_closure(ay.poset, ay.poset->strata[1].id);
  CHECK(is_splayed_pair(ax, ix, ay, iy).ok);

  // Locally constant alpha (empty arrangement) is splayed with anything.
  ArrangementModel empty = model(Arrangement(2, {}));
  CHECK(is_splayed_pair(empty, constant_function(empty.poset, 5), ay, iy).ok);

  // The same hyperplane twice is not splayed.
  auto res = is_splayed_pair(ax, ix, ax, ix);
  CHECK_FALSE(res.ok);
  REQUIRE(res.witness.has_value());
  CHECK_FALSE(res.witness->covector.empty());
}

TEST_CASE("is_noncharacteristic_diagonal examples") {
  ConicSupport zero{2, {{"F0", {}}}};
  CHECK(is_noncharacteristic_diagonal(zero, zero).ok);

  ConicSupport l1{2, {{"L", {form({0, 0, 1})}}}};
  ConicSupport l2{2, {{"L'", {form({0, 1, 0})}}}};
  CHECK(is_noncharacteristic_diagonal(l1, l2).ok);

  auto res = is_noncharacteristic_diagonal(l1, l1);
  CHECK_FALSE(res.ok);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->covector == form({0, 0, 1}));
}

TEST_CASE("is_noncharacteristic_map examples") {
  ConicSupport pt{2, {{"p", {form({1, 0, 0}), form({0, 1, 0})}}}};
  CHECK(is_noncharacteristic_map(LinearMapData::projection(1, 2), pt).ok);

  // Line through the point (0:0:1) is characteristic for T*_pt; a line
  // missing the point is fine.
  QMat through{form({1, 0, 0}), form({0, 0, 1})};  // image contains (0:0:1)
  QMat missing{form({1, 0, 0}), form({0, 1, 0})};  // x2 = 0 misses (0:0:1)
  CHECK_FALSE(is_noncharacteristic_map(LinearMapData::embedding(through), pt).ok);
  CHECK(is_noncharacteristic_map(LinearMapData::embedding(missing), pt).ok);

  // Identity embedding is never characteristic.
  QMat id3{form({1, 0, 0}), form({0, 1, 0}), form({0, 0, 1})};
  ArrangementModel one = model(Arrangement(2, {form({0, 0, 1})}));
  CHECK(is_noncharacteristic_map(LinearMapData::embedding(id3), full_flat_support(one)).ok);
}

TEST_CASE("pullback_cycle along projections and embeddings") {
  // Projection P^1 x P^2 -> P^2 on [T*_pt P^2].
  Arrangement pts(2, {form({1, 0, 0}), form({0, 1, 0})});
  ArrangementModel m2 = model(pts);
  int pt_idx = -1;
  for (size_t i = 0; i < m2.poset->strata.size(); ++i)
    if (m2.poset->strata[i].dim == 0) pt_idx = static_cast<int>(i);
  REQUIRE(pt_idx >= 0);
  LagrangianCycle l;
  l.terms.push_back({m2.poset->strata[pt_idx].id, 0, 1});
  auto pulled = pullback_cycle(LinearMapData::projection(1, 2), l, m2);
  REQUIRE(pulled.cycle.terms.size() == 1);
  CHECK(pulled.cycle.terms[0].stratum_id == "F0*" + m2.poset->strata[pt_idx].id);
  CHECK(pulled.cycle.terms[0].coeff == 1);

  // Identity embedding acts as the identity on cycles.
  QMat id3{form({1, 0, 0}), form({0, 1, 0}), form({0, 0, 1})};
  auto same = pullback_cycle(LinearMapData::embedding(id3), l, m2);
  CHECK(same.cycle.coeff_of(m2.poset->strata[pt_idx].id) == 1);

  // Transversal line against [T*_{L'}]: image of the conormal is the conormal
  // of the intersection point.
  ArrangementModel lm = model(Arrangement(2, {form({0, 0, 1})}));
  LagrangianCycle ll;
  ll.terms.push_back({lm.poset->strata[1].id, 1, -1});
  QMat line{form({1, 0, 0}), form({0, 1, 1})};
  auto restr = pullback_cycle(LinearMapData::embedding(line), ll, lm);
  REQUIRE(restr.cycle.terms.size() == 1);
  CHECK(restr.cycle.terms[0].dim_z == 0);
  CHECK(restr.cycle.terms[0].coeff == -1);
}

TEST_CASE("pullback theorem for projections (a, b <= 2)") {
  std::mt19937_64 rng(9);
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      for (int rep = 0; rep < 5; ++rep) {
        Arrangement arr = random_arrangement_in_block(b, 0, b, std::min(b + 1, 3), rng);
        ArrangementModel m = model(arr);
        ConstructibleFunction gamma = random_flat_function(m, rng);
        auto pulled = pullback_cycle(LinearMapData::projection(a, b), cc(gamma, m.table), m);
        // cc of the pulled-back function on the product stratification.
        PosetPtr pa = trivial_poset(a);
        EulerTable ta = EulerTable::all_ones(*pa);
        ConstructibleFunction up = cross_fn(constant_function(pa, 1), gamma);
        EulerTable te = product_euler_table(pa, ta, m.poset, m.table);
        LagrangianCycle expect = cc(up, te);
        long long sign = (a % 2 == 0) ? 1 : -1;  // (-1)^{m-n} with m-n = a
        CHECK(pulled.cycle == scale(sign, expect));
      }
}

TEST_CASE("pullback theorem for 50 random transversal embeddings") {
  std::mt19937_64 rng(10);
  int done = 0;
  while (done < 50) {
    int n = 2 + (done % 2);
    int k = n - 1 - (done % 3 == 0 && n == 3 ? 1 : 0);
    Arrangement arr = random_arrangement_in_block(n, 0, n, 3, rng);
    ArrangementModel m = model(arr);
    ConstructibleFunction gamma = random_flat_function(m, rng);
    QMat e = random_transversal_embedding(n, k, full_flat_support(m), rng);
    LinearMapData f = LinearMapData::embedding(e);
    auto pulled = pullback_cycle(f, cc(gamma, m.table), m);
    RestrictedModel r = restrict_model(m, e);
    LagrangianCycle expect = cc(r.pullback(gamma), r.model.table);
    long long sign = ((n - k) % 2 == 0) ? 1 : -1;  // (-1)^{m-n}, m = k
    CHECK(pulled.cycle == scale(sign, expect));
    ++done;
  }
}

TEST_CASE("functoriality of pullback along embedding chains") {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 10; ++rep) {
    Arrangement arr = random_arrangement_in_block(3, 0, 3, 3, rng);
    ArrangementModel m3 = model(arr);
    ConstructibleFunction gamma = random_flat_function(m3, rng);
    LagrangianCycle l = cc(gamma, m3.table);
    QMat e_outer = random_transversal_embedding(3, 2, full_flat_support(m3), rng);
    RestrictedModel mid = restrict_model(m3, e_outer);
    QMat e_inner = random_transversal_embedding(2, 1, full_flat_support(mid.model), rng);

    auto composite = pullback_cycle(
        LinearMapData::composite(
            {LinearMapData::embedding(e_outer), LinearMapData::embedding(e_inner)}),
        l, m3);
    auto step1 = pullback_cycle(LinearMapData::embedding(e_outer), l, m3);
    auto step2 = pullback_cycle(LinearMapData::embedding(e_inner), step1.cycle, mid.model);
    CHECK(composite.cycle == step2.cycle);
  }
}

TEST_CASE("Segre classes commute with transversal embedding Gysin maps") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 15; ++rep) {
    int n = 2 + (rep % 2);
    Arrangement arr = random_arrangement_in_block(n, 0, n, 2, rng);
    ArrangementModel m = model(arr);
    QMat e = random_transversal_embedding(n, n - 1, full_flat_support(m), rng);
    RestrictedModel r = restrict_model(m, e);
    for (const auto& z : m.poset->strata) {
      if (z.dim == n) continue;  // zero section handled by the flat case k = n
      LagrangianCycle l;
      l.terms.push_back({z.id, z.dim, 1});
      auto pulled = pullback_cycle(LinearMapData::embedding(e), l, m);
      GradedClass lhs = gysin_to(segre(conormal_symbol(m.poset, z.id)), n - 1);
      GradedClass rhs(n - 1);
      for (const auto& t : pulled.cycle.terms)
        rhs = add(rhs, scale(t.coeff, segre(conormal_symbol(r.model.poset, t.stratum_id))));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("index_pairing examples and refusal") {
  for (int n = 1; n <= 4; ++n) {
    PosetPtr t = trivial_poset(n);
    LagrangianCycle z = cc(constant_function(t, 1), EulerTable::all_ones(*t));
    long long v = index_pairing(z, t, z, t, true);
    long long sign = (n % 2 == 0) ? 1 : -1;
    CHECK(sign * v == n + 1);
  }
  PosetPtr t2 = trivial_poset(2);
  CHECK(index_pairing(LagrangianCycle{}, t2, LagrangianCycle{}, t2, true) == 0);

  // Transversal lines: (-1)^2 v = chi(pt) = 1.
  ArrangementModel la = model(Arrangement(2, {form({0, 0, 1})}));
  ArrangementModel lb = model(Arrangement(2, {form({0, 1, 0})}));
  LagrangianCycle ca = cc(indicator_of_closure(la.poset, la.poset->strata[1].id), la.table);
  LagrangianCycle cb = cc(indicator_of_closure(lb.poset, lb.poset->strata[1].id), lb.table);
  CHECK(index_pairing(ca, la.poset, cb, lb.poset, true) == 1);

  CHECK_THROWS_AS(index_pairing(ca, la.poset, cb, lb.poset, false), microlocal_error);
}

TEST_CASE("index formula on certified pairs and refusal on a shared line") {
  std::mt19937_64 rng(14);
  for (int rep = 0; rep < 10; ++rep) {
    auto [a, b] = generic_arrangement_pair(2, 2, 2, rng);
    ArrangementModel ma = model(a), mb = model(b);
    ConstructibleFunction alpha = random_flat_function(ma, rng);
    ConstructibleFunction beta = random_flat_function(mb, rng);
    IndexResult res = verify_index_formula(ma, alpha, mb, beta);
    CHECK(res.noncharacteristic.ok);
    CHECK_FALSE(res.refused);
    CHECK(res.equal);
  }
  ArrangementModel la = model(Arrangement(2, {form({0, 0, 1})}));
  ConstructibleFunction il = indicator_of_closure(la.poset, la.poset->strata[1].id);
  IndexResult bad = verify_index_formula(la, il, la, il);
  CHECK(bad.refused);
  CHECK(bad.noncharacteristic.witness.has_value());
}

TEST_CASE("intersection formula golden cases") {
  // alpha = beta = 1_{P^n}.
  for (int n = 1; n <= 3; ++n) {
    ArrangementModel m = model(Arrangement(n, {}));
    ConstructibleFunction one_fn = constant_function(m.poset, 1);
    IntersectionResult r = verify_intersection_formula(m, one_fn, m, one_fn);
    CHECK(r.hypothesis());
    CHECK(r.equal);
  }

  // Two transversal lines in P^2: both sides [P^0].
  ArrangementModel la = model(Arrangement(2, {form({0, 0, 1})}));
  ArrangementModel lb = model(Arrangement(2, {form({0, 1, 0})}));
  ConstructibleFunction ia = indicator_of_closure(la.poset, la.poset->strata[1].id);
  ConstructibleFunction ib = indicator_of_closure(lb.poset, lb.poset->strata[1].id);
  IntersectionResult r = verify_intersection_formula(la, ia, lb, ib);
  CHECK(r.hypothesis());
  CHECK(r.lhs == GradedClass::basis(2, 0));
  CHECK(r.rhs == GradedClass::basis(2, 0));
  CHECK(r.equal);

  // Splayed coordinate pair {x=0}, {y=0}: certified via splayedness.
  ArrangementModel ax = model(Arrangement(2, {form({1, 0, 0})}));
  ArrangementModel ay = model(Arrangement(2, {form({0, 1, 0})}));
  ConstructibleFunction ix = indicator_of_closure(ax.poset, ax.poset->strata[1].id);
  ConstructibleFunction iy = indicator_of_closure(ay.poset, ay.poset->strata[1].id);
  IntersectionResult rs = verify_intersection_formula(ax, ix, ay, iy);
  CHECK(rs.splayed.ok);
  CHECK(rs.lhs == GradedClass::basis(2, 0));
  CHECK(rs.equal);
}

TEST_CASE("intersection formula negative control: the same line twice") {
  ArrangementModel la = model(Arrangement(2, {form({0, 0, 1})}));
  ConstructibleFunction il = indicator_of_closure(la.poset, la.poset->strata[1].id);
  IntersectionResult r = verify_intersection_formula(la, il, la, il);
  CHECK_FALSE(r.hypothesis());
  CHECK(r.lhs == GradedClass::basis(2, 0));
  CHECK(r.rhs == GradedClass(2, {5, 1, 0}));
  CHECK_FALSE(r.equal);
}

TEST_CASE("splayed implies non-characteristic on 200 random split instances") {
  std::mt19937_64 rng(15);
  int done = 0, splayed_count = 0;
  while (done < 200) {
    int n = 2 + (done % 2);
    std::uniform_int_distribution<int> split_dist(0, n - 1);
    int split = split_dist(rng);
    int ka = split == 0 ? 1 : 2;
    int kb = split == n - 1 ? 1 : 2;
    auto [a, b] = splayed_coordinate_pair(n, split, ka, kb, rng);
    ArrangementModel ma = model(a), mb = model(b);
    ConstructibleFunction alpha = random_flat_function(ma, rng);
    ConstructibleFunction beta = random_flat_function(mb, rng);
    if (is_splayed_pair(ma, alpha, mb, beta).ok) {
      ++splayed_count;
      CHECK(is_noncharacteristic_diagonal(support(cc(alpha, ma.table), ma.poset),
                                          support(cc(beta, mb.table), mb.poset))
                .ok);
    }
    ++done;
  }
  CHECK(splayed_count == 200);  // coordinate splits are always splayed
}

TEST_CASE("support calculus for products and projection pullbacks") {
  std::mt19937_64 rng(16);
  for (int rep = 0; rep < 10; ++rep) {
    Arrangement arr = random_arrangement_in_block(2, 0, 2, 2, rng);
    ArrangementModel m = model(arr);
    ConstructibleFunction alpha = random_flat_function(m, rng);
    ConstructibleFunction beta = random_flat_function(m, rng);
    LagrangianCycle la = cc(alpha, m.table);
    LagrangianCycle lb = cc(beta, m.table);
    // (co2): CC(alpha x beta) has exactly the product components.
    ConstructibleFunction ab = cross_fn(alpha, beta);
    EulerTable te = product_euler_table(m.poset, m.table, m.poset, m.table);
    LagrangianCycle lab = cc(ab, te);
    CHECK(lab.terms.size() == la.terms.size() * lb.terms.size());
    for (const auto& ta : la.terms)
      for (const auto& tb : lb.terms)
        CHECK(lab.coeff_of(ta.stratum_id + "*" + tb.stratum_id) == ta.coeff * tb.coeff);
    // (co3): projection pullback support = zero-section x support.
    auto pulled = pullback_cycle(LinearMapData::projection(1, 2), la, m);
    for (const auto& t : pulled.cycle.terms)
      CHECK(t.stratum_id.substr(0, 3) == "F0*");
  }
}

TEST_CASE("VRR for the projection P^1 x P^1 -> P^1 with a point") {
  ArrangementModel m = model(Arrangement(1, {form({1, 0})}));
  ConstructibleFunction ipt = indicator_of_closure(m.poset, m.poset->strata[1].id);
  VrrResult r = verify_vrr(LinearMapData::projection(1, 1), m, ipt);
  CHECK(r.noncharacteristic.ok);
  CHECK(r.main_equal);
  CHECK(r.corollary_equal);
  REQUIRE(r.lhs_bi.has_value());
  // Both sides equal [P^1 x pt]: csm(1_pt) = [pt], c-corrections cancel in
  // degree (1,0).
  CHECK(r.lhs_bi->coeffs[1][0] == 1);
}

TEST_CASE("VRR for the identity embedding") {
  QMat id3{form({1, 0, 0}), form({0, 1, 0}), form({0, 0, 1})};
  std::mt19937_64 rng(18);
  Arrangement arr = random_arrangement_in_block(2, 0, 2, 2, rng);
  ArrangementModel m = model(arr);
  ConstructibleFunction gamma = random_flat_function(m, rng);
  VrrResult r = verify_vrr(LinearMapData::embedding(id3), m, gamma);
  CHECK(r.noncharacteristic.ok);
  CHECK(r.main_equal);
  CHECK(r.corollary_equal);
  CHECK(*r.lhs_g == *r.rhs_g);
}

TEST_CASE("VRR for a transversal line against another line in P^2") {
  ArrangementModel m = model(Arrangement(2, {form({0, 0, 1})}));
  ConstructibleFunction il = indicator_of_closure(m.poset, m.poset->strata[1].id);
  QMat line{form({1, 0, 0}), form({0, 1, 1})};
  VrrResult r = verify_vrr(LinearMapData::embedding(line), m, il);
  CHECK(r.noncharacteristic.ok);
  CHECK(r.main_equal);
  CHECK(r.corollary_equal);
  // i^!(c_*(1_{L'})) = (1+h) cap c_*(1_pt) = [pt].
  CHECK(gysin_to(csm(il, m.table), 1) == GradedClass::basis(1, 0));
}
