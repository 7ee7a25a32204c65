#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ccycle/arrangements.hpp"
#include "ccycle/generate.hpp"
#include "ccycle/lagrangian.hpp"
#include "helpers.hpp"

using namespace ccycle;

namespace {

QVec form(std::initializer_list<long long> cs) {
  QVec v;
  for (long long c : cs) v.push_back(Rat(c));
  return v;
}

// Pushforward to P^n of c(T*P^k) cap [P^k]: the dual Mather class of a smooth
// linear flat.
GradedClass dual_smooth_flat(int n, int k) {
  GradedClass out(n);
  for (int j = 0; j <= k; ++j) out.coeffs[k - j] = (j % 2 == 0 ? 1 : -1) * binom(k + 1, j);
  return out;
}

}  // namespace

TEST_CASE("cc on Euler-obstruction columns and constants") {
  std::mt19937_64 rng(1);
  PosetPtr p = test_helpers::random_poset(rng, 8);
  EulerTable e = test_helpers::random_unitriangular(rng, p);
  for (const auto& z : p->strata) {
    LagrangianCycle l = cc(euler_obstruction(p, e, z.id), e);
    REQUIRE(l.terms.size() == 1);
    CHECK(l.terms[0].stratum_id == z.id);
    CHECK(l.terms[0].coeff == (z.dim % 2 == 0 ? 1 : -1));
  }
  CHECK(cc(zero_function(p), e).is_zero());
  for (int n = 1; n <= 4; ++n) {
    PosetPtr t = trivial_poset(n);
    LagrangianCycle l = cc(constant_function(t, 1), EulerTable::all_ones(*t));
    REQUIRE(l.terms.size() == 1);
    CHECK(l.terms[0].coeff == (n % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("cc_inverse on single conormal terms") {
  PosetPtr t = trivial_poset(3);
  EulerTable e = EulerTable::all_ones(*t);
  // (-1)^n [zero-section] -> 1_{P^n}.
  LagrangianCycle l;
  l.terms.push_back({"F0", 3, -1});
  CHECK(cc_inverse(l, t, e).values == std::vector<long long>{1});
  CHECK(cc_inverse(LagrangianCycle{}, t, e).is_zero());
}

TEST_CASE("cc round trips both ways on 100 random posets") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    PosetPtr p = test_helpers::random_poset(rng, 12);
    EulerTable e = test_helpers::random_unitriangular(rng, p);
    ConstructibleFunction alpha = test_helpers::random_function(rng, p);
    LagrangianCycle l = cc(alpha, e);
    CHECK(cc_inverse(l, p, e).values == alpha.values);
    CHECK(cc(cc_inverse(l, p, e), e) == l);
  }
}

TEST_CASE("cc_from_morse examples") {
  // Smooth single stratum: nmd = 1, one term.
  PosetPtr t = trivial_poset(2);
  MorseTable m;
  m.nmd["F0"]["F0"] = 1;
  LagrangianCycle l = cc_from_morse(constant_function(t, 1), m);
  REQUIRE(l.terms.size() == 1);
  CHECK(l.terms[0].coeff == 1);
  CHECK(cc_from_morse(zero_function(t), m).is_zero());

  // Point < line in P^2 via the one-line arrangement: the induced Morse table
  // must give cc(1_{closure L}) = -[T*_L] with zero weight at the smaller
  // strata.
  ArrangementModel one = strat_poset_from_arrangement(Arrangement(2, {form({0, 0, 1})}));
  MorseTable induced = morse_table_from_euler(one.poset, one.table);
  const std::string& line_id = one.poset->strata[1].id;
  ConstructibleFunction il = indicator_of_closure(one.poset, line_id);
  CHECK(cc_from_morse(il, induced) == cc(il, one.table));
  CHECK(cc(il, one.table).coeff_of(line_id) == -1);
}

TEST_CASE("cc_from_morse agrees with cc on arrangement posets") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 25; ++t) {
    int n = 2 + (t % 2);
    Arrangement a = random_arrangement_in_block(n, 0, n, 3, rng);
    ArrangementModel m = strat_poset_from_arrangement(a);
    if (m.poset->strata.size() > 10) continue;
    MorseTable induced = morse_table_from_euler(m.poset, m.table);
    ConstructibleFunction alpha = random_flat_function(m, rng);
    CHECK(cc_from_morse(alpha, induced) == cc(alpha, m.table));
  }
}

TEST_CASE("segre of conormal symbols of flats") {
  // Zero section: s_*(T*_{P^n} P^n) = [P^n].
  for (int n = 1; n <= 4; ++n)
    CHECK(segre(conormal_of_flat(n, "Z", n)) == GradedClass::basis(n, n));
  // Point: s_* = [pt].
  for (int n = 1; n <= 4; ++n)
    CHECK(segre(conormal_of_flat(n, "p", 0)) == GradedClass::basis(n, 0));
  // Line in the plane: c(N*)^{-1} cap [P^1] = [P^1] + [P^0].
  CHECK(segre(conormal_of_flat(2, "L", 1)) == GradedClass(2, {1, 1, 0}));
}

TEST_CASE("dual_mather of flats") {
  CHECK(dual_mather(conormal_of_flat(1, "Z", 1)) == GradedClass(1, {-2, 1}));
  CHECK(dual_mather(conormal_of_flat(3, "p", 0)) == GradedClass::basis(3, 0));
  CHECK(dual_mather(conormal_of_flat(2, "L", 1)) == GradedClass(2, {-2, 1, 0}));
}

TEST_CASE("Segre/Mather identity for all flats, 0 <= k <= n <= 4") {
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(dual_mather(conormal_of_flat(n, "Z", k)) == dual_smooth_flat(n, k));
}

TEST_CASE("dual_csm examples") {
  PosetPtr t = trivial_poset(1);
  EulerTable e = EulerTable::all_ones(*t);
  CHECK(dual_csm(constant_function(t, 1), e) == GradedClass(1, {2, -1}));
  CHECK(dual_csm(zero_function(t), e).is_zero());

  ArrangementModel one = strat_poset_from_arrangement(Arrangement(2, {form({0, 0, 1})}));
  const std::string& line_id = one.poset->strata[1].id;
  CHECK(dual_csm(indicator_of_closure(one.poset, line_id), one.table) ==
        GradedClass(2, {2, -1, 0}));
}

TEST_CASE("sign law between dual_csm and csm") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 20; ++t) {
    int n = 2 + (t % 3);
    Arrangement a = random_arrangement_in_block(n, 0, n, 3, rng);
    ArrangementModel m = strat_poset_from_arrangement(a);
    ConstructibleFunction alpha = random_flat_function(m, rng);
    GradedClass c = csm(alpha, m.table);
    GradedClass d = dual_csm(alpha, m.table);
    for (int i = 0; i <= n; ++i) CHECK(d.coeffs[i] == (i % 2 == 0 ? 1 : -1) * c.coeffs[i]);
  }
}

TEST_CASE("cycle arithmetic normalizes") {
  LagrangianCycle a, b;
  a.terms.push_back({"X", 1, 2});
  b.terms.push_back({"X", 1, -2});
  b.terms.push_back({"Y", 0, 1});
  LagrangianCycle s = add(a, b);
  CHECK(s.terms.size() == 1);
  CHECK(s.coeff_of("Y") == 1);
  CHECK(scale(0, s).is_zero());
}
