#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ccycle/chow.hpp"
#include "ccycle/linalg.hpp"

namespace ccycle {

struct poset_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Stratum {
  std::string id;
  int dim = 0;
  long long chi_c = 0;  // compactly supported Euler characteristic of the open stratum
  std::set<std::string> below;  // strata strictly contained in the closure

  // Linear geometry of the closure, when available: rows cut out the flat.
  std::optional<QMat> flat;

  // Classes pushed to the ambient model. Single projective factor:
  std::optional<GradedClass> pushforward;
  std::optional<GradedClass> mather;
  // Product ambient:
  std::optional<BiGradedClass> pushforward_bi;
  std::optional<BiGradedClass> mather_bi;
};

/// Stratification poset. Strata are kept sorted by decreasing dimension,
/// ties broken by id, which fixes the back-substitution order.
struct StratPoset {
  enum class Ambient { Proj, BiProj };
  Ambient ambient = Ambient::Proj;
  int n = 0;
  int m = 0;  // second factor for BiProj

  std::vector<Stratum> strata;
  std::map<std::string, int> index;

  // For posets generated from an arrangement: the hyperplanes, so that
  // refinements can be rebuilt.
  std::optional<std::vector<QVec>> source_hyperplanes;

  const Stratum& at(const std::string& id) const;
  int idx(const std::string& id) const;
  bool leq(const std::string& s, const std::string& z) const;  // s in closure of z (or s==z)

  /// Validates order/dimension invariants and sorts strata; call after filling.
  void finalize();
};

using PosetPtr = std::shared_ptr<const StratPoset>;

/// Values of the Euler obstruction of each closure on each stratum:
/// e[Z][S], nonzero only for S ≤ Z, with e[Z][Z] = 1.
struct EulerTable {
  std::map<std::string, std::map<std::string, long long>> e;

  long long value(const std::string& z, const std::string& s) const;
  void validate(const StratPoset& poset) const;  // throws poset_error if not unitriangular

  static EulerTable all_ones(const StratPoset& poset);
};

struct ConstructibleFunction {
  PosetPtr poset;
  std::vector<long long> values;  // indexed like poset->strata

  ConstructibleFunction() = default;
  ConstructibleFunction(PosetPtr p, std::vector<long long> v);

  long long at(const std::string& id) const { return values[poset->idx(id)]; }
  bool is_zero() const;
  bool operator==(const ConstructibleFunction& o) const {
    return poset == o.poset && values == o.values;
  }
};

/// Normal-Morse-datum weights: nmd[S][T] is the weight of stratum S for the
/// indicator function of the closure of T; nonzero only for S ≤ T.
struct MorseTable {
  std::map<std::string, std::map<std::string, long long>> nmd;
  long long value(const std::string& s, const std::string& t) const;
};

// ---- constructors ----

ConstructibleFunction zero_function(PosetPtr p);
ConstructibleFunction constant_function(PosetPtr p, long long v);
/// 1 on every stratum in the closure of z (including z).
ConstructibleFunction indicator_of_closure(PosetPtr p, const std::string& z);
/// The column Eu_{closure(z)} of an Euler table, as a function.
ConstructibleFunction euler_obstruction(PosetPtr p, const EulerTable& e, const std::string& z);
ConstructibleFunction add(const ConstructibleFunction& a, const ConstructibleFunction& b);
ConstructibleFunction scale(long long k, const ConstructibleFunction& a);

/// Trivial one-stratum poset of P^n.
PosetPtr trivial_poset(int n);

/// Product poset of two single-factor posets: strata S×S', ids "S*S'",
/// dimensions add, chi_c multiplies, closure order is the product order.
PosetPtr product_poset(const PosetPtr& p, const PosetPtr& q);
EulerTable product_euler_table(const PosetPtr& p, const EulerTable& ep,
                               const PosetPtr& q, const EulerTable& eq);

// ---- operations ----

/// Coefficients c_Z with α = Σ_Z c_Z Eu_{closure(Z)}, by back-substitution in
/// decreasing dimension order. Indexed like poset->strata.
std::vector<long long> decompose_euler(const ConstructibleFunction& alpha, const EulerTable& e);

/// Σ_S chi_c(S)·α(S).
long long euler_integral(const ConstructibleFunction& alpha);

/// Pointwise product; requires the same poset.
ConstructibleFunction product(const ConstructibleFunction& alpha,
                              const ConstructibleFunction& beta);

/// CSM class c_*(α) = Σ_Z c_Z · c^Ma(closure Z), in H_*(P^n).
GradedClass csm(const ConstructibleFunction& alpha, const EulerTable& e);

/// CSM class on a product poset, in H_*(P^n × P^m).
BiGradedClass csm_bi(const ConstructibleFunction& alpha, const EulerTable& e);

/// External product α × β on the product poset.
ConstructibleFunction cross_fn(const ConstructibleFunction& alpha,
                               const ConstructibleFunction& beta);

/// Common refinement of two arrangement-generated posets, with transfer maps
/// pulling functions back to the refinement.
struct Refinement {
  PosetPtr poset;
  EulerTable table;
  std::vector<int> to_first;   // refined stratum index -> stratum index in P1
  std::vector<int> to_second;  // refined stratum index -> stratum index in P2
  ConstructibleFunction pull_first(const ConstructibleFunction& alpha) const;
  ConstructibleFunction pull_second(const ConstructibleFunction& beta) const;
};
Refinement common_refinement(const PosetPtr& p1, const PosetPtr& p2);

/// Smooth-closure Chern-Mather class of a k-flat pushed to H_*(P^n).
GradedClass smooth_flat_mather(int n, int k);

}  // namespace ccycle
