#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ccycle/arrangements.hpp"
#include "ccycle/lagrangian.hpp"
#include "ccycle/strata.hpp"

namespace ccycle {

struct microlocal_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Conic support of a Lagrangian cycle: the conormal components that appear,
/// each remembered by the linear equations of its base flat. An empty row set
/// marks the zero section.
struct ConicSupport {
  struct Component {
    std::string stratum_id;
    QMat rows;
  };
  int n = 0;
  std::vector<Component> components;
};

ConicSupport support(const LagrangianCycle& l, const PosetPtr& poset);

/// Certificate of failure for a hypothesis check: the flat (or pair of flats)
/// where it fails and, when meaningful, a common conormal covector.
struct Witness {
  std::string description;
  QMat flat_rows;
  QVec covector;
};

struct CheckResult {
  bool ok = true;
  std::optional<Witness> witness;
};

/// Linear maps between (products of) projective spaces that the calculus can
/// pull back along: projections pr2 : P^a × P^b -> P^b, linear embeddings
/// P^k -> P^n given by a full-rank (k+1)x(n+1) matrix acting by y -> y·E, and
/// chains of embeddings (outermost first).
struct LinearMapData {
  struct Projection {
    int a = 0;  // discarded factor
    int b = 0;  // target
  };
  struct Embedding {
    QMat matrix;
  };
  struct Composite {
    std::vector<LinearMapData> parts;  // pulled back in order, parts[0] first
  };
  std::variant<Projection, Embedding, Composite> data;

  static LinearMapData projection(int a, int b);
  static LinearMapData embedding(QMat e);
  static LinearMapData composite(std::vector<LinearMapData> parts);
};

/// Is the pair (α, β) splayed, checked flat by flat on the lattice of the
/// union arrangement: at every flat where neither function is locally
/// constant, the two normal spaces must span complementarily.
CheckResult is_splayed_pair(const ArrangementModel& a, const ConstructibleFunction& alpha,
                            const ArrangementModel& b, const ConstructibleFunction& beta);

/// Splayedness of the two arrangements themselves (indicator functions of the
/// hyperplane unions).
CheckResult detect_splayed(const ArrangementModel& a, const ArrangementModel& b);

/// Non-characteristic condition for the diagonal: every pair of meeting
/// support components has transversal conormal spaces.
CheckResult is_noncharacteristic_diagonal(const ConicSupport& a, const ConicSupport& b);

/// Non-characteristic condition for a linear map against a conic support on
/// the target. Projections are always non-characteristic; an embedding fails
/// at a component whose equations become dependent on the image.
CheckResult is_noncharacteristic_map(const LinearMapData& f, const ConicSupport& s);

/// Pullback of a Lagrangian cycle along a non-characteristic map, together
/// with the stratification it lives on.
struct PullbackResult {
  LagrangianCycle cycle;
  PosetPtr poset;
};
PullbackResult pullback_cycle(const LinearMapData& f, const LagrangianCycle& l,
                              const ArrangementModel& target);

/// Intersection number of two conormal cycles in T*P^n: coefficient of [P^0]
/// in the pushforward of the product of the completion classes. Refuses
/// (throws microlocal_error) unless the caller certifies the diagonal
/// non-characteristic condition.
long long index_pairing(const LagrangianCycle& a, const PosetPtr& pa, const LagrangianCycle& b,
                        const PosetPtr& pb, bool noncharacteristic_certified);

/// Micro-local index formula: χ(α·β) = (-1)^n · #(CC(α) ∩ CC(β)). Refuses to
/// evaluate the pairing when the supports are not mutually non-characteristic.
struct IndexResult {
  CheckResult noncharacteristic;
  bool refused = false;
  long long lhs = 0;  // χ(α·β)
  long long rhs = 0;  // (-1)^n · pairing
  bool equal = false;
};
IndexResult verify_index_formula(const ArrangementModel& a, const ConstructibleFunction& alpha,
                                 const ArrangementModel& b, const ConstructibleFunction& beta);

/// Refined intersection formula: Δ^!(c_*(α) × c_*(β)) = c(TP^n) ∩ c_*(α·β),
/// with the hypothesis certified either by splayedness or by the diagonal
/// non-characteristic condition. Both sides are computed regardless, so a
/// failing uncertified case can be inspected.
struct IntersectionResult {
  CheckResult splayed;
  CheckResult noncharacteristic;
  bool hypothesis() const { return splayed.ok || noncharacteristic.ok; }
  GradedClass lhs;
  GradedClass rhs;
  bool equal = false;
};
IntersectionResult verify_intersection_formula(const ArrangementModel& a,
                                               const ConstructibleFunction& alpha,
                                               const ArrangementModel& b,
                                               const ConstructibleFunction& beta);

/// Verdier-Riemann-Roch for a non-characteristic map f : M -> N:
///   f^!(c(TN)^{-1} ∩ c_*(γ)) = c(TM)^{-1} ∩ c_*(f^*γ),
/// plus the corollary form (submersion: c(T_f) ∩ f^!c_*(γ) = c_*(f^*γ);
/// embedding: f^!c_*(γ) = c(N) ∩ c_*(f^*γ) for the normal bundle N).
struct VrrResult {
  CheckResult noncharacteristic;
  bool main_equal = false;
  bool corollary_equal = false;
  // Sides of the main identity: graded on P^k for embeddings, bigraded on
  // P^a × P^b for projections.
  std::optional<GradedClass> lhs_g, rhs_g;
  std::optional<BiGradedClass> lhs_bi, rhs_bi;
};
VrrResult verify_vrr(const LinearMapData& f, const ArrangementModel& target,
                     const ConstructibleFunction& gamma);

}  // namespace ccycle
