#pragma once

#include <string>
#include <vector>

#include "ccycle/chow.hpp"
#include "ccycle/strata.hpp"

namespace ccycle {

/// Conormal symbol [T*_Z P^n] for a stratum closure Z, together with the class
/// of its projective completion in the bundle ring of P(T*P^n ⊕ 1).
struct ConormalSymbol {
  std::string stratum_id;
  int n = 0;      // ambient dimension
  int dim_z = 0;  // dimension of the closure
  BundleRingClass completion;
};

struct CycleTerm {
  std::string stratum_id;
  int dim_z = 0;
  long long coeff = 0;
  bool operator==(const CycleTerm&) const = default;
};

/// Integer combination of conormal symbols over a fixed poset. Terms are kept
/// sorted by stratum id with zero coefficients dropped.
struct LagrangianCycle {
  std::vector<CycleTerm> terms;

  void normalize();
  bool is_zero() const { return terms.empty(); }
  long long coeff_of(const std::string& id) const;
  bool operator==(const LagrangianCycle&) const = default;
};

LagrangianCycle add(const LagrangianCycle& a, const LagrangianCycle& b);
LagrangianCycle scale(long long k, const LagrangianCycle& a);

/// Bundle ring of the projective completion P(T*P^n ⊕ 1).
BundleRingClass cotangent_bundle_ring_zero(int n);

/// Class of P(T*_Z P^n ⊕ 1) for a linear k-flat Z ⊂ P^n, in the bundle ring:
/// h^{n-k} · Σ_j c_j(T*P^k) h^j ζ^{k-j}.
BundleRingClass flat_completion_class(int n, int k);

/// Conormal symbol of a stratum with linear closure.
ConormalSymbol conormal_of_flat(int n, const std::string& stratum_id, int k);
ConormalSymbol conormal_symbol(const PosetPtr& poset, const std::string& stratum_id);

/// Characteristic cycle: CC(α) = Σ_Z c_Z·(-1)^{dim Z}·[T*_Z], where
/// α = Σ_Z c_Z Eu_{closure Z}.
LagrangianCycle cc(const ConstructibleFunction& alpha, const EulerTable& e);

/// Inverse of cc on cycles supported on the poset's conormal symbols.
ConstructibleFunction cc_inverse(const LagrangianCycle& l, const PosetPtr& poset,
                                 const EulerTable& e);

/// Stratified-Morse form: CC(α) = Σ_S (-1)^{dim S}·w_S(α)·[T*_{closure S}],
/// with the weights w_S(α) = Σ_T d_T·nmd[S][T] for the decomposition
/// α = Σ_T d_T·1_{closure T}.
LagrangianCycle cc_from_morse(const ConstructibleFunction& alpha, const MorseTable& m);
/// Same with explicit per-stratum weights.
LagrangianCycle cc_from_morse_weights(const PosetPtr& poset,
                                      const std::vector<long long>& weights);

/// Morse table induced by an Euler table: nmd[S][T] is the Eu-coefficient of
/// S in the decomposition of 1_{closure T}.
MorseTable morse_table_from_euler(const PosetPtr& poset, const EulerTable& e);

/// Segre class s_*(T*_Z P^n) = Σ_i π_*(ζ^i ∩ [P(T*_Z ⊕ 1)]) in H_*(P^n).
GradedClass segre(const ConormalSymbol& c);

/// Dual Chern-Mather class c(T*P^n) ∩ s_*(T*_Z P^n).
GradedClass dual_mather(const ConormalSymbol& c);

/// Dual CSM class via the conormal/Segre route:
/// Σ_Z c_Z·(-1)^{dim Z}·dual_mather(conormal Z).
GradedClass dual_csm(const ConstructibleFunction& alpha, const EulerTable& e);

}  // namespace ccycle
