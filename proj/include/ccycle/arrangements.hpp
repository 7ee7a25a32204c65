#pragma once

#include <map>
#include <string>
#include <vector>

#include "ccycle/linalg.hpp"
#include "ccycle/strata.hpp"

namespace ccycle {

struct arrangement_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Finite set of hyperplanes in P^n over the rationals.
struct Arrangement {
  int n = 0;
  std::vector<QVec> hyperplanes;  // coefficient vectors of length n+1

  Arrangement() = default;
  Arrangement(int n_, std::vector<QVec> hs);  // validates
};

struct Flat {
  std::string id;
  int dim = 0;        // projective dimension
  QMat rows;          // rref rows cutting out the flat (empty for the ambient)
  std::vector<int> members;  // indices of hyperplanes containing the flat
};

struct FlatLattice {
  int n = 0;
  std::vector<Flat> flats;  // sorted by decreasing dim, ties by row-space key
  std::map<std::string, int> by_key;

  bool contains(int sub, int sup) const;  // flats[sub] ⊆ flats[sup]
  int find_by_rows(const QMat& rows) const;  // -1 if absent
  /// Möbius table on the reverse-inclusion order: mobius[i][j] is defined for
  /// flats[j] ⊆ flats[i] (the interval from flats[i] down to flats[j]).
  std::vector<std::vector<long long>> mobius;
};

FlatLattice build_lattice(const Arrangement& a);

/// Σ_F μ(ambient, F)·t^{dim F}; coefficient of t^d at index d.
std::vector<long long> char_poly(const FlatLattice& l);

/// Characteristic polynomial of the central arrangement in C^{n+1} (the cone),
/// including the zero subspace when it occurs; coefficient of t^d at index d,
/// with d the linear dimension. Used for deletion-restriction checks.
std::vector<long long> central_char_poly(const Arrangement& a);

/// Arrangement obtained by deleting hyperplane h.
Arrangement deletion(const Arrangement& a, int h);
/// Restriction of the remaining hyperplanes to hyperplane h, as an arrangement
/// in P^{n-1} via a parametrization of h.
Arrangement restriction(const Arrangement& a, int h);

struct ArrangementModel {
  Arrangement arr;
  FlatLattice lattice;
  PosetPtr poset;   // strata ids equal flat ids
  EulerTable table; // all ones: flat closures are smooth
};

/// Stratification of P^n by the open flat strata, with chi_c computed
/// recursively and smooth-closure Euler/Mather data filled in.
ArrangementModel strat_poset_from_arrangement(const Arrangement& a);

/// Common refinement of two arrangement-generated posets (union arrangement).
Refinement refine_arrangement_posets(const PosetPtr& p1, const PosetPtr& p2);

/// Restriction of an arrangement model along a linear embedding P^k -> P^n
/// given by a full-rank (k+1)x(n+1) matrix (rows span the image).
struct RestrictedModel {
  ArrangementModel model;  // on P^k
  /// original flat id -> restricted flat id, for flats meeting the image
  std::map<std::string, std::string> flat_map;
  /// original stratum id for each restricted stratum (indexed like the
  /// restricted poset)
  std::vector<int> to_original;
  ConstructibleFunction pullback(const ConstructibleFunction& gamma) const;
};
RestrictedModel restrict_model(const ArrangementModel& m, const QMat& embed);

/// Union of two arrangements in the same P^n, proportional forms deduplicated.
Arrangement union_arrangement(const Arrangement& a, const Arrangement& b);

}  // namespace ccycle
