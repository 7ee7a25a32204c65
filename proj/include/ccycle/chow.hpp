#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ccycle {

struct dimension_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Homology class on P^n: integer combination of the linear classes
/// [P^0], ..., [P^n]. coeffs[i] is the coefficient of [P^i].
struct GradedClass {
  int n = 0;
  std::vector<long long> coeffs;

  GradedClass() : coeffs(1, 0) {}
  explicit GradedClass(int n_) : n(n_), coeffs(n_ + 1, 0) {}
  GradedClass(int n_, std::vector<long long> c);

  static GradedClass basis(int n, int i);  // [P^i] in P^n
  static GradedClass zero(int n) { return GradedClass(n); }

  bool is_zero() const;
  bool operator==(const GradedClass&) const = default;
};

/// Cohomology class on P^n: integer polynomial in the hyperplane class h,
/// truncated at h^n. coeffs[c] is the coefficient of h^c.
struct CohClass {
  int n = 0;
  std::vector<long long> coeffs;

  CohClass() : coeffs(1, 0) {}
  explicit CohClass(int n_) : n(n_), coeffs(n_ + 1, 0) {}
  CohClass(int n_, std::vector<long long> c);

  static CohClass one(int n);
  static CohClass h_power(int n, int c);

  bool operator==(const CohClass&) const = default;
};

/// Homology class on P^n × P^m: coeffs[i][j] is the coefficient of [P^i × P^j].
struct BiGradedClass {
  int n = 0, m = 0;
  std::vector<std::vector<long long>> coeffs;

  BiGradedClass() : coeffs(1, std::vector<long long>(1, 0)) {}
  BiGradedClass(int n_, int m_)
      : n(n_), m(m_), coeffs(n_ + 1, std::vector<long long>(m_ + 1, 0)) {}

  bool is_zero() const;
  bool operator==(const BiGradedClass&) const = default;
};

/// Cohomology class on P^n × P^m in the two hyperplane classes h1, h2.
struct BiCohClass {
  int n = 0, m = 0;
  std::vector<std::vector<long long>> coeffs;

  BiCohClass() : coeffs(1, std::vector<long long>(1, 0)) {}
  BiCohClass(int n_, int m_)
      : n(n_), m(m_), coeffs(n_ + 1, std::vector<long long>(m_ + 1, 0)) {}

  bool operator==(const BiCohClass&) const = default;
};

/// Class in the intersection ring of the projective completion P(V ⊕ 1) of a
/// rank-r bundle V on P^n, in normal form over the basis h^a ζ^b with
/// 0 ≤ a ≤ n, 0 ≤ b ≤ r. Here ζ = c1(O(1)) and the defining relation
/// ζ^{r+1} + c_1(V) ζ^r + ... + c_r(V) ζ = 0 is maintained.
struct BundleRingClass {
  int n = 0;        // base dimension
  int rank_v = 0;   // rank of V (fiber dimension of P(V ⊕ 1))
  CohClass chern_v; // total Chern class of V on the base
  std::vector<std::vector<long long>> coeffs;  // coeffs[a][b] of h^a ζ^b

  BundleRingClass() = default;
  BundleRingClass(int n_, int rank_v_, CohClass chern_v_);

  bool is_zero() const;
  bool operator==(const BundleRingClass& o) const {
    return n == o.n && rank_v == o.rank_v && chern_v == o.chern_v && coeffs == o.coeffs;
  }
};

// ---- GradedClass / CohClass arithmetic ----

GradedClass add(const GradedClass& x, const GradedClass& y);
GradedClass negate(const GradedClass& x);
GradedClass scale(long long k, const GradedClass& x);

/// Intersection product in H_*(P^n): [P^i]·[P^j] = [P^{i+j-n}], zero below [P^0].
GradedClass mul(const GradedClass& x, const GradedClass& y);

/// Cap product: h^c ∩ [P^i] = [P^{i-c}], zero below [P^0].
GradedClass cap(const CohClass& u, const GradedClass& x);

CohClass mul(const CohClass& u, const CohClass& v);
CohClass add(const CohClass& u, const CohClass& v);

/// Multiplicative inverse of a class with constant term ±1.
CohClass inverse(const CohClass& u);

/// c(TP^n) = (1+h)^{n+1}, truncated.
CohClass chern_tangent(int n);

/// c(T*P^n) = (1-h)^{n+1}, truncated.
CohClass chern_cotangent(int n);

// ---- Products of projective spaces ----

BiGradedClass cross(const GradedClass& x, const GradedClass& y);
BiCohClass cross(const CohClass& u, const CohClass& v);
BiGradedClass add(const BiGradedClass& x, const BiGradedClass& y);
BiGradedClass scale(long long k, const BiGradedClass& x);
BiCohClass mul(const BiCohClass& u, const BiCohClass& v);
BiCohClass inverse(const BiCohClass& u);
BiGradedClass cap(const BiCohClass& u, const BiGradedClass& x);

/// Gysin pushforward for the diagonal P^n -> P^n × P^n on ambient classes:
/// [P^i × P^j] -> [P^{i+j-n}], zero below [P^0].
GradedClass diagonal_gysin(const BiGradedClass& z);

// ---- Projective bundle ring ----

BundleRingClass br_zero(int n, int rank_v, CohClass chern_v);
BundleRingClass br_monomial(int n, int rank_v, CohClass chern_v, int a, int b);
BundleRingClass add(const BundleRingClass& x, const BundleRingClass& y);
BundleRingClass scale(long long k, const BundleRingClass& x);

/// Product in the bundle ring, reduced to normal form.
BundleRingClass mul(const BundleRingClass& x, const BundleRingClass& y);

/// Multiply by ζ and renormalize.
BundleRingClass mul_zeta(const BundleRingClass& x);

/// Multiply by a class pulled back from the base.
BundleRingClass mul_base(const CohClass& u, const BundleRingClass& x);

/// Segre class s(V ⊕ 1) = c(V)^{-1}, truncated at the base dimension.
CohClass segre_of_bundle(const BundleRingClass& x);

/// π_* : h^a ζ^b -> s_{b-r}(V ⊕ 1) h^{a+b-r} capped against [P^n].
GradedClass bundle_pushforward(const BundleRingClass& z);

inline long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace ccycle
