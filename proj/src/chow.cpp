#include "ccycle/chow.hpp"

#include <algorithm>

namespace ccycle {

namespace {
void check_same_n(int a, int b, const char* what) {
  if (a != b) throw dimension_mismatch(what);
}
}  // namespace

GradedClass::GradedClass(int n_, std::vector<long long> c) : n(n_), coeffs(std::move(c)) {
  if (coeffs.size() != static_cast<size_t>(n + 1))
    throw dimension_mismatch("GradedClass coefficient length");
}

GradedClass GradedClass::basis(int n, int i) {
  GradedClass g(n);
  g.coeffs.at(i) = 1;
  return g;
}

bool GradedClass::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](long long c) { return c == 0; });
}

CohClass::CohClass(int n_, std::vector<long long> c) : n(n_), coeffs(std::move(c)) {
  if (coeffs.size() != static_cast<size_t>(n + 1))
    throw dimension_mismatch("CohClass coefficient length");
}

CohClass CohClass::one(int n) {
  CohClass u(n);
  u.coeffs[0] = 1;
  return u;
}

CohClass CohClass::h_power(int n, int c) {
  CohClass u(n);
  u.coeffs.at(c) = 1;
  return u;
}

bool BiGradedClass::is_zero() const {
  for (const auto& row : coeffs)
    for (long long c : row)
      if (c != 0) return false;
  return true;
}

GradedClass add(const GradedClass& x, const GradedClass& y) {
  check_same_n(x.n, y.n, "add: ambient dimensions differ");
  GradedClass out(x.n);
  for (int i = 0; i <= x.n; ++i) out.coeffs[i] = x.coeffs[i] + y.coeffs[i];
  return out;
}

GradedClass negate(const GradedClass& x) { return scale(-1, x); }

GradedClass scale(long long k, const GradedClass& x) {
  GradedClass out(x.n);
  for (int i = 0; i <= x.n; ++i) out.coeffs[i] = k * x.coeffs[i];
  return out;
}

GradedClass mul(const GradedClass& x, const GradedClass& y) {
  check_same_n(x.n, y.n, "mul: ambient dimensions differ");
  GradedClass out(x.n);
  for (int i = 0; i <= x.n; ++i)
    for (int j = 0; j <= x.n; ++j)
      if (i + j >= x.n) out.coeffs[i + j - x.n] += x.coeffs[i] * y.coeffs[j];
  return out;
}

GradedClass cap(const CohClass& u, const GradedClass& x) {
  check_same_n(u.n, x.n, "cap: ambient dimensions differ");
  GradedClass out(x.n);
  for (int c = 0; c <= u.n; ++c)
    for (int i = 0; i <= x.n; ++i)
      if (i >= c) out.coeffs[i - c] += u.coeffs[c] * x.coeffs[i];
  return out;
}

CohClass mul(const CohClass& u, const CohClass& v) {
  check_same_n(u.n, v.n, "mul: ambient dimensions differ");
  CohClass out(u.n);
  for (int c = 0; c <= u.n; ++c)
    for (int d = 0; d <= v.n; ++d)
      if (c + d <= u.n) out.coeffs[c + d] += u.coeffs[c] * v.coeffs[d];
  return out;
}

CohClass add(const CohClass& u, const CohClass& v) {
  check_same_n(u.n, v.n, "add: ambient dimensions differ");
  CohClass out(u.n);
  for (int c = 0; c <= u.n; ++c) out.coeffs[c] = u.coeffs[c] + v.coeffs[c];
  return out;
}

CohClass inverse(const CohClass& u) {
  if (u.coeffs[0] != 1 && u.coeffs[0] != -1)
    throw std::invalid_argument("inverse: constant term must be a unit");
  const long long u0 = u.coeffs[0];
  CohClass inv(u.n);
  inv.coeffs[0] = u0;
  for (int j = 1; j <= u.n; ++j) {
    long long s = 0;
    for (int i = 1; i <= j; ++i) s += u.coeffs[i] * inv.coeffs[j - i];
    inv.coeffs[j] = -u0 * s;
  }
  return inv;
}

CohClass chern_tangent(int n) {
  if (n < 0) throw std::invalid_argument("chern_tangent: negative dimension");
  CohClass u(n);
  for (int c = 0; c <= n; ++c) u.coeffs[c] = binom(n + 1, c);
  return u;
}

CohClass chern_cotangent(int n) {
  CohClass u = chern_tangent(n);
  for (int c = 1; c <= n; c += 2) u.coeffs[c] = -u.coeffs[c];
  return u;
}

BiGradedClass cross(const GradedClass& x, const GradedClass& y) {
  BiGradedClass out(x.n, y.n);
  for (int i = 0; i <= x.n; ++i)
    for (int j = 0; j <= y.n; ++j) out.coeffs[i][j] = x.coeffs[i] * y.coeffs[j];
  return out;
}

BiCohClass cross(const CohClass& u, const CohClass& v) {
  BiCohClass out(u.n, v.n);
  for (int c = 0; c <= u.n; ++c)
    for (int d = 0; d <= v.n; ++d) out.coeffs[c][d] = u.coeffs[c] * v.coeffs[d];
  return out;
}

BiGradedClass add(const BiGradedClass& x, const BiGradedClass& y) {
  if (x.n != y.n || x.m != y.m) throw dimension_mismatch("add: bigraded shapes differ");
  BiGradedClass out(x.n, x.m);
  for (int i = 0; i <= x.n; ++i)
    for (int j = 0; j <= x.m; ++j) out.coeffs[i][j] = x.coeffs[i][j] + y.coeffs[i][j];
  return out;
}

BiGradedClass scale(long long k, const BiGradedClass& x) {
  BiGradedClass out(x.n, x.m);
  for (int i = 0; i <= x.n; ++i)
    for (int j = 0; j <= x.m; ++j) out.coeffs[i][j] = k * x.coeffs[i][j];
  return out;
}

BiCohClass mul(const BiCohClass& u, const BiCohClass& v) {
  if (u.n != v.n || u.m != v.m) throw dimension_mismatch("mul: bigraded shapes differ");
  BiCohClass out(u.n, u.m);
  for (int a = 0; a <= u.n; ++a)
    for (int b = 0; b <= u.m; ++b)
      for (int c = 0; c <= v.n; ++c)
        for (int d = 0; d <= v.m; ++d)
          if (a + c <= u.n && b + d <= u.m)
            out.coeffs[a + c][b + d] += u.coeffs[a][b] * v.coeffs[c][d];
  return out;
}

BiCohClass inverse(const BiCohClass& u) {
  if (u.coeffs[0][0] != 1 && u.coeffs[0][0] != -1)
    throw std::invalid_argument("inverse: constant term must be a unit");
  const long long u0 = u.coeffs[0][0];
  BiCohClass inv(u.n, u.m);
  // Solve coefficient-by-coefficient in total-degree order.
  for (int t = 0; t <= u.n + u.m; ++t) {
    for (int a = 0; a <= u.n; ++a) {
      int b = t - a;
      if (b < 0 || b > u.m) continue;
      if (a == 0 && b == 0) {
        inv.coeffs[0][0] = u0;
        continue;
      }
      long long s = 0;
      for (int c = 0; c <= a; ++c)
        for (int d = 0; d <= b; ++d) {
          if (c == 0 && d == 0) continue;
          s += u.coeffs[c][d] * inv.coeffs[a - c][b - d];
        }
      inv.coeffs[a][b] = -u0 * s;
    }
  }
  return inv;
}

BiGradedClass cap(const BiCohClass& u, const BiGradedClass& x) {
  if (u.n != x.n || u.m != x.m) throw dimension_mismatch("cap: bigraded shapes differ");
  BiGradedClass out(x.n, x.m);
  for (int c = 0; c <= u.n; ++c)
    for (int d = 0; d <= u.m; ++d)
      for (int i = c; i <= x.n; ++i)
        for (int j = d; j <= x.m; ++j)
          out.coeffs[i - c][j - d] += u.coeffs[c][d] * x.coeffs[i][j];
  return out;
}

GradedClass diagonal_gysin(const BiGradedClass& z) {
  if (z.n != z.m) throw dimension_mismatch("diagonal_gysin: factors differ");
  GradedClass out(z.n);
  for (int i = 0; i <= z.n; ++i)
    for (int j = 0; j <= z.m; ++j)
      if (i + j >= z.n) out.coeffs[i + j - z.n] += z.coeffs[i][j];
  return out;
}

BundleRingClass::BundleRingClass(int n_, int rank_v_, CohClass chern_v_)
    : n(n_), rank_v(rank_v_), chern_v(std::move(chern_v_)),
      coeffs(n_ + 1, std::vector<long long>(rank_v_ + 1, 0)) {
  if (chern_v.n != n) throw dimension_mismatch("BundleRingClass: Chern class base dimension");
}

bool BundleRingClass::is_zero() const {
  for (const auto& row : coeffs)
    for (long long c : row)
      if (c != 0) return false;
  return true;
}

BundleRingClass br_zero(int n, int rank_v, CohClass chern_v) {
  return BundleRingClass(n, rank_v, std::move(chern_v));
}

BundleRingClass br_monomial(int n, int rank_v, CohClass chern_v, int a, int b) {
  BundleRingClass z(n, rank_v, std::move(chern_v));
  z.coeffs.at(a).at(b) = 1;
  return z;
}

BundleRingClass add(const BundleRingClass& x, const BundleRingClass& y) {
  if (x.n != y.n || x.rank_v != y.rank_v || !(x.chern_v == y.chern_v))
    throw dimension_mismatch("add: bundle rings differ");
  BundleRingClass out(x.n, x.rank_v, x.chern_v);
  for (int a = 0; a <= x.n; ++a)
    for (int b = 0; b <= x.rank_v; ++b) out.coeffs[a][b] = x.coeffs[a][b] + y.coeffs[a][b];
  return out;
}

BundleRingClass scale(long long k, const BundleRingClass& x) {
  BundleRingClass out(x.n, x.rank_v, x.chern_v);
  for (int a = 0; a <= x.n; ++a)
    for (int b = 0; b <= x.rank_v; ++b) out.coeffs[a][b] = k * x.coeffs[a][b];
  return out;
}

namespace {
// Reduce a raw polynomial table raw[a][b] (b unbounded) to normal form using
// ζ^{r+1} = -Σ_{i=1..r} c_i(V) ζ^{r+1-i} and h^{a>n} = 0.
BundleRingClass reduce_raw(int n, int rank_v, const CohClass& chern_v,
                           std::vector<std::vector<long long>> raw) {
  const int r = rank_v;
  int maxb = 0;
  for (const auto& row : raw) maxb = std::max<int>(maxb, static_cast<int>(row.size()) - 1);
  for (auto& row : raw) row.resize(maxb + 1, 0);
  for (int b = maxb; b >= r + 1; --b) {
    for (int a = 0; a <= n; ++a) {
      long long c = raw[a][b];
      if (c == 0) continue;
      raw[a][b] = 0;
      // ζ^b = ζ^{b-(r+1)}·ζ^{r+1} -> -Σ_i c_i ζ^{b-i}.
      for (int i = 1; i <= r; ++i) {
        if (i > chern_v.n) break;
        int a2 = a + i;
        if (a2 > n) continue;
        raw[a2][b - i] -= c * chern_v.coeffs[i];
      }
    }
  }
  BundleRingClass out(n, rank_v, chern_v);
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= r; ++b) out.coeffs[a][b] = raw[a][b];
  return out;
}
}  // namespace

BundleRingClass mul(const BundleRingClass& x, const BundleRingClass& y) {
  if (x.n != y.n || x.rank_v != y.rank_v || !(x.chern_v == y.chern_v))
    throw dimension_mismatch("mul: bundle rings differ");
  const int n = x.n, r = x.rank_v;
  std::vector<std::vector<long long>> raw(n + 1, std::vector<long long>(2 * r + 1, 0));
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= r; ++b) {
      if (x.coeffs[a][b] == 0) continue;
      for (int c = 0; c <= n; ++c)
        for (int d = 0; d <= r; ++d) {
          if (y.coeffs[c][d] == 0 || a + c > n) continue;
          raw[a + c][b + d] += x.coeffs[a][b] * y.coeffs[c][d];
        }
    }
  return reduce_raw(n, r, x.chern_v, std::move(raw));
}

BundleRingClass mul_zeta(const BundleRingClass& x) {
  std::vector<std::vector<long long>> raw(x.n + 1, std::vector<long long>(x.rank_v + 2, 0));
  for (int a = 0; a <= x.n; ++a)
    for (int b = 0; b <= x.rank_v; ++b) raw[a][b + 1] = x.coeffs[a][b];
  return reduce_raw(x.n, x.rank_v, x.chern_v, std::move(raw));
}

BundleRingClass mul_base(const CohClass& u, const BundleRingClass& x) {
  if (u.n != x.n) throw dimension_mismatch("mul_base: base dimensions differ");
  BundleRingClass out(x.n, x.rank_v, x.chern_v);
  for (int c = 0; c <= u.n; ++c) {
    if (u.coeffs[c] == 0) continue;
    for (int a = 0; a + c <= x.n; ++a)
      for (int b = 0; b <= x.rank_v; ++b)
        out.coeffs[a + c][b] += u.coeffs[c] * x.coeffs[a][b];
  }
  return out;
}

CohClass segre_of_bundle(const BundleRingClass& x) { return inverse(x.chern_v); }

GradedClass bundle_pushforward(const BundleRingClass& z) {
  const int n = z.n, r = z.rank_v;
  CohClass s = inverse(z.chern_v);
  CohClass total(n);
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= r; ++b) {
      if (z.coeffs[a][b] == 0) continue;
      int j = b - r;  // Segre degree
      if (j < 0) continue;
      int deg = a + j;
      if (deg > n || j > n) continue;
      total.coeffs[deg] += z.coeffs[a][b] * s.coeffs[j];
    }
  return cap(total, GradedClass::basis(n, n));
}

}  // namespace ccycle
