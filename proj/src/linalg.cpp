#include "ccycle/linalg.hpp"

#include <algorithm>

namespace ccycle {

QMat rref(QMat m) {
  if (m.empty()) return m;
  const size_t cols = m[0].size();
  size_t lead = 0;
  size_t row = 0;
  for (; lead < cols && row < m.size(); ++lead) {
    size_t piv = row;
    while (piv < m.size() && m[piv][lead] == Rat(0)) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    Rat d = m[row][lead];
    for (auto& x : m[row]) x /= d;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == row) continue;
      Rat f = m[i][lead];
      if (f == Rat(0)) continue;
      for (size_t j = 0; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
  }
  m.resize(row);
  return m;
}

int rank(const QMat& m) { return static_cast<int>(rref(m).size()); }

QMat concat_rows(const QMat& a, const QMat& b) {
  QMat out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool row_space_equal(const QMat& a, const QMat& b) { return rref(a) == rref(b); }

bool row_space_contains(const QMat& m, const QVec& v) {
  int r = rank(m);
  QMat ext = m;
  ext.push_back(v);
  return rank(ext) == r;
}

bool row_space_subset(const QMat& sub, const QMat& sup) {
  for (const auto& row : sub)
    if (!row_space_contains(sup, row)) return false;
  return true;
}

QMat row_space_intersection(const QMat& a, const QMat& b) {
  QMat ra = rref(a), rb = rref(b);
  if (ra.empty() || rb.empty()) return {};
  const size_t cols = ra[0].size();
  // Solve x·ra - y·rb = 0 for (x,y): kernel of the (ra+rb)-row matrix, read
  // column-wise. Build M with columns indexed by coordinates, rows by the
  // unknowns, then compute the kernel of M^T the usual way.
  const size_t na = ra.size(), nb = rb.size();
  // System: for each coordinate j, sum_i x_i ra[i][j] - sum_k y_k rb[k][j] = 0.
  // Unknown vector u = (x, y) of length na+nb; equations indexed by j.
  QMat sys(cols, QVec(na + nb, Rat(0)));
  for (size_t j = 0; j < cols; ++j) {
    for (size_t i = 0; i < na; ++i) sys[j][i] = ra[i][j];
    for (size_t k = 0; k < nb; ++k) sys[j][na + k] = -rb[k][j];
  }
  // Kernel of sys (as a linear map on u).
  QMat red = rref(sys);
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(na + nb, false);
  for (const auto& rrow : red) {
    for (size_t j = 0; j < na + nb; ++j) {
      if (rrow[j] != Rat(0)) {
        pivot_col.push_back(static_cast<int>(j));
        is_pivot[j] = true;
        break;
      }
    }
  }
  QMat basis;
  for (size_t freej = 0; freej < na + nb; ++freej) {
    if (is_pivot[freej]) continue;
    QVec u(na + nb, Rat(0));
    u[freej] = Rat(1);
    for (size_t r = 0; r < red.size(); ++r) u[pivot_col[r]] = -red[r][freej];
    // Intersection vector = x·ra.
    QVec v(cols, Rat(0));
    for (size_t i = 0; i < na; ++i)
      for (size_t j = 0; j < cols; ++j) v[j] += u[i] * ra[i][j];
    bool nonzero = std::any_of(v.begin(), v.end(), [](const Rat& x) { return x != Rat(0); });
    if (nonzero) basis.push_back(v);
  }
  return rref(basis);
}

QMat null_space_basis(const QMat& m, int ncols) {
  QMat red = rref(m);
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(ncols, false);
  for (const auto& row : red) {
    for (int j = 0; j < ncols; ++j) {
      if (row[j] != Rat(0)) {
        pivot_col.push_back(j);
        is_pivot[j] = true;
        break;
      }
    }
  }
  QMat basis;
  for (int freej = 0; freej < ncols; ++freej) {
    if (is_pivot[freej]) continue;
    QVec v(ncols, Rat(0));
    v[freej] = Rat(1);
    for (size_t r = 0; r < red.size(); ++r) v[pivot_col[r]] = -red[r][freej];
    basis.push_back(v);
  }
  return basis;
}

std::string row_space_key(const QMat& m, int ncols) {
  QMat r = rref(m);
  std::string key = "c" + std::to_string(ncols) + ":";
  for (const auto& row : r) {
    for (const auto& x : row) key += format_rational(x) + ",";
    key += ";";
  }
  return key;
}

}  // namespace ccycle
