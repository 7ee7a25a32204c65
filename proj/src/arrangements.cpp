#include "ccycle/arrangements.hpp"

#include <algorithm>
#include <deque>

namespace ccycle {

namespace {

bool all_zero(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == Rat(0); });
}

}  // namespace

Arrangement::Arrangement(int n_, std::vector<QVec> hs) : n(n_), hyperplanes(std::move(hs)) {
  if (n < 0) throw arrangement_error("negative ambient dimension");
  for (const auto& h : hyperplanes) {
    if (h.size() != static_cast<size_t>(n + 1))
      throw arrangement_error("hyperplane coefficient length must be n+1");
    if (all_zero(h)) throw arrangement_error("zero hyperplane");
  }
  for (size_t i = 0; i < hyperplanes.size(); ++i)
    for (size_t j = i + 1; j < hyperplanes.size(); ++j)
      if (rank(QMat{hyperplanes[i], hyperplanes[j]}) < 2)
        throw arrangement_error("proportional hyperplanes");
}

bool FlatLattice::contains(int sub, int sup) const {
  return row_space_subset(flats[sup].rows, flats[sub].rows);
}

int FlatLattice::find_by_rows(const QMat& rows) const {
  auto it = by_key.find(row_space_key(rows, n + 1));
  return it == by_key.end() ? -1 : it->second;
}

namespace {

// All distinct intersections of subsets of hyperplanes with rank bound
// max_rank, as rref matrices keyed by row space.
std::map<std::string, QMat> closure_under_intersection(const Arrangement& a, int max_rank) {
  std::map<std::string, QMat> flats;
  std::deque<QMat> work;
  QMat ambient;
  flats[row_space_key(ambient, a.n + 1)] = ambient;
  work.push_back(ambient);
  while (!work.empty()) {
    QMat cur = work.front();
    work.pop_front();
    int r = rank(cur);
    for (const auto& h : a.hyperplanes) {
      if (row_space_contains(cur, h)) continue;
      if (r + 1 > max_rank) continue;
      QMat next = rref(concat_rows(cur, QMat{h}));
      std::string key = row_space_key(next, a.n + 1);
      if (flats.emplace(key, next).second) work.push_back(next);
    }
  }
  return flats;
}

std::vector<std::vector<long long>> mobius_from_ambient_order(
    const std::vector<QMat>& rows_list, const std::vector<int>& dims) {
  const size_t k = rows_list.size();
  // leq[i][j]: flat j contained in flat i.
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      leq[i][j] = (i == j) || (dims[j] < dims[i] && row_space_subset(rows_list[i], rows_list[j]));
  std::vector<std::vector<long long>> mu(k, std::vector<long long>(k, 0));
  // flats are sorted by decreasing dim, so the recursion can scan left to right
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i; j < k; ++j) {
      if (!leq[i][j]) continue;
      if (i == j) {
        mu[i][j] = 1;
        continue;
      }
      long long s = 0;
      for (size_t h = i; h < j; ++h)
        if (leq[i][h] && leq[h][j]) s += mu[i][h];
      mu[i][j] = -s;
    }
  }
  return mu;
}

}  // namespace

FlatLattice build_lattice(const Arrangement& a) {
  FlatLattice l;
  l.n = a.n;
  auto raw = closure_under_intersection(a, a.n);  // keep nonempty projective flats
  for (auto& [key, rows] : raw) {
    Flat f;
    f.rows = rows;
    f.dim = a.n - rank(rows);
    for (size_t h = 0; h < a.hyperplanes.size(); ++h)
      if (row_space_contains(rows, a.hyperplanes[h])) f.members.push_back(static_cast<int>(h));
    l.flats.push_back(std::move(f));
  }
  std::sort(l.flats.begin(), l.flats.end(), [&](const Flat& x, const Flat& y) {
    if (x.dim != y.dim) return x.dim > y.dim;
    return row_space_key(x.rows, a.n + 1) < row_space_key(y.rows, a.n + 1);
  });
  std::vector<QMat> rows_list;
  std::vector<int> dims;
  for (size_t i = 0; i < l.flats.size(); ++i) {
    l.flats[i].id = "F" + std::to_string(i);
    l.by_key[row_space_key(l.flats[i].rows, a.n + 1)] = static_cast<int>(i);
    rows_list.push_back(l.flats[i].rows);
    dims.push_back(l.flats[i].dim);
  }
  l.mobius = mobius_from_ambient_order(rows_list, dims);
  return l;
}

std::vector<long long> char_poly(const FlatLattice& l) {
  std::vector<long long> p(l.n + 1, 0);
  for (size_t j = 0; j < l.flats.size(); ++j) p[l.flats[j].dim] += l.mobius[0][j];
  return p;
}

std::vector<long long> central_char_poly(const Arrangement& a) {
  auto raw = closure_under_intersection(a, a.n + 1);
  std::vector<QMat> rows_list;
  std::vector<int> dims;  // use linear dimension for ordering/containment
  std::vector<std::pair<int, QMat>> fl;
  for (auto& [key, rows] : raw) fl.emplace_back(a.n + 1 - rank(rows), rows);
  std::sort(fl.begin(), fl.end(), [&](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    return row_space_key(x.second, a.n + 1) < row_space_key(y.second, a.n + 1);
  });
  for (auto& [d, rows] : fl) {
    dims.push_back(d);
    rows_list.push_back(rows);
  }
  auto mu = mobius_from_ambient_order(rows_list, dims);
  std::vector<long long> p(a.n + 2, 0);
  for (size_t j = 0; j < fl.size(); ++j) p[dims[j]] += mu[0][j];
  return p;
}

Arrangement deletion(const Arrangement& a, int h) {
  std::vector<QVec> hs;
  for (size_t i = 0; i < a.hyperplanes.size(); ++i)
    if (static_cast<int>(i) != h) hs.push_back(a.hyperplanes[i]);
  return Arrangement(a.n, std::move(hs));
}

Arrangement restriction(const Arrangement& a, int h) {
  QMat basis = null_space_basis(QMat{a.hyperplanes[h]}, a.n + 1);  // n rows
  std::vector<QVec> hs;
  std::map<std::string, bool> seen;
  for (size_t i = 0; i < a.hyperplanes.size(); ++i) {
    if (static_cast<int>(i) == h) continue;
    QVec g(basis.size(), Rat(0));
    for (size_t r = 0; r < basis.size(); ++r)
      for (int c = 0; c <= a.n; ++c) g[r] += basis[r][c] * a.hyperplanes[i][c];
    if (all_zero(g)) continue;
    std::string key = row_space_key(QMat{g}, static_cast<int>(basis.size()));
    if (!seen.emplace(key, true).second) continue;
    hs.push_back(std::move(g));
  }
  return Arrangement(a.n - 1, std::move(hs));
}

ArrangementModel strat_poset_from_arrangement(const Arrangement& a) {
  ArrangementModel m;
  m.arr = a;
  m.lattice = build_lattice(a);
  auto poset = std::make_shared<StratPoset>();
  poset->ambient = StratPoset::Ambient::Proj;
  poset->n = a.n;
  const auto& fl = m.lattice.flats;
  // chi_c by recursion over ascending dimension
  std::vector<long long> chi(fl.size(), 0);
  for (size_t i = fl.size(); i-- > 0;) {
    long long s = fl[i].dim + 1;  // chi(P^dim)
    for (size_t j = i + 1; j < fl.size(); ++j)
      if (m.lattice.contains(static_cast<int>(j), static_cast<int>(i))) s -= chi[j];
    chi[i] = s;
  }
  for (size_t i = 0; i < fl.size(); ++i) {
    Stratum s;
    s.id = fl[i].id;
    s.dim = fl[i].dim;
    s.chi_c = chi[i];
    s.flat = fl[i].rows;
    s.pushforward = GradedClass::basis(a.n, fl[i].dim);
    s.mather = smooth_flat_mather(a.n, fl[i].dim);
    for (size_t j = 0; j < fl.size(); ++j)
      if (j != i && m.lattice.contains(static_cast<int>(j), static_cast<int>(i)))
        s.below.insert(fl[j].id);
    poset->strata.push_back(std::move(s));
  }
  poset->source_hyperplanes = a.hyperplanes;
  poset->finalize();
  m.poset = poset;
  m.table = EulerTable::all_ones(*poset);
  return m;
}

Arrangement union_arrangement(const Arrangement& a, const Arrangement& b) {
  if (a.n != b.n) throw arrangement_error("union: ambient dimensions differ");
  std::vector<QVec> hs;
  std::map<std::string, bool> seen;
  for (const auto& src : {a.hyperplanes, b.hyperplanes})
    for (const auto& h : src) {
      std::string key = row_space_key(QMat{h}, a.n + 1);
      if (seen.emplace(key, true).second) hs.push_back(h);
    }
  return Arrangement(a.n, std::move(hs));
}

namespace {

// Index of the stratum of `poset` whose flat is spanned by the hyperplanes of
// `hyps` containing `rows`.
int containing_stratum(const StratPoset& poset, const std::vector<QVec>& hyps, const QMat& rows) {
  QMat span;
  for (const auto& h : hyps)
    if (row_space_contains(rows, h)) span.push_back(h);
  std::string key = row_space_key(span, poset.n + 1);
  for (size_t i = 0; i < poset.strata.size(); ++i) {
    if (!poset.strata[i].flat) continue;
    if (row_space_key(*poset.strata[i].flat, poset.n + 1) == key) return static_cast<int>(i);
  }
  throw poset_error("no stratum matches the containing flat");
}

}  // namespace

Refinement refine_arrangement_posets(const PosetPtr& p1, const PosetPtr& p2) {
  Arrangement a(p1->n, *p1->source_hyperplanes);
  Arrangement b(p2->n, *p2->source_hyperplanes);
  ArrangementModel u = strat_poset_from_arrangement(union_arrangement(a, b));
  Refinement r;
  r.poset = u.poset;
  r.table = u.table;
  r.to_first.resize(u.poset->strata.size());
  r.to_second.resize(u.poset->strata.size());
  for (size_t i = 0; i < u.poset->strata.size(); ++i) {
    const QMat& rows = *u.poset->strata[i].flat;
    r.to_first[i] = containing_stratum(*p1, a.hyperplanes, rows);
    r.to_second[i] = containing_stratum(*p2, b.hyperplanes, rows);
  }
  return r;
}

ConstructibleFunction RestrictedModel::pullback(const ConstructibleFunction& gamma) const {
  std::vector<long long> v(model.poset->strata.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = gamma.values[to_original[i]];
  return ConstructibleFunction(model.poset, std::move(v));
}

RestrictedModel restrict_model(const ArrangementModel& m, const QMat& embed) {
  const int n = m.arr.n;
  const int k = static_cast<int>(embed.size()) - 1;
  if (k < 0 || embed[0].size() != static_cast<size_t>(n + 1) || rank(embed) != k + 1)
    throw arrangement_error("restrict_model: embedding matrix must be full-rank (k+1)x(n+1)");
  auto pull_form = [&](const QVec& h) {
    QVec g(k + 1, Rat(0));
    for (int r = 0; r <= k; ++r)
      for (int c = 0; c <= n; ++c) g[r] += embed[r][c] * h[c];
    return g;
  };
  std::vector<QVec> hs;
  std::map<std::string, bool> seen;
  for (const auto& h : m.arr.hyperplanes) {
    QVec g = pull_form(h);
    if (all_zero(g)) continue;  // hyperplane contains the image
    std::string key = row_space_key(QMat{g}, k + 1);
    if (seen.emplace(key, true).second) hs.push_back(std::move(g));
  }
  RestrictedModel out;
  out.model = strat_poset_from_arrangement(Arrangement(k, std::move(hs)));
  // original flat -> restricted flat (for flats meeting the image)
  for (const auto& f : m.lattice.flats) {
    QMat pf;
    for (const auto& row : f.rows) {
      QVec g = pull_form(row);
      if (!all_zero(g)) pf.push_back(std::move(g));
    }
    pf = rref(pf);
    if (rank(pf) > k) continue;  // flat misses the image
    int j = out.model.lattice.find_by_rows(pf);
    if (j >= 0) out.flat_map[f.id] = out.model.lattice.flats[j].id;
  }
  // restricted stratum -> original stratum containing its relative interior
  out.to_original.resize(out.model.poset->strata.size());
  for (size_t i = 0; i < out.to_original.size(); ++i) {
    const QMat& jrows = *out.model.poset->strata[i].flat;
    QMat span;
    for (const auto& h : m.arr.hyperplanes) {
      QVec g = pull_form(h);
      if (all_zero(g) || row_space_contains(jrows, g)) span.push_back(h);
    }
    std::string key = row_space_key(span, n + 1);
    int found = -1;
    for (size_t s = 0; s < m.poset->strata.size(); ++s) {
      if (m.poset->strata[s].flat &&
          row_space_key(*m.poset->strata[s].flat, n + 1) == key) {
        found = static_cast<int>(s);
        break;
      }
    }
    if (found < 0) throw poset_error("restrict_model: unmatched containing stratum");
    out.to_original[i] = found;
  }
  return out;
}

}  // namespace ccycle
