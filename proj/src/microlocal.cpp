#include "ccycle/microlocal.hpp"

#include <algorithm>

namespace ccycle {

namespace {

// y -> y·E as matrix composition: compose(E2, E1) is the matrix of the map
// that applies E1 after E2's source, i.e. y -> (y·E2)·E1.
QMat mat_mul(const QMat& a, const QMat& b) {
  const size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  QMat out(rows, QVec(cols, Rat(0)));
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < inner; ++k) {
      if (a[i][k] == Rat(0)) continue;
      for (size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

// Apply an embedding matrix to a linear form on the target: r -> E·r.
QVec pull_form(const QMat& e, const QVec& r) {
  QVec out(e.size(), Rat(0));
  for (size_t i = 0; i < e.size(); ++i)
    for (size_t j = 0; j < r.size(); ++j) out[i] += e[i][j] * r[j];
  return out;
}

QMat pull_rows(const QMat& e, const QMat& rows) {
  QMat out;
  for (const auto& r : rows) out.push_back(pull_form(e, r));
  return out;
}

// Flatten a composite of embeddings into a single embedding matrix.
QMat flatten_embeddings(const LinearMapData::Composite& c) {
  QMat acc;
  bool first = true;
  for (const auto& part : c.parts) {
    const auto* emb = std::get_if<LinearMapData::Embedding>(&part.data);
    if (!emb) throw microlocal_error("composite maps must be chains of embeddings");
    acc = first ? emb->matrix : mat_mul(emb->matrix, acc);
    first = false;
  }
  if (first) throw microlocal_error("empty composite map");
  return acc;
}

// Smallest flat of the arrangement containing the given flat: the span of the
// hyperplanes vanishing on it.
QMat enclosing_rows(const Arrangement& a, const QMat& flat_rows) {
  QMat rows;
  for (const auto& h : a.hyperplanes)
    if (row_space_contains(flat_rows, h)) rows.push_back(h);
  return rref(rows);
}

// Is alpha locally constant near the relative interior of the flat with the
// given enclosing rows? Equivalent: alpha takes one value on all strata whose
// closure contains that flat.
bool locally_constant_at(const ArrangementModel& m, const ConstructibleFunction& alpha,
                         const QMat& enclosing) {
  bool seen = false;
  long long v = 0;
  for (size_t i = 0; i < m.poset->strata.size(); ++i) {
    if (!row_space_subset(*m.poset->strata[i].flat, enclosing)) continue;
    if (!seen) {
      v = alpha.values[i];
      seen = true;
    } else if (alpha.values[i] != v) {
      return false;
    }
  }
  return true;
}

QVec common_covector(const QMat& a, const QMat& b) {
  QMat inter = row_space_intersection(a, b);
  return inter.empty() ? QVec{} : inter[0];
}

// Gysin map of a linear embedding P^k -> P^n: [P^j] -> [P^{j-(n-k)}].
GradedClass embedding_gysin(const GradedClass& x, int k) {
  GradedClass out(k);
  int codim = x.n - k;
  for (int j = codim; j <= x.n; ++j) out.coeffs[j - codim] = x.coeffs[j];
  return out;
}

CohClass normal_chern(int n, int k) {
  // c of the normal bundle of a linear P^k in P^n: (1+h)^{n-k} on P^k.
  CohClass c(k);
  for (int i = 0; i <= k; ++i) c.coeffs[i] = binom(n - k, i);
  return c;
}

}  // namespace

LinearMapData LinearMapData::projection(int a, int b) {
  return LinearMapData{Projection{a, b}};
}
LinearMapData LinearMapData::embedding(QMat e) {
  return LinearMapData{Embedding{std::move(e)}};
}
LinearMapData LinearMapData::composite(std::vector<LinearMapData> parts) {
  return LinearMapData{Composite{std::move(parts)}};
}

ConicSupport support(const LagrangianCycle& l, const PosetPtr& poset) {
  ConicSupport s;
  s.n = poset->n;
  for (const auto& t : l.terms) {
    const Stratum& z = poset->at(t.stratum_id);
    if (!z.flat)
      throw microlocal_error("support: stratum " + t.stratum_id + " has no linear closure data");
    s.components.push_back({t.stratum_id, *z.flat});
  }
  return s;
}

CheckResult is_splayed_pair(const ArrangementModel& a, const ConstructibleFunction& alpha,
                            const ArrangementModel& b, const ConstructibleFunction& beta) {
  if (alpha.poset != a.poset || beta.poset != b.poset)
    throw microlocal_error("is_splayed_pair: functions must live on the given models");
  Arrangement u = union_arrangement(a.arr, b.arr);
  FlatLattice lat = build_lattice(u);
  for (const auto& f : lat.flats) {
    QMat enc_a = enclosing_rows(a.arr, f.rows);
    QMat enc_b = enclosing_rows(b.arr, f.rows);
    if (locally_constant_at(a, alpha, enc_a)) continue;
    if (locally_constant_at(b, beta, enc_b)) continue;
    int ra = rank(enc_a), rb = rank(enc_b);
    if (ra + rb != rank(concat_rows(enc_a, enc_b))) {
      Witness w;
      w.description = "normal spaces overlap at flat " + f.id + " of the union arrangement";
      w.flat_rows = f.rows;
      w.covector = common_covector(enc_a, enc_b);
      return {false, w};
    }
  }
  return {true, std::nullopt};
}

CheckResult detect_splayed(const ArrangementModel& a, const ArrangementModel& b) {
  // Indicator functions of the hyperplane unions: 1 off the ambient stratum.
  auto indicator = [](const ArrangementModel& m) {
    std::vector<long long> v(m.poset->strata.size(), 1);
    for (size_t i = 0; i < v.size(); ++i)
      if (m.poset->strata[i].dim == m.poset->n) v[i] = 0;
    return ConstructibleFunction(m.poset, std::move(v));
  };
  return is_splayed_pair(a, indicator(a), b, indicator(b));
}

CheckResult is_noncharacteristic_diagonal(const ConicSupport& a, const ConicSupport& b) {
  if (a.n != b.n) throw dimension_mismatch("is_noncharacteristic_diagonal: ambient mismatch");
  for (const auto& f : a.components) {
    if (f.rows.empty()) continue;  // zero section
    for (const auto& g : b.components) {
      if (g.rows.empty()) continue;
      QMat both = concat_rows(f.rows, g.rows);
      int rc = rank(both);
      if (rc > a.n) continue;  // closures disjoint in P^n
      if (rank(f.rows) + rank(g.rows) != rc) {
        Witness w;
        w.description = "conormal components over " + f.stratum_id + " and " + g.stratum_id +
                        " share a covector";
        w.flat_rows = rref(both);
        w.covector = common_covector(f.rows, g.rows);
        return {false, w};
      }
    }
  }
  return {true, std::nullopt};
}

CheckResult is_noncharacteristic_map(const LinearMapData& f, const ConicSupport& s) {
  if (std::holds_alternative<LinearMapData::Projection>(f.data)) return {true, std::nullopt};
  QMat e = std::holds_alternative<LinearMapData::Embedding>(f.data)
               ? std::get<LinearMapData::Embedding>(f.data).matrix
               : flatten_embeddings(std::get<LinearMapData::Composite>(f.data));
  const int k = static_cast<int>(e.size()) - 1;
  for (const auto& comp : s.components) {
    if (comp.rows.empty()) continue;  // zero section is never in the way
    QMat pulled = pull_rows(e, comp.rows);
    int rp = rank(pulled);
    if (rp > k) continue;  // component misses the image
    if (rp == rank(comp.rows)) continue;
    // The component's equations drop rank on the image: some conormal
    // covector pulls back to zero.
    QMat ra = rref(comp.rows);
    QMat pulled_red = pull_rows(e, ra);
    // Solve x · pulled_red = 0 and map x back through ra.
    QMat sys(pulled_red.empty() ? 0 : pulled_red[0].size(), QVec(pulled_red.size(), Rat(0)));
    for (size_t i = 0; i < pulled_red.size(); ++i)
      for (size_t j = 0; j < pulled_red[i].size(); ++j) sys[j][i] = pulled_red[i][j];
    QMat xs = null_space_basis(sys, static_cast<int>(pulled_red.size()));
    Witness w;
    w.description = "embedding is characteristic for component over " + comp.stratum_id;
    w.flat_rows = ra;
    if (!xs.empty()) {
      QVec v(ra[0].size(), Rat(0));
      for (size_t i = 0; i < ra.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) v[j] += xs[0][i] * ra[i][j];
      w.covector = v;
    }
    return {false, w};
  }
  return {true, std::nullopt};
}

PullbackResult pullback_cycle(const LinearMapData& f, const LagrangianCycle& l,
                              const ArrangementModel& target) {
  if (const auto* pr = std::get_if<LinearMapData::Projection>(&f.data)) {
    if (target.poset->n != pr->b)
      throw dimension_mismatch("pullback_cycle: projection target dimension mismatch");
    PosetPtr prod = product_poset(trivial_poset(pr->a), target.poset);
    LagrangianCycle out;
    for (const auto& t : l.terms)
      out.terms.push_back({"F0*" + t.stratum_id, t.dim_z + pr->a, t.coeff});
    out.normalize();
    return {std::move(out), prod};
  }
  if (const auto* em = std::get_if<LinearMapData::Embedding>(&f.data)) {
    RestrictedModel r = restrict_model(target, em->matrix);
    LagrangianCycle out;
    for (const auto& t : l.terms) {
      auto it = r.flat_map.find(t.stratum_id);
      if (it == r.flat_map.end()) continue;  // closure misses the image
      const Stratum& z = r.model.poset->at(it->second);
      out.terms.push_back({it->second, z.dim, t.coeff});
    }
    out.normalize();
    return {std::move(out), r.model.poset};
  }
  const auto& parts = std::get<LinearMapData::Composite>(f.data).parts;
  if (parts.empty()) throw microlocal_error("empty composite map");
  ArrangementModel model = target;
  LagrangianCycle cur = l;
  PosetPtr poset = target.poset;
  for (const auto& part : parts) {
    const auto* em = std::get_if<LinearMapData::Embedding>(&part.data);
    if (!em) throw microlocal_error("composite maps must be chains of embeddings");
    RestrictedModel r = restrict_model(model, em->matrix);
    LagrangianCycle next;
    for (const auto& t : cur.terms) {
      auto it = r.flat_map.find(t.stratum_id);
      if (it == r.flat_map.end()) continue;
      const Stratum& z = r.model.poset->at(it->second);
      next.terms.push_back({it->second, z.dim, t.coeff});
    }
    next.normalize();
    cur = std::move(next);
    model = r.model;
    poset = model.poset;
  }
  return {std::move(cur), poset};
}

long long index_pairing(const LagrangianCycle& a, const PosetPtr& pa, const LagrangianCycle& b,
                        const PosetPtr& pb, bool noncharacteristic_certified) {
  if (!noncharacteristic_certified)
    throw microlocal_error(
        "index_pairing: refusing to pair cycles without a non-characteristic certificate");
  if (pa->n != pb->n) throw dimension_mismatch("index_pairing: ambient mismatch");
  long long total = 0;
  for (const auto& ta : a.terms) {
    BundleRingClass ca = conormal_symbol(pa, ta.stratum_id).completion;
    for (const auto& tb : b.terms) {
      BundleRingClass cb = conormal_symbol(pb, tb.stratum_id).completion;
      GradedClass deg = bundle_pushforward(mul(ca, cb));
      total += ta.coeff * tb.coeff * deg.coeffs[0];
    }
  }
  return total;
}

IndexResult verify_index_formula(const ArrangementModel& a, const ConstructibleFunction& alpha,
                                 const ArrangementModel& b, const ConstructibleFunction& beta) {
  IndexResult out;
  LagrangianCycle ca = cc(alpha, a.table);
  LagrangianCycle cb = cc(beta, b.table);
  out.noncharacteristic = is_noncharacteristic_diagonal(support(ca, a.poset), support(cb, b.poset));
  if (!out.noncharacteristic.ok) {
    out.refused = true;
    return out;
  }
  Refinement ref = common_refinement(a.poset, b.poset);
  out.lhs = euler_integral(product(ref.pull_first(alpha), ref.pull_second(beta)));
  long long sign = (a.poset->n % 2 == 0) ? 1 : -1;
  out.rhs = sign * index_pairing(ca, a.poset, cb, b.poset, true);
  out.equal = out.lhs == out.rhs;
  return out;
}

IntersectionResult verify_intersection_formula(const ArrangementModel& a,
                                               const ConstructibleFunction& alpha,
                                               const ArrangementModel& b,
                                               const ConstructibleFunction& beta) {
  IntersectionResult out;
  out.splayed = is_splayed_pair(a, alpha, b, beta);
  LagrangianCycle ca = cc(alpha, a.table);
  LagrangianCycle cb = cc(beta, b.table);
  out.noncharacteristic =
      is_noncharacteristic_diagonal(support(ca, a.poset), support(cb, b.poset));
  GradedClass csm_a = csm(alpha, a.table);
  GradedClass csm_b = csm(beta, b.table);
  out.lhs = diagonal_gysin(cross(csm_a, csm_b));
  Refinement ref = common_refinement(a.poset, b.poset);
  ConstructibleFunction prod = product(ref.pull_first(alpha), ref.pull_second(beta));
  out.rhs = cap(chern_tangent(a.poset->n), csm(prod, ref.table));
  out.equal = out.lhs == out.rhs;
  return out;
}

VrrResult verify_vrr(const LinearMapData& f, const ArrangementModel& target,
                     const ConstructibleFunction& gamma) {
  if (gamma.poset != target.poset)
    throw microlocal_error("verify_vrr: function must live on the target model");
  VrrResult out;
  LagrangianCycle cg = cc(gamma, target.table);
  out.noncharacteristic = is_noncharacteristic_map(f, support(cg, target.poset));

  if (const auto* pr = std::get_if<LinearMapData::Projection>(&f.data)) {
    if (target.poset->n != pr->b)
      throw dimension_mismatch("verify_vrr: projection target dimension mismatch");
    const int a = pr->a, b = pr->b;
    GradedClass csm_n = csm(gamma, target.table);
    PosetPtr pa = trivial_poset(a);
    EulerTable ta = EulerTable::all_ones(*pa);
    ConstructibleFunction pulled = cross_fn(constant_function(pa, 1), gamma);
    EulerTable te = product_euler_table(pa, ta, target.poset, target.table);
    BiGradedClass csm_m = csm_bi(pulled, te);

    GradedClass fa = GradedClass::basis(a, a);
    out.lhs_bi = cross(fa, cap(inverse(chern_tangent(b)), csm_n));
    out.rhs_bi = cap(inverse(cross(chern_tangent(a), chern_tangent(b))), csm_m);
    out.main_equal = *out.lhs_bi == *out.rhs_bi;
    // Submersion corollary: c(T_f) ∩ f^! c_*(γ) = c_*(f^*γ).
    BiGradedClass cor = cap(cross(chern_tangent(a), CohClass::one(b)), cross(fa, csm_n));
    out.corollary_equal = cor == csm_m;
    return out;
  }

  QMat e = std::holds_alternative<LinearMapData::Embedding>(f.data)
               ? std::get<LinearMapData::Embedding>(f.data).matrix
               : flatten_embeddings(std::get<LinearMapData::Composite>(f.data));
  const int n = target.poset->n;
  const int k = static_cast<int>(e.size()) - 1;
  RestrictedModel r = restrict_model(target, e);
  ConstructibleFunction pulled = r.pullback(gamma);
  GradedClass csm_n = csm(gamma, target.table);
  GradedClass csm_k = csm(pulled, r.model.table);

  out.lhs_g = embedding_gysin(cap(inverse(chern_tangent(n)), csm_n), k);
  out.rhs_g = cap(inverse(chern_tangent(k)), csm_k);
  out.main_equal = *out.lhs_g == *out.rhs_g;
  // Embedding corollary: i^! c_*(γ) = c(N) ∩ c_*(i^*γ).
  out.corollary_equal = embedding_gysin(csm_n, k) == cap(normal_chern(n, k), csm_k);
  return out;
}

}  // namespace ccycle
