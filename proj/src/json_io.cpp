#include "ccycle/json_io.hpp"

namespace ccycle {

namespace {

long long get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw io_error(std::string("expected integer field \"") + key + "\"");
  return j[key].get<long long>();
}

std::vector<long long> int_array(const json& j) {
  if (!j.is_array()) throw io_error("expected integer array");
  std::vector<long long> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw io_error("expected integer array");
    v.push_back(x.get<long long>());
  }
  return v;
}

}  // namespace

json to_json(const GradedClass& x) {
  return json{{"n", x.n}, {"coeffs", x.coeffs}};
}

GradedClass graded_from_json(const json& j) {
  int n = static_cast<int>(get_int(j, "n"));
  auto c = int_array(j.at("coeffs"));
  if (static_cast<int>(c.size()) != n + 1) throw io_error("GradedClass: wrong coeffs length");
  return GradedClass(n, std::move(c));
}

json to_json(const BiGradedClass& x) {
  return json{{"n", x.n}, {"m", x.m}, {"coeffs", x.coeffs}};
}

json to_json(const Arrangement& a) {
  json hs = json::array();
  for (const auto& h : a.hyperplanes) {
    json row = json::array();
    for (const auto& x : h) row.push_back(format_rational(x));
    hs.push_back(std::move(row));
  }
  return json{{"n", a.n}, {"hyperplanes", std::move(hs)}};
}

QMat matrix_from_json(const json& j) {
  if (!j.is_array()) throw io_error("expected matrix of rational strings");
  QMat m;
  for (const auto& row : j) {
    if (!row.is_array()) throw io_error("expected matrix of rational strings");
    QVec v;
    for (const auto& x : row) {
      if (x.is_number_integer())
        v.push_back(Rat(x.get<long long>()));
      else if (x.is_string())
        v.push_back(parse_rational(x.get<std::string>()));
      else
        throw io_error("matrix entries must be integers or \"p/q\" strings");
    }
    m.push_back(std::move(v));
  }
  return m;
}

json to_json(const QMat& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(format_rational(x));
    out.push_back(std::move(r));
  }
  return out;
}

Arrangement arrangement_from_json(const json& j) {
  int n = static_cast<int>(get_int(j, "n"));
  if (!j.contains("hyperplanes")) throw io_error("Arrangement: missing \"hyperplanes\"");
  QMat hs = matrix_from_json(j.at("hyperplanes"));
  try {
    return Arrangement(n, std::move(hs));
  } catch (const arrangement_error& e) {
    throw io_error(e.what());
  }
}

json to_json(const StratPoset& p, const EulerTable& e) {
  json strata = json::array();
  for (const auto& s : p.strata) {
    json js{{"id", s.id}, {"dim", s.dim}, {"chi_c", s.chi_c},
            {"below", std::vector<std::string>(s.below.begin(), s.below.end())}};
    if (s.pushforward) js["class"] = s.pushforward->coeffs;
    strata.push_back(std::move(js));
  }
  json table = json::object();
  for (const auto& [z, row] : e.e) {
    json r = json::object();
    for (const auto& [s, v] : row) r[s] = v;
    table[z] = std::move(r);
  }
  json out{{"ambient_n", p.n}, {"strata", std::move(strata)}, {"euler_table", std::move(table)}};
  json mather = json::object();
  for (const auto& s : p.strata)
    if (s.mather) mather[s.id] = s.mather->coeffs;
  if (!mather.empty()) out["mather"] = std::move(mather);
  return out;
}

std::pair<PosetPtr, EulerTable> poset_from_json(const json& j) {
  auto p = std::make_shared<StratPoset>();
  p->n = static_cast<int>(get_int(j, "ambient_n"));
  if (!j.contains("strata") || !j["strata"].is_array())
    throw io_error("StratPoset: missing \"strata\"");
  for (const auto& js : j["strata"]) {
    Stratum s;
    s.id = js.at("id").get<std::string>();
    s.dim = static_cast<int>(get_int(js, "dim"));
    s.chi_c = get_int(js, "chi_c");
    if (js.contains("below"))
      for (const auto& b : js["below"]) s.below.insert(b.get<std::string>());
    if (js.contains("class"))
      s.pushforward = GradedClass(p->n, int_array(js["class"]));
    if (j.contains("mather") && j["mather"].contains(s.id))
      s.mather = GradedClass(p->n, int_array(j["mather"][s.id]));
    p->strata.push_back(std::move(s));
  }
  try {
    p->finalize();
  } catch (const poset_error& e) {
    throw io_error(e.what());
  }
  EulerTable t;
  if (j.contains("euler_table"))
    for (const auto& [z, row] : j["euler_table"].items())
      for (const auto& [s, v] : row.items()) t.e[z][s] = v.get<long long>();
  t.validate(*p);
  return {PosetPtr(p), t};
}

json to_json(const LagrangianCycle& l) {
  json out = json::array();
  for (const auto& t : l.terms)
    out.push_back(json{{"stratum_id", t.stratum_id}, {"coefficient", t.coeff}});
  return out;
}

LagrangianCycle cycle_from_json(const json& j) {
  if (!j.is_array()) throw io_error("LagrangianCycle: expected array of terms");
  LagrangianCycle l;
  for (const auto& t : j)
    l.terms.push_back({t.at("stratum_id").get<std::string>(), 0, get_int(t, "coefficient")});
  l.normalize();
  return l;
}

ConstructibleFunction function_from_json(const json& j, const ArrangementModel& m) {
  if (j.contains("values")) {
    std::vector<long long> v(m.poset->strata.size(), 0);
    for (const auto& [id, val] : j["values"].items()) {
      if (!m.poset->index.count(id)) throw io_error("function references unknown stratum " + id);
      v[m.poset->idx(id)] = val.get<long long>();
    }
    return ConstructibleFunction(m.poset, std::move(v));
  }
  if (j.contains("indicator_coeffs")) {
    ConstructibleFunction f = zero_function(m.poset);
    for (const auto& [id, val] : j["indicator_coeffs"].items()) {
      if (!m.poset->index.count(id)) throw io_error("function references unknown flat " + id);
      f = add(f, scale(val.get<long long>(), indicator_of_closure(m.poset, id)));
    }
    return f;
  }
  throw io_error("constructible function needs \"values\" or \"indicator_coeffs\"");
}

LinearMapData map_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "projection")
    return LinearMapData::projection(static_cast<int>(get_int(j, "a")),
                                     static_cast<int>(get_int(j, "b")));
  if (kind == "embedding") {
    QMat e = matrix_from_json(j.at("matrix"));
    if (e.empty() || rank(e) != static_cast<int>(e.size()))
      throw io_error("embedding matrix must have full row rank");
    return LinearMapData::embedding(std::move(e));
  }
  if (kind == "composite") {
    std::vector<LinearMapData> parts;
    for (const auto& p : j.at("parts")) parts.push_back(map_from_json(p));
    return LinearMapData::composite(std::move(parts));
  }
  throw io_error("unknown map kind: " + kind);
}

json to_json(const Witness& w) {
  json out{{"description", w.description}};
  if (!w.flat_rows.empty()) out["flat"] = to_json(w.flat_rows);
  if (!w.covector.empty()) out["covector"] = to_json(QMat{w.covector})[0];
  return out;
}

}  // namespace ccycle
