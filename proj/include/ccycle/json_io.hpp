#pragma once

#include "json.hpp"

#include "ccycle/arrangements.hpp"
#include "ccycle/lagrangian.hpp"
#include "ccycle/microlocal.hpp"
#include "ccycle/strata.hpp"

namespace ccycle {

using json = nlohmann::json;

struct io_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ---- classes ----
json to_json(const GradedClass& x);          // {"n": int, "coeffs": [int]}
GradedClass graded_from_json(const json& j);
json to_json(const BiGradedClass& x);        // {"n", "m", "coeffs": [[int]]}

// ---- arrangements ----
json to_json(const Arrangement& a);          // {"n": int, "hyperplanes": [["p/q", ...]]}
Arrangement arrangement_from_json(const json& j);

// ---- posets ----
// {"ambient_n", "strata": [{"id","dim","chi_c","class":[int],"below":[ids]}],
//  "euler_table": {Z: {S: int}}, "mather": {Z: [int]}?}
json to_json(const StratPoset& p, const EulerTable& e);
std::pair<PosetPtr, EulerTable> poset_from_json(const json& j);

// ---- cycles ----
json to_json(const LagrangianCycle& l);      // [{"stratum_id", "coefficient"}]
LagrangianCycle cycle_from_json(const json& j);

// ---- constructible functions on an arrangement model ----
// Either {"values": {stratum_id: int}} (zero where omitted) or
// {"indicator_coeffs": {flat_id: int}} meaning Σ c_F · 1_{closure F}.
ConstructibleFunction function_from_json(const json& j, const ArrangementModel& m);

// ---- linear maps ----
// {"kind": "projection", "a": int, "b": int} |
// {"kind": "embedding", "matrix": [["p/q", ...], ...]} |
// {"kind": "composite", "parts": [map, ...]}
LinearMapData map_from_json(const json& j);

// ---- witnesses ----
json to_json(const Witness& w);

QMat matrix_from_json(const json& j);
json to_json(const QMat& m);

}  // namespace ccycle
