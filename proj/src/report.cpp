// Copyright 2026 The tercodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tercodes/report.hpp"

#include <algorithm>
#include <sstream>

#include "tercodes/function_spec.hpp"

namespace tercodes {

namespace {

// Big integers go out as decimal strings so no precision is lost.
std::string big(const mpz_class& v) { return v.get_str(); }
std::string big(const mpq_class& v) { return v.get_str(); }

Json optional_size(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json dual_json(const DualDistanceResult& d) {
  Json j;
  j["d_upto3"] = to_string(d.verdict);
  j["witness_columns"] = d.columns;
  Json coeffs = Json::array();
  for (Trit c : d.coefficients) coeffs.push_back(static_cast<int>(c));
  j["witness_coefficients"] = coeffs;
  return j;
}

Json context_json(const PredictionContext& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["n"] = c.n;
  j["m"] = c.m;
  if (c.kind == ConstructionKind::kFG) {
    j["k_f"] = c.k_f;
    j["eps_f"] = c.eps_f;
  }
  j["k_g"] = c.k_g;
  j["eps_g"] = c.eps_g;
  j["lambda"] = static_cast<int>(c.lambda);
  return j;
}

}  // namespace

bool spectral_identities_hold(const SpectrumProfile& p) {
  mpz_class total = 0;
  for (const auto& w : p.spectrum) total += w.norm();
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), 3, 2 * static_cast<unsigned long>(p.n()));
  if (total != q) return false;
  if (p.plateaued && p.k) {
    return p.support.size() == pow3(p.n() - *p.k);
  }
  return true;
}

Json profile_json(const SpectrumProfile& p, const std::string& spec) {
  Json j;
  j["function"] = spec;
  j["field"] = format_field_spec(*p.field);
  j["n"] = p.n();
  j["plateaued"] = p.plateaued;
  j["k"] = p.k ? Json(*p.k) : Json(nullptr);
  j["epsilon"] = p.epsilon;
  j["weakly_regular"] = p.weakly_regular;
  j["support_size"] = p.support.size();
  j["balanced"] = p.balanced;
  j["even_homogeneous"] = p.even_homogeneous;
  j["in_wrp"] = p.in_wrp;
  j["dual_homogeneous"] = p.dual_homogeneous;
  j["dual_at_zero"] = p.in_support[0] ? Json(static_cast<int>(p.dual_table[0])) : Json(nullptr);
  j["walsh_at_zero"] = p.spectrum[0].to_string();
  j["spectral_identities_hold"] = spectral_identities_hold(p);
  Json reasons = Json::array();
  for (const auto& r : admission_failures(p, true)) reasons.push_back(r);
  j["admission_failures"] = reasons;
  return j;
}

Json distribution_json(const WeightDistribution& d) {
  Json j;
  j["enumerator"] = d.enumerator();
  Json rows = Json::array();
  for (const auto& [w, a] : d.counts) rows.push_back(Json::array({w, a}));
  j["counts"] = rows;
  j["total"] = d.total();
  return j;
}

Json prediction_json(const Prediction& p) {
  Json j;
  if (!p.code) {
    j["applies"] = false;
    j["unmet"] = p.unmet;
    return j;
  }
  const PredictedCode& c = *p.code;
  j["applies"] = true;
  j["source"] = c.source;
  j["length"] = big(c.length);
  j["dimension"] = c.dimension;
  Json rows = Json::array();
  for (const auto& r : c.rows) rows.push_back(Json::array({big(r.weight), big(r.multiplicity)}));
  j["rows"] = rows;
  Json merged = Json::array();
  for (const auto& [w, a] : c.merged) merged.push_back(Json::array({big(w), big(a)}));
  j["merged"] = merged;
  j["consistent"] = c.consistent;
  j["first_moment_holds"] = c.first_moment_holds;
  j["dual"] = Json::array({big(c.dual_length), big(c.dual_dimension), c.dual_distance});
  j["lcd_distance_lower_bound"] = big(c.lcd_distance_lower_bound);
  return j;
}

Json verification_json(const VerificationReport& r) {
  Json j;
  j["kind"] = to_string(r.kind);
  j["lambda"] = static_cast<int>(r.context.lambda);
  if (r.f_profile) j["f"] = profile_json(*r.f_profile, "");
  j["g"] = profile_json(r.g_profile, "");
  if (r.f_profile) j["f"].erase("function");
  j["g"].erase("function");
  if (r.prediction.code) j["context"] = context_json(r.context);
  j["length"] = r.length;
  j["dimension"] = r.dimension;
  j["d"] = optional_size(r.d);
  j["distribution"] = distribution_json(r.distribution);
  j["self_orthogonal"] = {{"gram_zero", r.self_orthogonal.gram_zero},
                          {"weights_divisible_by_3", r.self_orthogonal.weights_divisible.value_or(false)},
                          {"methods_agree", r.self_orthogonal.agree()}};
  j["dual"] = dual_json(r.dual);
  j["pless"] = {{"total_matches", r.pless.total_matches},
                {"dual_a1", big(r.pless.dual_a1)},
                {"dual_a2", big(r.pless.dual_a2)},
                {"dual_a3", big(r.pless.dual_a3)},
                {"integral", r.pless.integral}};
  j["prediction"] = prediction_json(r.prediction);
  if (r.lcd) {
    const LcdReport& l = *r.lcd;
    Json lj;
    lj["length"] = l.length;
    lj["dimension"] = l.dimension;
    lj["d"] = optional_size(l.d);
    lj["d_lower_bound"] = l.d_lower_bound ? Json(big(*l.d_lower_bound)) : Json(nullptr);
    lj["distribution"] = distribution_json(l.distribution);
    lj["gram_nonsingular"] = l.gram_nonsingular;
    lj["dual_dimension"] = l.dual_dimension;
    lj["dual"] = dual_json(l.dual);
    lj["sphere_packing_max_d"] = l.bound_max_d;
    lj["dual_class"] = l.dual.verdict == DualDistance::kThree ? Json(to_string(l.dual_class)) : Json(nullptr);
    j["lcd"] = lj;
  }
  j["mismatches"] = r.mismatches;
  j["ok"] = r.ok();
  return j;
}

Json lemma_json(const LemmaSweep& s) {
  Json j;
  j["lemma"] = s.lemma;
  j["rows_total"] = s.rows.size();
  j["compared"] = s.compared;
  j["mismatches"] = s.mismatches;
  Json rows = Json::array();
  for (const auto& r : s.rows) {
    rows.push_back({{"inputs", r.inputs}, {"closed", r.closed}, {"oracle", r.oracle}, {"match", r.match}});
  }
  j["rows"] = rows;
  return j;
}

Json example_json(const ExampleResult& r) {
  Json j;
  const ExampleFixture& ex = *r.fixture;
  j["example"] = ex.id;
  j["title"] = ex.title;
  j["expected"] = to_string(ex.expected);
  if (!ex.enumerator.empty()) j["expected_enumerator"] = ex.enumerator;
  if (ex.lcd) {
    j["expected_lcd"] = to_string(*ex.lcd);
    j["expected_lcd_dual"] = to_string(*ex.lcd_dual);
  }
  if (!ex.note.empty()) j["note"] = ex.note;
  j["inputs"] = {{"kind", to_string(ex.input.kind)},
                 {"f", ex.input.f_spec},
                 {"g", ex.input.g_spec},
                 {"x_degree", ex.input.x_degree},
                 {"lambda", static_cast<int>(ex.input.lambda)}};
  j["report"] = verification_json(r.report);
  j["differences"] = r.differences;
  j["ok"] = r.ok();
  return j;
}

namespace {

void flatten(const Json& j, const std::string& path, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    return;
  }
  if (j.is_array()) {
    const bool scalar_only = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
    if (scalar_only) {
      out << path << ": " << j.dump() << '\n';
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  flatten(j, "", os);
  return os.str();
}

}  // namespace tercodes
