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


// Acceptance run: one PASS/FAIL line per criterion, with details below it.
//
// A criterion that fails in exactly the documented way is marked "known" and
// does not change the exit status; any other failure exits 1.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "tercodes/charsums.hpp"
#include "tercodes/codes.hpp"
#include "tercodes/constructions.hpp"
#include "tercodes/fixtures.hpp"
#include "tercodes/function_spec.hpp"
#include "tercodes/report.hpp"

namespace {

using namespace tercodes;
using Clock = std::chrono::steady_clock;

// Enumerated distribution of the first reference example.
constexpr const char* kExampleOneActual = "1+24x^324+112x^405+6318x^432+104x^486+2x^648";

struct Outcome {
  bool pass = true;
  bool known = false;  // failure matches the recorded analysis
  std::string summary;
  std::vector<std::string> details;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << " s";
  return os.str();
}

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

struct CodeRun {
  std::string name;
  VerificationReport report;
};

// Reference examples, computed once and shared by several criteria.
const std::vector<ExampleResult>& example_results() {
  static const std::vector<ExampleResult> v = [] {
    std::vector<ExampleResult> out;
    for (const auto& ex : reference_examples()) out.push_back(run_example(ex, jobs()));
    return out;
  }();
  return v;
}

const std::vector<CodeRun>& fixture_runs() {
  static const std::vector<CodeRun> v = [] {
    std::vector<CodeRun> out;
    for (const auto& fx : table_fixtures()) {
      const BuiltConstruction b = build_construction(fx.input);
      VerifyOptions o;
      o.jobs = jobs();
      out.push_back({fx.name, verify_construction(b.defining_set, b.f_profile ? &*b.f_profile : nullptr, b.g_profile, o)});
    }
    return out;
  }();
  return v;
}

// All self-orthogonal fixture codes: examples 1-5 and the table contexts.
std::vector<const CodeRun*> so_fixtures() {
  static std::vector<CodeRun> examples = [] {
    std::vector<CodeRun> out;
    for (const auto& r : example_results()) {
      if (r.fixture->id <= 5) out.push_back({"example " + std::to_string(r.fixture->id), r.report});
    }
    return out;
  }();
  std::vector<const CodeRun*> v;
  for (const auto& e : examples) v.push_back(&e);
  for (const auto& f : fixture_runs()) v.push_back(&f);
  return v;
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  std::vector<int> failing;
  std::string ex1_actual;
  for (const auto& r : example_results()) {
    if (r.fixture->id > 5) continue;
    ex1_actual = r.fixture->id == 1 ? r.report.distribution.enumerator() : ex1_actual;
    const std::string got = "[" + std::to_string(r.report.length) + "," + std::to_string(r.report.dimension) + "," +
                            std::to_string(r.report.d.value_or(0)) + "] " + r.report.distribution.enumerator();
    if (r.differences.empty()) {
      o.details.push_back("example " + std::to_string(r.fixture->id) + ": " + got);
    } else {
      failing.push_back(r.fixture->id);
      o.pass = false;
      for (const auto& d : r.differences) o.details.push_back("example " + std::to_string(r.fixture->id) + ": " + d);
    }
  }
  const double secs = seconds_since(t0);
  o.known = failing == std::vector<int>{1} && ex1_actual == kExampleOneActual;
  if (o.known) {
    o.details.push_back(
        "analysis: the reference enumerator for example 1 has sum w*A_w = 4199040, but every code of length 648 and "
        "dimension 8 without zero columns has 2*3^7*648 = 2834352, and its own d = 486 contradicts its 24x^324 term; "
        "the enumerated code matches the corrected even-case table row 2*3^(s-2) - 2e(-3)^((s+K-4)/2) = 432");
  }
  o.summary = std::to_string(5 - failing.size()) + "/5 examples exact (" + fmt_seconds(secs) + ")";
  return o;
}

Outcome criterion2() {
  Outcome o;
  int good = 0;
  for (const auto& r : example_results()) {
    if (r.fixture->id < 6) continue;
    const LcdReport& l = *r.report.lcd;
    std::ostringstream line;
    line << "example " << r.fixture->id << ": [" << l.length << "," << l.dimension << "," << l.d.value_or(0)
         << "] det(GG^T) " << (l.gram_nonsingular ? "!= 0" : "= 0") << ", dual [" << l.length << ","
         << l.dual_dimension << "," << to_string(l.dual.verdict) << "]";
    o.details.push_back(line.str());
    if (r.differences.empty() && r.report.ok()) {
      ++good;
    } else {
      o.pass = false;
      for (const auto& d : r.differences) o.details.push_back("  " + d);
      for (const auto& d : r.report.mismatches) o.details.push_back("  " + d);
    }
  }
  o.summary = std::to_string(good) + "/3 LCD lifts exact";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t good = 0;
  const auto fx = so_fixtures();
  for (const CodeRun* c : fx) {
    const auto& so = c->report.self_orthogonal;
    if (so.gram_zero && so.weights_divisible.value_or(false)) {
      ++good;
    } else {
      o.pass = false;
      o.details.push_back(c->name + ": gram_zero=" + std::to_string(so.gram_zero) +
                          " weights_divisible=" + std::to_string(so.weights_divisible.value_or(false)));
    }
  }
  o.summary = std::to_string(good) + "/" + std::to_string(fx.size()) + " codes pass G*G^T = 0 and 3 | every weight";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::set<int> parities;
  std::set<int> signs;
  std::size_t printed_ok = 0;
  std::size_t corrected_ok = 0;
  bool failures_as_analyzed = true;
  for (const auto& run : fixture_runs()) {
    const VerificationReport& r = run.report;
    const PredictionContext& c = r.context;
    const int k = c.kind == ConstructionKind::kFG ? c.k_f + c.k_g : c.k_g;
    const int e = c.kind == ConstructionKind::kFG ? c.eps_f * c.eps_g : c.eps_g;
    parities.insert((c.n + c.m + k) % 2);
    signs.insert(e);
    const Prediction corrected = predict(c, TableReading::kCorrected);
    const bool printed_match = r.prediction.code && matches(*r.prediction.code, r.distribution);
    const bool corrected_match = corrected.code && matches(*corrected.code, r.distribution);
    printed_ok += printed_match;
    corrected_ok += corrected_match;
    const bool affected = c.kind == ConstructionKind::kFG && (c.n + c.m + k) % 2 == 0 && k >= 1;
    if (printed_match == affected || !corrected_match) failures_as_analyzed = false;
    std::string line = run.name + ": " + (r.prediction.code ? r.prediction.code->source : "no prediction") +
                       (printed_match ? " match" : " MISMATCH") + (corrected_match ? "" : ", corrected reading MISMATCH");
    if (!printed_match) line += " (actual " + r.distribution.enumerator() + ")";
    o.details.push_back(line);
  }
  const std::size_t total = fixture_runs().size();
  const bool coverage = total >= 6 && parities.size() == 2 && signs.size() == 2;
  if (!coverage) o.details.push_back("fixture matrix does not cover both parities and both signs");
  o.pass = coverage && printed_ok == total;
  o.known = !o.pass && coverage && failures_as_analyzed && corrected_ok == total;
  if (o.known) {
    o.details.push_back(
        "analysis: the printed last row of the even-case table gives weight 2*3^(s-2) - 2e(-3)^((s+K-2)/2); the "
        "enumerated weight is 2*3^(s-2) - 2e(-3)^((s+K-4)/2). The two agree only when K = 0, where the row is empty");
  }
  o.summary = std::to_string(printed_ok) + "/" + std::to_string(total) + " contexts match the tables as printed, " +
              std::to_string(corrected_ok) + "/" + std::to_string(total) + " with the corrected even-case row";
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto t0 = Clock::now();
  std::vector<SpectrumProfile> ps;
  for (const auto& s : lemma_function_specs()) ps.push_back(analyze(parse_function_spec(s)));
  std::size_t compared_total = 0;
  std::size_t mismatches_total = 0;
  for (int lemma = 2; lemma <= 10; ++lemma) {
    const bool pair = lemma == 2 || lemma == 3 || lemma == 5 || lemma == 6 || lemma == 7;
    std::size_t compared = 0;
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (!pair && i > 0) break;
      for (std::size_t j = 0; j < ps.size(); ++j) {
        for (int nx = 1; nx <= (pair ? 1 : 4); ++nx) {
          const LemmaSweep s = sweep_lemma(lemma, &ps[i], ps[j], nx, jobs());
          compared += s.compared;
          mismatches += s.mismatches;
          for (const auto& row : s.rows) {
            if (!row.match) o.details.push_back("lemma " + std::to_string(lemma) + " " + row.inputs + ": closed " +
                                                row.closed + ", oracle " + row.oracle);
          }
        }
      }
    }
    o.details.push_back("lemma " + std::to_string(lemma) + ": " + std::to_string(compared) + " rows compared, " +
                        std::to_string(mismatches) + " mismatches");
    compared_total += compared;
    mismatches_total += mismatches;
  }
  const double secs = seconds_since(t0);
  o.pass = mismatches_total == 0 && compared_total > 0 && secs < 120;
  o.summary = std::to_string(compared_total) + " rows, " + std::to_string(mismatches_total) + " mismatches (" +
              fmt_seconds(secs) + ")";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t good = 0;
  const auto fx = so_fixtures();
  for (const CodeRun* c : fx) {
    const auto& p = c->report.pless;
    const bool moments = p.total_matches && p.integral && p.dual_a1 == 0 && p.dual_a2 == 0 && p.dual_a3 > 0;
    const bool search = c->report.dual.verdict == DualDistance::kThree && c->report.dual.columns.size() == 3;
    if (moments && search) {
      ++good;
    } else {
      o.pass = false;
      o.details.push_back(c->name + ": A1=" + p.dual_a1.get_str() + " A2=" + p.dual_a2.get_str() +
                          " A3=" + p.dual_a3.get_str() + " search=" + to_string(c->report.dual.verdict));
    }
  }
  // Witnesses are rechecked against freshly built generators.
  std::size_t witnessed = 0;
  for (const auto& ex : reference_examples()) {
    if (ex.id > 5) continue;
    const LinearCode code(augmented_generator(build_construction(ex.input).defining_set));
    const auto r = dual_min_distance_upto3(code);
    if (r.verdict == DualDistance::kThree && verify_dual_witness(code, r)) {
      ++witnessed;
      std::ostringstream os;
      os << "example " << ex.id << " witness columns";
      for (std::size_t k = 0; k < r.columns.size(); ++k) os << ' ' << r.columns[k] << '*' << int(r.coefficients[k]);
      o.details.push_back(os.str());
    } else {
      o.pass = false;
    }
  }
  for (const auto& fxd : table_fixtures()) {
    const LinearCode code(augmented_generator(build_construction(fxd.input).defining_set));
    const auto r = dual_min_distance_upto3(code);
    if (r.verdict == DualDistance::kThree && verify_dual_witness(code, r)) {
      ++witnessed;
    } else {
      o.pass = false;
      o.details.push_back(fxd.name + ": witness check failed");
    }
  }
  o.summary = std::to_string(good) + "/" + std::to_string(fx.size()) + " codes give A1 = A2 = 0 < A3, " +
              std::to_string(witnessed) + " verified weight-3 witnesses";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const std::size_t cases[][2] = {{32, 27}, {87, 81}, {223, 216}};
  for (const auto& c : cases) {
    const std::size_t max_d = sphere_packing_max_d(c[0], c[1]);
    const BoundClass cls = classify_against_bound(c[0], c[1], 3);
    o.details.push_back("(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "): max d " + std::to_string(max_d) +
                        ", d = 3 is " + to_string(cls));
    if (cls != BoundClass::kAlmostOptimal && cls != BoundClass::kOptimal) o.pass = false;
    if (c[0] == 32 && max_d != 4) o.pass = false;
  }
  for (const auto& r : example_results()) {
    if (!r.report.lcd) continue;
    const LcdReport& l = *r.report.lcd;
    const bool ok = l.dual.verdict == DualDistance::kThree && l.dual_class == BoundClass::kAlmostOptimal;
    o.details.push_back("example " + std::to_string(r.fixture->id) + " dual [" + std::to_string(l.length) + "," +
                        std::to_string(l.dual_dimension) + ",3] is " + to_string(l.dual_class));
    o.pass = o.pass && ok;
  }
  o.summary = "sphere-packing classification of the three LCD duals";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t checked = 0;
  std::size_t failed = 0;
  const auto check = [&](const TernaryFunction& f, const std::string& name) {
    ++checked;
    if (!spectral_identities_hold(analyze(f))) {
      ++failed;
      if (failed <= 5) o.details.push_back("fails: " + name);
    }
  };
  // Every function on GF(3) and GF(9).
  for (int n = 1; n <= 2; ++n) {
    auto F = make_field(n);
    const std::uint64_t count = pow3(static_cast<int>(F->size()));
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<Trit> t(F->size());
      std::uint64_t c = code;
      for (auto& v : t) {
        v = static_cast<Trit>(c % 3);
        c /= 3;
      }
      check(TernaryFunction::from_table(F, std::move(t)), "table " + std::to_string(code));
    }
  }
  const std::size_t small = checked;
  // Every monomial Tr(c x^e) with c in {1, xi} for n = 3..6.
  for (int n = 3; n <= 6; ++n) {
    auto F = make_field(n);
    for (const FieldElement& c : {F->one(), F->primitive_element()}) {
      for (std::uint64_t e = 1; e + 1 < F->size(); ++e) check(TernaryFunction::from_terms(F, {{c, e}}), "monomial");
    }
  }
  const std::size_t monomials = checked - small;
  // Every function named by a fixture or example.
  std::set<std::string> specs(lemma_function_specs().begin(), lemma_function_specs().end());
  for (const auto& ex : reference_examples()) {
    if (!ex.input.f_spec.empty()) specs.insert(ex.input.f_spec);
    specs.insert(ex.input.g_spec);
  }
  for (const auto& fx : table_fixtures()) {
    if (!fx.input.f_spec.empty()) specs.insert(fx.input.f_spec);
    specs.insert(fx.input.g_spec);
  }
  for (const auto& s : specs) check(parse_function_spec(s), s);
  o.pass = failed == 0;
  o.details.push_back(std::to_string(small) + " functions on GF(3) and GF(9), " + std::to_string(monomials) +
                      " monomials on GF(3^3)..GF(3^6), " + std::to_string(specs.size()) + " fixture functions");
  o.summary = std::to_string(checked - failed) + "/" + std::to_string(checked) +
              " spectra satisfy Parseval and the plateau support size";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"example reproduction", criterion1},  {"LCD reproduction", criterion2},
      {"self-orthogonality", criterion3},    {"table equivalence", criterion4},
      {"lemma oracle equivalence", criterion5}, {"dual distance", criterion6},
      {"bound classification", criterion7},  {"spectral invariants", criterion8},
  };
  int unexpected = 0;
  int known = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Outcome o = criteria[i].second();
    std::cout << "criterion " << i + 1 << " (" << criteria[i].first << "): " << (o.pass ? "PASS" : "FAIL");
    if (!o.pass && o.known) std::cout << " [known]";
    std::cout << " - " << o.summary << '\n';
    for (const auto& d : o.details) std::cout << "    " << d << '\n';
    std::cout.flush();
    if (!o.pass) (o.known ? known : unexpected) += 1;
  }
  std::cout << "summary: " << criteria.size() - known - unexpected << " passed, " << known << " known failures, "
            << unexpected << " unexpected failures\n";
  return unexpected == 0 ? 0 : 1;
}
