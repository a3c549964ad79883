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

#include "tercodes/fixtures.hpp"

#include <stdexcept>

#include "tercodes/function_spec.hpp"

namespace tercodes {

std::string to_string(const CodeParams& p) {
  return "[" + std::to_string(p.length) + "," + std::to_string(p.dimension) + "," + std::to_string(p.d) + "]";
}

namespace {

constexpr const char* kF92 = "Tr(2*x^92) @ GF(3^4)";
// Even part of Tr(w x^13 + w^7 x^4 + w^7 x^3 + w x^2); the x^3 term is linear.
constexpr const char* kG27 = "Tr(r^1*x^13+r^7*x^4+r^1*x^2) @ GF(3^3)/1+2x+x^3";
constexpr const char* kBent27 = "Tr(g^1*x^4) @ GF(3^3)";
constexpr const char* kF27 = "Tr(r^22*x^13+r^7*x^4+r^1*x^2) @ GF(3^3)/1+2x+x^3";
constexpr const char* kQuad27 = "Tr(r^1*x^2) @ GF(3^3)/1+2x+x^3";
constexpr const char* kBent81 = "Tr(g^2*x^2) @ GF(3^4)";

ConstructionInput fg(const char* f, const char* g, Trit lambda) {
  return {ConstructionKind::kFG, f, g, 1, lambda};
}

ConstructionInput traceg(int n, const char* g, Trit lambda) {
  return {ConstructionKind::kTraceG, "", g, n, lambda};
}

std::vector<ExampleFixture> make_examples() {
  std::vector<ExampleFixture> v;
  v.push_back({1, "four-weight self-orthogonal code", fg(kF92, kG27, 1), {648, 8, 486},
               "1+24x^324+112x^405+104x^486+6320x^648", std::nullopt, std::nullopt,
               "g keeps only the even-degree terms; the linear x^3 term would break f(2x) = f(x)"});
  v.push_back({2, "six-weight self-orthogonal code", fg(kF92, kBent27, 1), {810, 8, 486},
               "1+80x^486+180x^513+6048x^540+160x^567+90x^594+2x^810", std::nullopt, std::nullopt, ""});
  v.push_back({3, "six-weight self-orthogonal code", fg(kF27, kQuad27, 2), {216, 7, 126},
               "1+72x^126+160x^135+1728x^144+144x^153+80x^162+2x^216", std::nullopt, std::nullopt,
               "the primitive element is the root of the default cubic modulus"});
  v.push_back({4, "four-weight self-orthogonal code", traceg(1, kBent81, 1), {81, 6, 51},
               "1+324x^51+240x^54+162x^60+2x^81", std::nullopt, std::nullopt,
               "coefficient is the square of the primitive element; a primitive coefficient gives sign +1"});
  v.push_back({5, "four-weight self-orthogonal code", traceg(1, kBent27, 2), {27, 5, 15},
               "1+54x^15+132x^18+54x^21+2x^27", std::nullopt, std::nullopt,
               "lambda = 2; both values give this code, only lambda = 2 gives the d = 16 lift"});
  v.push_back({6, "LCD lift of example 3", fg(kF27, kQuad27, 2), {216, 7, 126}, "", CodeParams{223, 7, 127},
               CodeParams{223, 216, 3}, ""});
  v.push_back({7, "LCD lift of example 4", traceg(1, kBent81, 1), {81, 6, 51}, "", CodeParams{87, 6, 52},
               CodeParams{87, 81, 3}, ""});
  v.push_back({8, "LCD lift of example 5", traceg(1, kBent27, 2), {27, 5, 15}, "", CodeParams{32, 5, 16},
               CodeParams{32, 27, 3}, ""});
  return v;
}

}  // namespace

const std::vector<ExampleFixture>& reference_examples() {
  static const std::vector<ExampleFixture> v = make_examples();
  return v;
}

const ExampleFixture& reference_example(int id) {
  for (const auto& e : reference_examples()) {
    if (e.id == id) return e;
  }
  throw std::out_of_range("unknown example id " + std::to_string(id));
}

const std::vector<TableFixture>& table_fixtures() {
  static const std::vector<TableFixture> v = {
      {"fg n=2 m=2 K=0 E=-1", fg("Tr([2,2]*x^2) @ GF(3^2)", "Tr([2,0]*x^4) @ GF(3^2)", 1)},
      {"fg n=2 m=2 K=0 E=+1", fg("Tr([2,0]*x^4) @ GF(3^2)", "Tr([2,0]*x^4) @ GF(3^2)", 2)},
      {"fg n=4 m=3 K=3 E=-1", fg(kF92, kG27, 1)},
      {"fg n=4 m=3 K=1 E=+1", fg("Tr([1,1,1,1]*x^10+[2,2,2,2]*x^4) @ GF(3^4)", "Tr([1,0,0]*x^4) @ GF(3^3)", 1)},
      {"fg n=4 m=3 K=2 E=-1 lambda=1", fg(kF92, kBent27, 1)},
      {"fg n=3 m=2 K=0 E=+1 lambda=1", fg("Tr([1,0,0]*x^4) @ GF(3^3)", "Tr([2,0]*x^4) @ GF(3^2)", 1)},
      {"fg n=3 m=3 K=1 E=+1 lambda=2", fg(kF27, kQuad27, 2)},
      {"fg n=3 m=2 K=0 E=-1 lambda=2", fg("Tr([2,0,0]*x^2+[0,2,0]*x^4) @ GF(3^3)", "Tr([2,0]*x^4) @ GF(3^2)", 2)},
      {"traceg n=1 m=4 k=0 e=-1", traceg(1, kBent81, 1)},
      {"traceg n=2 m=4 k=0 e=+1", traceg(2, "Tr(g^1*x^2) @ GF(3^4)", 1)},
      {"traceg n=1 m=3 k=0 e=-1", traceg(1, kBent27, 2)},
      {"traceg n=2 m=3 k=2 e=-1", traceg(2, "Tr([0,1,1]*x^4+[2,1,2]*x^2) @ GF(3^3)", 1)},
  };
  return v;
}

const std::vector<std::string>& lemma_function_specs() {
  static const std::vector<std::string> v = {
      "Tr(x^2) @ GF(3^1)",
      "Tr([2,2]*x^2) @ GF(3^2)",
      "Tr([2,0]*x^4) @ GF(3^2)",
      "Tr([1,0]*x^2+[0,2]*x^4) @ GF(3^2)",
      kBent27,
      kQuad27,
      kG27,
      kF27,
      "Tr([0,1,1]*x^4+[2,1,2]*x^2) @ GF(3^3)",
      kF92,
      kBent81,
      "Tr(g^1*x^2) @ GF(3^4)",
      "Tr([1,1,1,1]*x^10+[2,2,2,2]*x^4) @ GF(3^4)",
  };
  return v;
}

BuiltConstruction build_construction(const ConstructionInput& in, bool check_admission) {
  const TernaryFunction g = parse_function_spec(in.g_spec);
  if (in.kind == ConstructionKind::kFG) {
    const TernaryFunction f = parse_function_spec(in.f_spec);
    return {analyze(f), analyze(g), build_defining_set(f, g, in.lambda, check_admission)};
  }
  if (in.x_degree < 1 || in.x_degree > 12) throw std::invalid_argument("x degree must be between 1 and 12");
  return {std::nullopt, analyze(g), build_trace_defining_set(make_field(in.x_degree), g, in.lambda, check_admission)};
}

ExampleResult run_example(const ExampleFixture& ex, unsigned jobs, TableReading reading) {
  ExampleResult r;
  r.fixture = &ex;
  const BuiltConstruction b = build_construction(ex.input);
  VerifyOptions opts;
  opts.lcd = ex.lcd.has_value();
  opts.jobs = jobs;
  opts.reading = reading;
  r.report = verify_construction(b.defining_set, b.f_profile ? &*b.f_profile : nullptr, b.g_profile, opts);

  auto& diff = r.differences;
  const CodeParams actual{r.report.length, r.report.dimension, r.report.d.value_or(0)};
  if (!(actual == ex.expected)) diff.push_back("parameters: expected " + to_string(ex.expected) + ", got " + to_string(actual));
  if (!ex.enumerator.empty() && r.report.distribution.enumerator() != ex.enumerator) {
    diff.push_back("enumerator: expected " + ex.enumerator + ", got " + r.report.distribution.enumerator());
  }
  if (ex.lcd) {
    const LcdReport& l = *r.report.lcd;
    const CodeParams got{l.length, l.dimension, l.d.value_or(0)};
    if (!(got == *ex.lcd)) diff.push_back("LCD code: expected " + to_string(*ex.lcd) + ", got " + to_string(got));
    if (!l.gram_nonsingular) diff.push_back("LCD code: G G^T is singular");
    const std::size_t dual_d = l.dual.verdict == DualDistance::kThree ? 3 : 0;
    const CodeParams dual{l.length, l.dual_dimension, dual_d};
    if (!(dual == *ex.lcd_dual)) {
      diff.push_back("LCD dual: expected " + to_string(*ex.lcd_dual) + ", got [" + std::to_string(l.length) + "," +
                     std::to_string(l.dual_dimension) + "," + to_string(l.dual.verdict) + "]");
    }
  }
  return r;
}

}  // namespace tercodes
