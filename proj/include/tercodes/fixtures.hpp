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

#ifndef TERCODES_FIXTURES_HPP_
#define TERCODES_FIXTURES_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tercodes/constructions.hpp"

namespace tercodes {

struct CodeParams {
  std::size_t length = 0;
  std::size_t dimension = 0;
  std::size_t d = 0;

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

std::string to_string(const CodeParams& p);

/// A construction input: two function specs (f empty for kTraceG), the
/// degree of the x field for kTraceG, and lambda.
struct ConstructionInput {
  ConstructionKind kind = ConstructionKind::kFG;
  std::string f_spec;
  std::string g_spec;
  int x_degree = 1;
  Trit lambda = 1;
};

/// Numbered reference example with its expected code.
struct ExampleFixture {
  int id = 0;
  std::string title;
  ConstructionInput input;
  CodeParams expected;
  /// Expected weight enumerator, empty for the LCD examples.
  std::string enumerator;
  /// Expected (I | G) code and its dual for the LCD examples.
  std::optional<CodeParams> lcd;
  std::optional<CodeParams> lcd_dual;
  std::string note;
};

const std::vector<ExampleFixture>& reference_examples();
/// Throws std::out_of_range for an unknown id.
const ExampleFixture& reference_example(int id);

/// Admissible contexts whose enumerated distributions are compared with the
/// table predictions.
struct TableFixture {
  std::string name;
  ConstructionInput input;
};

const std::vector<TableFixture>& table_fixtures();

/// Functions whose lemma sweeps are compared with the oracles; pairs are
/// formed over the list, and the trace lemmas use x degrees 1..4.
const std::vector<std::string>& lemma_function_specs();

/// Profiles and defining set for a construction input.
struct BuiltConstruction {
  std::optional<SpectrumProfile> f_profile;
  SpectrumProfile g_profile;
  DefiningSet defining_set;
};

BuiltConstruction build_construction(const ConstructionInput& in, bool check_admission = true);

struct ExampleResult {
  const ExampleFixture* fixture = nullptr;
  VerificationReport report;
  /// Expected-vs-actual differences against the fixture itself.
  std::vector<std::string> differences;

  bool ok() const { return differences.empty() && report.ok(); }
};

ExampleResult run_example(const ExampleFixture& ex, unsigned jobs = 1,
                          TableReading reading = TableReading::kAsPrinted);

}  // namespace tercodes

#endif  // TERCODES_FIXTURES_HPP_
