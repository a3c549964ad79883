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

#ifndef TERCODES_REPORT_HPP_
#define TERCODES_REPORT_HPP_

#include <string>

#include "json.hpp"
#include "tercodes/charsums.hpp"
#include "tercodes/codes.hpp"
#include "tercodes/constructions.hpp"
#include "tercodes/fixtures.hpp"
#include "tercodes/spectrum.hpp"

namespace tercodes {

using Json = nlohmann::ordered_json;

/// Spectral summary; includes Parseval and support-size checks.
Json profile_json(const SpectrumProfile& p, const std::string& spec);
/// True when sum |W|^2 = 3^(2n) and, for plateaued p, |support| = 3^(n-k).
bool spectral_identities_hold(const SpectrumProfile& p);

Json distribution_json(const WeightDistribution& d);
Json prediction_json(const Prediction& p);
Json verification_json(const VerificationReport& r);
Json lemma_json(const LemmaSweep& s);
Json example_json(const ExampleResult& r);

/// One "path: value" line per leaf, in document order. Numbers are printed
/// exactly as in the JSON dump.
std::string render_text(const Json& j);

}  // namespace tercodes

#endif  // TERCODES_REPORT_HPP_
