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

#ifndef TERCODES_CONSTRUCTIONS_HPP_
#define TERCODES_CONSTRUCTIONS_HPP_

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tercodes/codes.hpp"
#include "tercodes/spectrum.hpp"

namespace tercodes {

enum class ConstructionKind {
  kFG,      // f(x) + g(y) + lambda = 0
  kTraceG,  // Tr(x) + g(y) + lambda = 0
};

std::string to_string(ConstructionKind k);

/// Reasons a function profile fails the hypotheses of the constructions.
/// Empty when admitted.
std::vector<std::string> admission_failures(const SpectrumProfile& p, bool require_dual_homogeneous);

class AdmissionError : public std::invalid_argument {
 public:
  AdmissionError(const std::string& which, std::vector<std::string> reasons);
  const std::vector<std::string>& reasons() const { return reasons_; }

 private:
  std::vector<std::string> reasons_;
};

/// Coordinates of a defining-set code: pairs of element indices in
/// lexicographic product order (x major).
struct DefiningSet {
  ConstructionKind kind = ConstructionKind::kFG;
  Trit lambda = 1;
  std::shared_ptr<const Field> x_field;
  std::shared_ptr<const Field> y_field;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;

  std::size_t size() const { return pairs.size(); }
  int n() const { return x_field->degree(); }
  int m() const { return y_field->degree(); }
};

/// f(x) + g(y) + lambda = 0. With `check_admission` both functions must pass
/// WRP admission including dual homogeneity.
DefiningSet build_defining_set(const TernaryFunction& f, const TernaryFunction& g, Trit lambda,
                               bool check_admission = true);
/// Tr_n(x) + g(y) + lambda = 0 over GF(3^n) x GF(3^m).
DefiningSet build_trace_defining_set(std::shared_ptr<const Field> x_field, const TernaryFunction& g, Trit lambda,
                                     bool check_admission = true);

/// Rows Tr(xi_n^i x_j) for i < n, Tr(xi_m^i y_j) for i < m, then all ones.
Gf3Matrix augmented_generator(const DefiningSet& ds);

/// Parameters the tables need, read off actual spectra.
struct PredictionContext {
  ConstructionKind kind = ConstructionKind::kFG;
  int n = 1;
  int m = 1;
  int k_f = 0;  // unused for kTraceG
  int eps_f = 1;
  int k_g = 0;
  int eps_g = 1;
  Trit lambda = 1;
  /// f*(0) = g*(0) = 0, which the character-sum evaluations assume.
  bool duals_vanish_at_zero = true;
};

PredictionContext make_context(const SpectrumProfile& f, const SpectrumProfile& g, Trit lambda);
PredictionContext make_trace_context(int n, const SpectrumProfile& g, Trit lambda);

/// Which reading of the even-case table to use for its last row.
enum class TableReading {
  kAsPrinted,
  /// Last-row weight 2*3^(s-2) - 2 e (-3)^((s+K-4)/2), i.e. (2/3) of the length,
  /// as the weight formula gives when S3 vanishes.
  kCorrected,
};

struct WeightRow {
  mpq_class weight;
  mpq_class multiplicity;
};

struct PredictedCode {
  std::string source;  // "table1" .. "table5"
  mpz_class length;
  std::size_t dimension = 0;
  std::vector<WeightRow> rows;  // raw table rows, zero row included
  /// Merged weight -> multiplicity.
  std::map<mpz_class, mpz_class> merged;
  /// Multiplicities sum to 3^dimension, every entry is a nonnegative integer.
  bool consistent = false;
  /// First power moment: sum w A_w == 2 * 3^(dim-1) * length.
  bool first_moment_holds = false;
  mpz_class dual_length;
  mpz_class dual_dimension;
  int dual_distance = 3;
  /// 1 + least nonzero predicted weight, the distance bound for (I | G).
  mpz_class lcd_distance_lower_bound;
};

struct Prediction {
  std::optional<PredictedCode> code;
  std::string unmet;  // why no prediction was made
};

Prediction predict(const PredictionContext& ctx, TableReading reading = TableReading::kAsPrinted);

/// Merged predicted distribution versus an enumerated one.
bool matches(const PredictedCode& p, const WeightDistribution& actual);

/// (I | G) for the augmented generator of `ds`.
Gf3Matrix lcd_generator(const DefiningSet& ds);

struct LcdReport {
  std::size_t length = 0;
  std::size_t dimension = 0;
  std::optional<std::size_t> d;
  WeightDistribution distribution;
  bool gram_nonsingular = false;
  DualDistanceResult dual;
  std::size_t dual_dimension = 0;
  std::size_t bound_max_d = 0;
  BoundClass dual_class = BoundClass::kNeither;
  std::optional<mpz_class> d_lower_bound;
};

struct VerifyOptions {
  bool lcd = false;
  unsigned jobs = 1;
  TableReading reading = TableReading::kAsPrinted;
};

struct VerificationReport {
  ConstructionKind kind = ConstructionKind::kFG;
  PredictionContext context;
  std::optional<SpectrumProfile> f_profile;  // kFG only
  SpectrumProfile g_profile;
  std::size_t length = 0;
  std::size_t dimension = 0;
  std::optional<std::size_t> d;
  WeightDistribution distribution;
  SelfOrthogonality self_orthogonal;
  DualDistanceResult dual;
  PlessReport pless;
  Prediction prediction;
  std::optional<LcdReport> lcd;
  /// Human-readable predicted-vs-actual differences; empty on full match.
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Builds the code, enumerates it and compares every field with the table
/// prediction when one applies.
VerificationReport verify_construction(const DefiningSet& ds, const SpectrumProfile* f_profile,
                                       const SpectrumProfile& g_profile, const VerifyOptions& opts = {});

}  // namespace tercodes

#endif  // TERCODES_CONSTRUCTIONS_HPP_
