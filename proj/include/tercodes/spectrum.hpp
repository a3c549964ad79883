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

#ifndef TERCODES_SPECTRUM_HPP_
#define TERCODES_SPECTRUM_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tercodes/eisenstein.hpp"
#include "tercodes/field.hpp"

namespace tercodes {

/// One monomial c * x^e inside a trace polynomial.
struct TraceTerm {
  FieldElement coeff;
  std::uint64_t exponent = 1;
};

/// A map GF(3^n) -> GF(3), materialized as a value table in enumeration order.
class TernaryFunction {
 public:
  /// f(x) = Tr(sum c_i x^{e_i}).
  static TernaryFunction from_terms(std::shared_ptr<const Field> field, std::vector<TraceTerm> terms);
  /// f(x) = Tr(x).
  static TernaryFunction absolute_trace(std::shared_ptr<const Field> field);
  /// Arbitrary function given by its table; has no trace-polynomial form.
  static TernaryFunction from_table(std::shared_ptr<const Field> field, std::vector<Trit> table);

  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }
  const std::vector<TraceTerm>& terms() const { return terms_; }
  const std::vector<Trit>& table() const { return table_; }
  Trit operator()(const FieldElement& x) const { return table_[x.index()]; }
  Trit at(std::uint32_t index) const { return table_[index]; }

  /// Human readable form, e.g. "Tr(g^1*x^2) @ GF(3^4)/...".
  std::string description() const;

 private:
  TernaryFunction(std::shared_ptr<const Field> field, std::vector<TraceTerm> terms, std::vector<Trit> table)
      : field_(std::move(field)), terms_(std::move(terms)), table_(std::move(table)) {}

  std::shared_ptr<const Field> field_;
  std::vector<TraceTerm> terms_;
  std::vector<Trit> table_;
};

/// Evaluates Tr(sum c_i x^{e_i}) directly at one point.
Trit evaluate_trace_polynomial(const Field& field, const std::vector<TraceTerm>& terms, const FieldElement& x);

/// W_f(alpha) = sum_x zeta^{f(x) - Tr(alpha x)}, by direct summation.
EisensteinInt walsh_transform(const TernaryFunction& f, const FieldElement& alpha);

/// Full spectrum indexed by element index, via a radix-3 butterfly over the
/// coordinate space. Agrees with walsh_transform pointwise.
std::vector<EisensteinInt> walsh_spectrum(const TernaryFunction& f);

/// Result of analyzing the Walsh spectrum of a function.
struct SpectrumProfile {
  std::shared_ptr<const Field> field;
  std::vector<Trit> values;
  std::vector<EisensteinInt> spectrum;

  bool plateaued = false;
  /// Amplitude: nonzero squared norms equal 3^{n+k}. Absent when not plateaued.
  std::optional<int> k;
  /// Sign in {+1, -1} when weakly regular, else 0.
  int epsilon = 0;
  bool weakly_regular = false;
  /// Dual function on the support; 0 elsewhere.
  std::vector<Trit> dual_table;
  std::vector<std::uint32_t> support;
  std::vector<bool> in_support;
  bool balanced = false;
  /// f(0) = 0 and f(2x) = f(x).
  bool even_homogeneous = false;
  /// Weakly regular, unbalanced, plateaued and even-homogeneous.
  bool in_wrp = false;
  /// f*(2a) = f*(a) for every a in the support.
  bool dual_homogeneous = false;

  int n() const { return field->degree(); }
  Trit value(const FieldElement& x) const { return values[x.index()]; }
  Trit dual(const FieldElement& a) const { return dual_table[a.index()]; }
  bool supports(const FieldElement& a) const { return in_support[a.index()]; }
};

SpectrumProfile analyze(const TernaryFunction& f);

/// epsilon * sqrt(-3)^{n+k} * zeta^{f*(alpha)} on the support, 0 elsewhere.
EisensteinInt reconstruct_walsh_value(const SpectrumProfile& p, std::uint32_t alpha_index);

}  // namespace tercodes

#endif  // TERCODES_SPECTRUM_HPP_
