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

#ifndef TERCODES_CHARSUMS_HPP_
#define TERCODES_CHARSUMS_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tercodes/eisenstein.hpp"
#include "tercodes/spectrum.hpp"

namespace tercodes {

// Character sums and level counts over pairs of weakly regular functions.
// Every quantity has a brute-force oracle computed from the function tables
// and a closed-form twin that reports why it does not apply instead of
// returning a value outside its hypotheses.

template <class T>
struct ClosedForm {
  std::optional<T> value;
  std::string unmet;

  static ClosedForm of(T v) { return {std::move(v), {}}; }
  static ClosedForm fail(std::string why) { return {std::nullopt, std::move(why)}; }
};

/// f over GF(3^n), g over GF(3^m), and the shifts lambda, mu.
struct PairContext {
  const SpectrumProfile* f = nullptr;
  const SpectrumProfile* g = nullptr;
  Trit lambda = 1;
  Trit mu = 0;

  int n() const { return f->n(); }
  int m() const { return g->n(); }
  int s() const { return n() + m(); }
  int k_sum() const { return *f->k + *g->k; }
  int eps() const { return f->epsilon * g->epsilon; }
};

/// Throws std::invalid_argument unless both profiles are weakly regular.
PairContext make_pair_context(const SpectrumProfile& f, const SpectrumProfile& g, Trit lambda, Trit mu = 0);

/// Tr_3^n(x) + g(y) + lambda over GF(3^n) x GF(3^m).
struct TraceContext {
  std::shared_ptr<const Field> x_field;
  const SpectrumProfile* g = nullptr;
  Trit lambda = 1;
  Trit mu = 0;

  int n() const { return x_field->degree(); }
  int m() const { return g->n(); }
  int s() const { return n() + m(); }
};

TraceContext make_trace_sum_context(std::shared_ptr<const Field> x_field, const SpectrumProfile& g, Trit lambda,
                                    Trit mu = 0);

// Pairs (a, b) in supp f x supp g with f*(a) + g*(b) + lambda = target.
std::uint64_t dual_level_count(const PairContext& c, Trit target);
ClosedForm<mpz_class> dual_level_closed(const PairContext& c, Trit target);

// Pairs (a, b) in GF(3)* x supp g with g*(b / a) + lambda - mu / a = 0.
std::uint64_t scaled_dual_level_count(const SpectrumProfile& g, Trit lambda, Trit mu);
ClosedForm<mpz_class> scaled_dual_level_closed(const SpectrumProfile& g, Trit lambda, Trit mu);

// sum_{t != 0} sum_{x,y} zeta^{t (f(x) + g(y) + lambda)}
EisensteinInt s1_oracle(const PairContext& c);
ClosedForm<EisensteinInt> s1_closed(const PairContext& c);

// sum_{u != 0} sum_{x,y} zeta^{u (Tr(alpha x) + Tr(beta y) + mu)}
EisensteinInt s2_oracle(const Field& x_field, const Field& y_field, std::uint32_t alpha, std::uint32_t beta, Trit mu);
EisensteinInt s2_closed(int s, bool alpha_beta_zero, Trit mu);

// sum_{t,u != 0} sum_{x,y} zeta^{t (f(x) + g(y) + lambda) + u (Tr(alpha x) + Tr(beta y) + mu)}
EisensteinInt s3_oracle(const PairContext& c, std::uint32_t alpha, std::uint32_t beta);
ClosedForm<EisensteinInt> s3_closed(const PairContext& c, std::uint32_t alpha, std::uint32_t beta);

// As s3 with f replaced by the absolute trace of GF(3^n).
EisensteinInt s4_oracle(const TraceContext& c, std::uint32_t alpha, std::uint32_t beta);
ClosedForm<EisensteinInt> s4_closed(const TraceContext& c, std::uint32_t alpha, std::uint32_t beta);

// As s4 with t^2 in place of t in the first exponent.
EisensteinInt s5_oracle(const TraceContext& c, std::uint32_t alpha, std::uint32_t beta);
ClosedForm<EisensteinInt> s5_closed(const TraceContext& c, std::uint32_t alpha, std::uint32_t beta);
/// The three-case table with the (sqrt(-3) - 1) and (sqrt(-3) + 1) rows taken
/// literally; differs from s5_closed exactly when the level is 2.
ClosedForm<EisensteinInt> s5_closed_as_printed(const TraceContext& c, std::uint32_t alpha, std::uint32_t beta);

// #{(x, y) : Tr(x) + g(y) + lambda = 0, Tr(alpha x) + Tr(beta y) + mu = 0}
std::uint64_t ng0_count(const TraceContext& c, std::uint32_t alpha, std::uint32_t beta);
ClosedForm<mpz_class> ng0_closed(const TraceContext& c, std::uint32_t alpha, std::uint32_t beta);

/// One row of a lemma sweep.
struct LemmaRow {
  std::string inputs;
  std::string closed;  // value, or "unmet: <reason>"
  std::string oracle;
  bool applicable = true;
  bool match = true;
};

struct LemmaSweep {
  int lemma = 0;
  std::vector<LemmaRow> rows;
  std::size_t compared = 0;
  std::size_t mismatches = 0;
};

/// Runs one of lemmas 2..10 over every lambda in GF(3)* (and lambda = 0 for
/// lemma 2), every mu, every target and every (alpha, beta) that applies.
/// `f` is ignored by the trace lemmas 4 and 8..10, which use GF(3^x_degree).
/// Throws std::invalid_argument for an unknown lemma or missing input.
LemmaSweep sweep_lemma(int lemma, const SpectrumProfile* f, const SpectrumProfile& g, int x_degree,
                       unsigned jobs = 1);

}  // namespace tercodes

#endif  // TERCODES_CHARSUMS_HPP_
