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


#include "tercodes/charsums.hpp"

#include <gtest/gtest.h>

#include "tercodes/fixtures.hpp"
#include "tercodes/function_spec.hpp"

namespace tercodes {
namespace {

SpectrumProfile profile(const std::string& spec) { return analyze(parse_function_spec(spec)); }

const SpectrumProfile& f92() {
  static const SpectrumProfile p = profile("Tr(2*x^92) @ GF(3^4)");
  return p;
}
const SpectrumProfile& g27() {
  static const SpectrumProfile p = profile("Tr(r^1*x^13+r^7*x^4+r^1*x^2) @ GF(3^3)/1+2x+x^3");
  return p;
}
const SpectrumProfile& bent9() {
  static const SpectrumProfile p = profile("Tr([2,2]*x^2) @ GF(3^2)");
  return p;
}
const SpectrumProfile& bent81() {
  static const SpectrumProfile p = profile("Tr(g^2*x^2) @ GF(3^4)");
  return p;
}

TEST(DualLevel, ExampleOneContext) {
  for (Trit lambda = 1; lambda < 3; ++lambda) {
    const PairContext c = make_pair_context(f92(), g27(), lambda);
    EXPECT_EQ(c.s(), 7);
    EXPECT_EQ(c.k_sum(), 3);
    EXPECT_EQ(c.eps(), -1);
    EXPECT_EQ(dual_level_count(c, 0), 24u);
    EXPECT_EQ(dual_level_closed(c, 0).value, mpz_class(24));
  }
  const PairContext c0 = make_pair_context(f92(), g27(), 0);
  EXPECT_EQ(dual_level_count(c0, 0), 33u);
  EXPECT_EQ(dual_level_closed(c0, 0).value, mpz_class(33));
}

TEST(DualLevel, RejectsNonWeaklyRegular) {
  auto F = make_field(2);
  std::vector<Trit> t(9, 0);
  t[1] = 1;
  const SpectrumProfile bad = analyze(TernaryFunction::from_table(F, t));
  EXPECT_THROW(make_pair_context(bad, bent9(), 1), std::invalid_argument);
}

TEST(ScaledDualLevel, BentOverEightyOne) {
  // m + k even, mu = 0: 2*3^(m-k-1) - 2(-1)^(m+1) eps (-3)^((m-k-2)/2) = 54 + 6.
  const auto closed = scaled_dual_level_closed(bent81(), 1, 0);
  ASSERT_TRUE(closed.value.has_value());
  EXPECT_EQ(*closed.value, 60);
  EXPECT_EQ(scaled_dual_level_count(bent81(), 1, 0), 60u);
  EXPECT_FALSE(scaled_dual_level_closed(bent81(), 0, 0).value.has_value());
}

TEST(ScaledDualLevel, AllShifts) {
  for (const auto& spec : lemma_function_specs()) {
    const SpectrumProfile g = profile(spec);
    for (Trit lambda = 1; lambda < 3; ++lambda)
      for (Trit mu = 0; mu < 3; ++mu) {
        const auto closed = scaled_dual_level_closed(g, lambda, mu);
        if (!closed.value) continue;
        EXPECT_EQ(*closed.value, scaled_dual_level_count(g, lambda, mu)) << spec;
      }
  }
}

TEST(S1, ExampleOneContext) {
  for (Trit lambda = 1; lambda < 3; ++lambda) {
    const PairContext c = make_pair_context(f92(), g27(), lambda);
    EXPECT_EQ(s1_oracle(c), EisensteinInt(-243));
    EXPECT_EQ(s1_closed(c).value, EisensteinInt(-243));
  }
}

TEST(S2, Values) {
  auto F1 = make_field(1);
  auto F2 = make_field(2);
  EXPECT_EQ(s2_closed(3, false, 0), EisensteinInt(0));
  EXPECT_EQ(s2_closed(3, true, 0), EisensteinInt(54));
  EXPECT_EQ(s2_closed(2, true, 1), EisensteinInt(-9));
  EXPECT_EQ(s2_oracle(*F1, *F1, 0, 0, 1), EisensteinInt(-9));
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t b = 0; b < 9; ++b)
      for (Trit mu = 0; mu < 3; ++mu) EXPECT_EQ(s2_oracle(*F1, *F2, a, b, mu), s2_closed(3, a == 0 && b == 0, mu));
}

TEST(S3, OffSupportAndEvenCase) {
  const PairContext c = make_pair_context(f92(), g27(), 1, 0);
  std::uint32_t off = 0;
  while (f92().in_support[off]) ++off;
  EXPECT_EQ(s3_closed(c, off, 0).value, EisensteinInt(0));
  EXPECT_EQ(s3_oracle(c, off, 0), EisensteinInt(0));

  // Bent pair over GF(9) x GF(9): s + k even; at a point of dual level 0 with
  // mu = 0 the value is 4 eps (-3)^(s/2).
  const PairContext b = make_pair_context(bent9(), bent9(), 1, 0);
  const EisensteinInt expected = EisensteinInt(4 * b.eps()) * sqrt_neg3_power(4);
  int seen = 0;
  for (std::uint32_t a = 0; a < 9; ++a)
    for (std::uint32_t bb = 0; bb < 9; ++bb) {
      const EisensteinInt oracle = s3_oracle(b, a, bb);
      EXPECT_EQ(s3_closed(b, a, bb).value, oracle);
      if (add3(add3(bent9().dual_table[a], bent9().dual_table[bb]), 1) == 0) {
        EXPECT_EQ(oracle, expected);
        ++seen;
      }
    }
  EXPECT_GT(seen, 0);
}

TEST(S4S5, OutsidePrimeFieldVanish) {
  auto F = make_field(2);
  const TraceContext c = make_trace_sum_context(F, bent9(), 1, 0);
  const std::uint32_t alpha = F->generator_root().index();  // not in GF(3)
  for (std::uint32_t b = 0; b < 9; ++b) {
    EXPECT_EQ(s4_closed(c, alpha, b).value, EisensteinInt(0));
    EXPECT_EQ(s4_oracle(c, alpha, b), EisensteinInt(0));
    EXPECT_EQ(s5_oracle(c, alpha, b), EisensteinInt(0));
  }
}

TEST(S4S5, SmallContextAgainstOracle) {
  for (Trit lambda = 1; lambda < 3; ++lambda)
    for (Trit mu = 0; mu < 3; ++mu) {
      const TraceContext c = make_trace_sum_context(make_field(1), bent9(), lambda, mu);
      for (std::uint32_t a = 0; a < 3; ++a)
        for (std::uint32_t b = 0; b < 9; ++b) {
          if (a == 0 && b == 0) continue;
          EXPECT_EQ(s4_closed(c, a, b).value, s4_oracle(c, a, b));
          EXPECT_EQ(s5_closed(c, a, b).value, s5_oracle(c, a, b));
        }
    }
}

TEST(S5, LevelZeroValue) {
  // g*(b/a) + lambda - mu/a = 0 gives 2 3^n eps (-3)^((m+k)/2).
  const TraceContext c = make_trace_sum_context(make_field(1), bent81(), 1, 0);
  const EisensteinInt expected = EisensteinInt(2 * 3 * bent81().epsilon) * sqrt_neg3_power(4);
  int seen = 0;
  for (std::uint32_t b = 0; b < 81; ++b) {
    if (add3(bent81().dual_table[b], 1) != 0) continue;
    EXPECT_EQ(s5_oracle(c, 1, b), expected);
    EXPECT_EQ(s5_closed(c, 1, b).value, expected);
    ++seen;
  }
  EXPECT_GT(seen, 0);
}

TEST(S5, PrintedTableDiffersOnlyAtLevelTwo) {
  for (const auto& spec : lemma_function_specs()) {
    const SpectrumProfile g = profile(spec);
    if (!g.in_wrp) continue;
    for (Trit lambda = 1; lambda < 3; ++lambda)
      for (Trit mu = 0; mu < 3; ++mu) {
        const TraceContext c = make_trace_sum_context(make_field(1), g, lambda, mu);
        for (std::uint32_t a = 1; a < 3; ++a)
          for (std::uint32_t b : g.support) {
            const auto exact = s5_closed(c, a, b);
            const auto printed = s5_closed_as_printed(c, a, b);
            if (!exact.value || !printed.value) continue;
            const Trit ainv = static_cast<Trit>(a);
            const std::uint32_t scaled = (g.field->embed(ainv) * g.field->element(b)).index();
            const Trit level = sub3(add3(g.dual_table[scaled], lambda), mul3(mu, ainv));
            EXPECT_EQ(*exact.value == *printed.value, level != 2) << spec;
          }
      }
  }
}

TEST(Ng0, GenericAndLevelZero) {
  auto F = make_field(2);
  const TraceContext c = make_trace_sum_context(F, bent9(), 1, 0);
  const std::uint32_t alpha = F->generator_root().index();
  EXPECT_EQ(ng0_count(c, alpha, 0), 9u);  // 3^(s-2)
  EXPECT_EQ(ng0_closed(c, alpha, 0).value, mpz_class(9));
  int compared = 0;
  for (Trit lambda = 1; lambda < 3; ++lambda)
    for (Trit mu = 0; mu < 3; ++mu) {
      const TraceContext t = make_trace_sum_context(make_field(2), bent9(), lambda, mu);
      for (std::uint32_t a = 0; a < 9; ++a)
        for (std::uint32_t b = 0; b < 9; ++b) {
          if (a == 0 && b == 0) continue;
          const auto closed = ng0_closed(t, a, b);
          ASSERT_TRUE(closed.value.has_value()) << closed.unmet;
          EXPECT_EQ(*closed.value, ng0_count(t, a, b));
          ++compared;
        }
    }
  EXPECT_EQ(compared, 6 * 80);
}

TEST(Sweep, SmallContextsHaveNoMismatches) {
  for (int lemma = 2; lemma <= 10; ++lemma) {
    const LemmaSweep s = sweep_lemma(lemma, &bent9(), bent9(), 2, 2);
    EXPECT_GT(s.compared, 0u) << lemma;
    EXPECT_EQ(s.mismatches, 0u) << lemma;
  }
  EXPECT_THROW(sweep_lemma(11, &bent9(), bent9(), 1), std::invalid_argument);
  EXPECT_THROW(sweep_lemma(3, nullptr, bent9(), 1), std::invalid_argument);
}

TEST(Sweep, DeterministicAcrossJobs) {
  const LemmaSweep a = sweep_lemma(7, &bent9(), g27(), 1, 1);
  const LemmaSweep b = sweep_lemma(7, &bent9(), g27(), 1, 4);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].inputs, b.rows[i].inputs);
    EXPECT_EQ(a.rows[i].oracle, b.rows[i].oracle);
  }
}

}  // namespace
}  // namespace tercodes
