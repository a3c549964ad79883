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


#include "tercodes/field.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

namespace tercodes {
namespace {

// Schoolbook reference: product of coefficient vectors reduced by a monic
// modulus, no tables.
std::vector<int> ref_mul(const std::vector<int>& a, const std::vector<int>& b, const std::vector<Trit>& mod) {
  const std::size_t n = mod.size() - 1;
  std::vector<int> p(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p[i + j] = (p[i + j] + a[i] * b[j]) % 3;
  for (std::size_t d = 2 * n - 1; d >= n; --d) {
    const int c = p[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= n; ++i) p[d - n + i] = ((p[d - n + i] - c * mod[i]) % 3 + 3) % 3;
  }
  p.resize(n);
  return p;
}

std::vector<int> coeffs_of(const FieldElement& a) {
  std::vector<int> v;
  for (int i = 0; i < a.degree(); ++i) v.push_back(a.coeff(i));
  return v;
}

FieldElement random_element(const Field& f, std::mt19937_64& rng) {
  return f.element(static_cast<std::uint32_t>(rng() % f.size()));
}

TEST(Field, ExampleModulusReducesCube) {
  auto f = make_field(3, std::vector<Trit>{1, 2, 0, 1});
  const FieldElement w = f->generator_root();
  const FieldElement w3 = w * (w * w);
  EXPECT_EQ(w3, w + f->embed(2));
  EXPECT_EQ(default_modulus(3), (std::vector<Trit>{1, 2, 0, 1}));
}

TEST(Field, PrimeFieldIsDegenerate) {
  auto f = make_field(1);
  EXPECT_EQ(f->size(), 3u);
  EXPECT_EQ(f->zero().coeffs().size(), 1u);
  EXPECT_EQ(to_string(f->primitive_element()), "[2]");
  for (Trit c = 0; c < 3; ++c) EXPECT_EQ(f->trace(f->embed(c)), c);
}

TEST(Field, ReducibleModulusReportsRoot) {
  try {
    make_field(3, std::vector<Trit>{0, 0, 0, 1});
    FAIL() << "x^3 accepted";
  } catch (const ReducibleModulus& e) {
    EXPECT_EQ(e.witness(), (std::vector<Trit>{0, 1}));
  }
  // x^4 + 1 = (x^2 + x + 2)(x^2 + 2x + 2) has no root but still factors.
  EXPECT_THROW(make_field(4, std::vector<Trit>{1, 0, 0, 0, 1}), ReducibleModulus);
}

TEST(Field, RejectsBadShape) {
  EXPECT_THROW(make_field(0), std::invalid_argument);
  EXPECT_THROW(make_field(13), std::invalid_argument);
  EXPECT_THROW(make_field(3, std::vector<Trit>{1, 2, 1}), std::invalid_argument);
  EXPECT_THROW(make_field(3, std::vector<Trit>{1, 2, 0, 2}), std::invalid_argument);
}

TEST(Field, DefaultModuliAreIrreducible) {
  for (int n = 1; n <= kMaxDegree; ++n) EXPECT_NO_THROW(make_field(n)) << n;
}

TEST(Field, TraceOfRootInExampleField) {
  auto f = make_field(3);
  const FieldElement w = f->generator_root();
  // w + w^3 + w^9 by repeated multiplication, independent of Field::trace.
  FieldElement acc = f->zero();
  FieldElement p = w;
  for (int i = 0; i < 3; ++i) {
    acc = acc + p;
    p = p * p * p;
  }
  EXPECT_EQ(acc.coeff(1), 0);
  EXPECT_EQ(acc.coeff(2), 0);
  EXPECT_EQ(f->trace(w), acc.coeff(0));
  EXPECT_EQ(f->trace(w), 0);
}

TEST(Field, PrimitiveElementOrders) {
  auto f27 = make_field(3);
  const FieldElement xi = f27->primitive_element();
  EXPECT_FALSE(xi.pow(13) == f27->one());
  EXPECT_EQ(xi.pow(26), f27->one());
  for (int n = 1; n <= 6; ++n) {
    auto f = make_field(n);
    const FieldElement g = f->primitive_element();
    std::set<std::uint32_t> seen;
    FieldElement p = f->one();
    for (std::uint64_t i = 0; i + 1 < f->size(); ++i) {
      seen.insert(p.index());
      p = p * g;
    }
    EXPECT_EQ(seen.size(), f->size() - 1) << n;
    // Nothing earlier in enumeration order has full order.
    for (std::uint32_t i = 1; i < g.index(); ++i) EXPECT_LT(f->order(f->element(i)), f->size() - 1);
  }
}

TEST(Field, EnumerationOrder) {
  auto f3 = make_field(1);
  const auto e3 = f3->enumerate_elements();
  ASSERT_EQ(e3.size(), 3u);
  for (Trit c = 0; c < 3; ++c) EXPECT_EQ(e3[c], f3->embed(c));
  for (int n = 1; n <= 5; ++n) {
    auto f = make_field(n);
    const auto all = f->enumerate_elements();
    ASSERT_EQ(all.size(), f->size());
    EXPECT_TRUE(all.front().is_zero());
    std::set<std::vector<int>> distinct;
    for (std::size_t i = 0; i < all.size(); ++i) {
      EXPECT_EQ(all[i].index(), i);
      distinct.insert(coeffs_of(all[i]));
    }
    EXPECT_EQ(distinct.size(), all.size());
    if (n >= 2) EXPECT_EQ(all[1].coeff(n - 1), 1);  // index 0 coefficient most significant
  }
}

TEST(Field, InverseOfZeroThrows) {
  auto f = make_field(2);
  EXPECT_THROW(f->zero().inverse(), std::domain_error);
}

TEST(Field, DiscreteLogRoundTrip) {
  auto f = make_field(4);
  EXPECT_FALSE(f->discrete_log(f->zero()).has_value());
  for (std::uint64_t k = 0; k < 80; ++k) EXPECT_EQ(f->discrete_log(f->primitive_element().pow(k)), k);
}

class FieldProperties : public ::testing::TestWithParam<int> {};

TEST_P(FieldProperties, AxiomsAgainstReference) {
  const int n = GetParam();
  auto f = make_field(n);
  std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(n));
  for (int t = 0; t < 1000; ++t) {
    const FieldElement a = random_element(*f, rng);
    const FieldElement b = random_element(*f, rng);
    const FieldElement c = random_element(*f, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, f->zero());
    EXPECT_EQ(a + (-a), f->zero());
    EXPECT_EQ(coeffs_of(a * b), ref_mul(coeffs_of(a), coeffs_of(b), f->params().modulus));
    if (!a.is_zero()) {
      EXPECT_EQ(a.inverse() * a, f->one());
      EXPECT_EQ(a.pow(f->size() - 1), f->one());
    }
  }
}

TEST_P(FieldProperties, TraceIsLinearAndBalanced) {
  const int n = GetParam();
  auto f = make_field(n);
  std::uint64_t hits[3] = {0, 0, 0};
  for (const auto& a : f->enumerate_elements()) {
    // Tr(a) = a + a^3 + ... computed by powering.
    FieldElement acc = f->zero();
    FieldElement p = a;
    for (int i = 0; i < n; ++i) {
      acc = acc + p;
      p = p.pow(3);
    }
    for (int i = 1; i < n; ++i) ASSERT_EQ(acc.coeff(i), 0);
    ASSERT_EQ(f->trace(a), acc.coeff(0));
    ++hits[f->trace(a)];
  }
  for (auto h : hits) EXPECT_EQ(h, pow3(n - 1));
  std::mt19937_64 rng(7u + static_cast<unsigned>(n));
  for (int t = 0; t < 500; ++t) {
    const FieldElement a = random_element(*f, rng);
    const FieldElement b = random_element(*f, rng);
    const Trit c = static_cast<Trit>(rng() % 3);
    EXPECT_EQ(f->trace(a + b), add3(f->trace(a), f->trace(b)));
    EXPECT_EQ(f->trace(c * a), mul3(c, f->trace(a)));
  }
}

TEST_P(FieldProperties, FrobeniusFixesPrimeFieldOnly) {
  auto f = make_field(GetParam());
  for (const auto& a : f->enumerate_elements()) {
    const bool in_prime = std::all_of(a.coeffs().begin() + 1, a.coeffs().end(), [](Trit c) { return c == 0; });
    EXPECT_EQ(a.pow(3) == a, in_prime);
  }
}

INSTANTIATE_TEST_SUITE_P(Degrees, FieldProperties, ::testing::Range(1, 7));

}  // namespace
}  // namespace tercodes
