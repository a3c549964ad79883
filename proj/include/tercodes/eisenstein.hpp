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

#ifndef TERCODES_EISENSTEIN_HPP_
#define TERCODES_EISENSTEIN_HPP_

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>

#include "tercodes/field.hpp"

namespace tercodes {

/// Exact element a + b*zeta of Z[zeta], zeta a primitive cube root of unity
/// (zeta^2 = -1 - zeta).
class EisensteinInt {
 public:
  EisensteinInt() = default;
  EisensteinInt(long a) : a_(a) {}  // NOLINT: integers embed implicitly
  EisensteinInt(mpz_class a, mpz_class b = 0) : a_(std::move(a)), b_(std::move(b)) {}

  const mpz_class& real_part() const { return a_; }
  const mpz_class& zeta_part() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  /// True when the value lies in Z (zeta coordinate zero).
  bool is_rational() const { return b_ == 0; }

  /// a^2 - ab + b^2, the squared complex modulus.
  mpz_class norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }
  /// Complex conjugate: zeta -> zeta^2.
  EisensteinInt conj() const { return EisensteinInt(a_ - b_, -b_); }
  /// Galois action zeta -> zeta^t for t in {1, 2}.
  EisensteinInt galois(Trit t) const { return t == 2 ? conj() : *this; }
  EisensteinInt pow(unsigned e) const;

  /// Exact quotient when divisible in Z[zeta], otherwise nullopt.
  std::optional<EisensteinInt> divide(const EisensteinInt& d) const;

  EisensteinInt& operator+=(const EisensteinInt& o);
  EisensteinInt& operator-=(const EisensteinInt& o);
  EisensteinInt& operator*=(const EisensteinInt& o);

  friend EisensteinInt operator+(EisensteinInt x, const EisensteinInt& y) { return x += y; }
  friend EisensteinInt operator-(EisensteinInt x, const EisensteinInt& y) { return x -= y; }
  friend EisensteinInt operator*(EisensteinInt x, const EisensteinInt& y) { return x *= y; }
  friend EisensteinInt operator-(const EisensteinInt& x) { return EisensteinInt(-x.a_, -x.b_); }
  friend bool operator==(const EisensteinInt& x, const EisensteinInt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  std::string to_string() const;

 private:
  mpz_class a_ = 0;
  mpz_class b_ = 0;
};

std::ostream& operator<<(std::ostream& os, const EisensteinInt& v);

/// zeta^c for c in GF(3).
EisensteinInt zeta_power(Trit c);

/// 1 + 2 zeta, a square root of -3.
const EisensteinInt& sqrt_neg3();

/// (sqrt(-3))^e; for even e this is the integer (-3)^(e/2).
EisensteinInt sqrt_neg3_power(unsigned e);

/// Quadratic character of GF(3)*: +1 on 1, -1 on 2. Throws on 0.
int quadratic_character(Trit t);

/// Accumulates sum of zeta^e as three bin counts; exact and cheap.
struct ZetaCounter {
  long long bins[3] = {0, 0, 0};
  void add(Trit e, long long times = 1) { bins[e] += times; }
  EisensteinInt value() const {
    // bins0 + bins1 zeta + bins2 (-1 - zeta)
    return EisensteinInt(mpz_class(static_cast<long>(bins[0] - bins[2])), mpz_class(static_cast<long>(bins[1] - bins[2])));
  }
};

}  // namespace tercodes

#endif  // TERCODES_EISENSTEIN_HPP_
