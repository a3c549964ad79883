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

#include "tercodes/eisenstein.hpp"

#include <sstream>
#include <stdexcept>

namespace tercodes {

EisensteinInt& EisensteinInt::operator+=(const EisensteinInt& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

EisensteinInt& EisensteinInt::operator-=(const EisensteinInt& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

EisensteinInt& EisensteinInt::operator*=(const EisensteinInt& o) {
  // (a + b z)(c + d z) = ac + (ad + bc) z + bd z^2,  z^2 = -1 - z
  mpz_class bd = b_ * o.b_;
  mpz_class na = a_ * o.a_ - bd;
  mpz_class nb = a_ * o.b_ + b_ * o.a_ - bd;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

EisensteinInt EisensteinInt::pow(unsigned e) const {
  EisensteinInt result(1);
  EisensteinInt base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

std::optional<EisensteinInt> EisensteinInt::divide(const EisensteinInt& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero in Z[zeta]");
  const mpz_class n = d.norm();
  EisensteinInt num = *this * d.conj();
  if (!mpz_divisible_p(num.a_.get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(num.b_.get_mpz_t(), n.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class qa = num.a_ / n;
  mpz_class qb = num.b_ / n;
  return EisensteinInt(std::move(qa), std::move(qb));
}

std::string EisensteinInt::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const EisensteinInt& v) {
  if (v.zeta_part() == 0) return os << v.real_part();
  os << v.real_part();
  if (v.zeta_part() >= 0) os << '+';
  return os << v.zeta_part() << "z";
}

EisensteinInt zeta_power(Trit c) {
  switch (c % 3) {
    case 0: return EisensteinInt(1, 0);
    case 1: return EisensteinInt(0, 1);
    default: return EisensteinInt(-1, -1);
  }
}

const EisensteinInt& sqrt_neg3() {
  static const EisensteinInt kValue = [] {
    EisensteinInt r(1, 2);
    if (!(r * r == EisensteinInt(-3))) throw std::logic_error("1+2z does not square to -3");
    return r;
  }();
  return kValue;
}

EisensteinInt sqrt_neg3_power(unsigned e) { return sqrt_neg3().pow(e); }

int quadratic_character(Trit t) {
  switch (t) {
    case 1: return 1;
    case 2: return -1;
    default: throw std::domain_error("quadratic character of 0 is undefined");
  }
}

}  // namespace tercodes
