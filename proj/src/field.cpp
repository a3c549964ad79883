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

#include <cassert>
#include <sstream>

namespace tercodes {

std::uint64_t pow3(int e) {
  if (e < 0) throw std::domain_error("pow3: negative exponent");
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= 3;
  return r;
}

namespace {

using Poly = std::vector<Trit>;  // constant term first, no trailing zeros

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a modulo a monic b.
Poly poly_mod(Poly a, const Poly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const Trit lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = sub3(a[shift + i], mul3(lead, b[i]));
    }
    trim(a);
  }
  return a;
}

// Enumerates monic polynomials of degree d as digit vectors of a counter.
Poly monic_from_counter(std::uint64_t counter, int d) {
  Poly p(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 0; i < d; ++i) {
    p[static_cast<std::size_t>(i)] = static_cast<Trit>(counter % 3);
    counter /= 3;
  }
  p[static_cast<std::size_t>(d)] = 1;
  return p;
}

std::string poly_to_string(const Poly& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << int(p[i]);
    } else {
      if (p[i] != 1) os << int(p[i]);
      os << 'x';
      if (i > 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

// Throws ReducibleModulus when the monic polynomial m has a factor of
// degree <= deg(m)/2. Exhaustive trial division; fine for degree <= 12.
void check_irreducible(const Poly& m) {
  const int n = static_cast<int>(m.size()) - 1;
  for (int d = 1; d <= n / 2; ++d) {
    const std::uint64_t count = pow3(d);
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly cand = monic_from_counter(c, d);
      if (poly_mod(m, cand).empty()) {
        std::ostringstream os;
        os << "modulus " << poly_to_string(m) << " is reducible: ";
        if (d == 1) {
          os << "witness root " << int(neg3(cand[0]));
        } else {
          os << "witness factor " << poly_to_string(cand);
        }
        throw ReducibleModulus(os.str(), std::move(cand));
      }
    }
  }
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      out.push_back(p);
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace

std::vector<Trit> default_modulus(int n) {
  switch (n) {
    case 1: return {0, 1};
    case 2: return {2, 2, 1};
    case 3: return {1, 2, 0, 1};
    case 4: return {2, 0, 0, 2, 1};
    case 5: return {1, 2, 0, 0, 0, 1};
    case 6: return {2, 2, 1, 0, 2, 0, 1};
    case 7: return {1, 0, 2, 0, 0, 0, 0, 1};
    case 8: return {2, 2, 2, 0, 1, 2, 0, 0, 1};
    case 9: return {1, 1, 2, 2, 0, 0, 0, 0, 0, 1};
    case 10: return {2, 1, 0, 0, 2, 2, 2, 0, 0, 0, 1};
    case 11: return {1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 1};
    case 12: return {2, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 1};
    default: throw std::invalid_argument("no default modulus for degree " + std::to_string(n));
  }
}

std::shared_ptr<const Field> make_field(int n, std::optional<std::vector<Trit>> modulus) {
  if (n < 1 || n > kMaxDegree) {
    throw std::invalid_argument("extension degree must be in 1..12, got " + std::to_string(n));
  }
  std::vector<Trit> m = modulus ? *modulus : default_modulus(n);
  for (Trit c : m) {
    if (c > 2) throw std::invalid_argument("modulus coefficients must be in {0,1,2}");
  }
  if (m.size() != static_cast<std::size_t>(n) + 1) {
    throw std::invalid_argument("modulus must have degree exactly " + std::to_string(n));
  }
  if (m.back() != 1) throw std::invalid_argument("modulus must be monic");
  check_irreducible(m);
  return std::shared_ptr<const Field>(new Field(FieldParams{n, std::move(m)}));
}

Field::Field(FieldParams params) : params_(std::move(params)), size_(pow3(params_.n)) {
  order_prime_factors_ = prime_factors(size_ - 1);
  // Trace is linear, so it is enough to know it on the polynomial basis.
  for (int i = 0; i < params_.n; ++i) {
    FieldElement b(this);
    b.c_[static_cast<std::size_t>(i)] = 1;
    FieldElement acc = b;
    FieldElement frob = b;
    for (int j = 1; j < params_.n; ++j) {
      frob = frob.pow(3);
      acc = acc + frob;
    }
    for (int j = 1; j < params_.n; ++j) assert(acc.coeff(j) == 0);
    basis_trace_[static_cast<std::size_t>(i)] = acc.coeff(0);
  }
  for (std::uint32_t idx = 1; idx < size_; ++idx) {
    FieldElement cand = element(idx);
    if (order(cand) == size_ - 1) {
      primitive_ = cand;
      break;
    }
  }
}

FieldElement Field::zero() const { return FieldElement(this); }

FieldElement Field::one() const { return embed(1); }

FieldElement Field::embed(Trit c) const {
  FieldElement e(this);
  e.c_[0] = static_cast<Trit>(c % 3);
  return e;
}

FieldElement Field::generator_root() const {
  if (params_.n == 1) return embed(neg3(params_.modulus[0]));
  FieldElement e(this);
  e.c_[1] = 1;
  return e;
}

FieldElement Field::from_coeffs(std::span<const Trit> coeffs) const {
  if (coeffs.size() > static_cast<std::size_t>(params_.n)) {
    throw std::invalid_argument("too many coefficients for GF(3^" + std::to_string(params_.n) + ")");
  }
  FieldElement e(this);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] > 2) throw std::invalid_argument("coefficient out of range");
    e.c_[i] = coeffs[i];
  }
  return e;
}

FieldElement Field::element(std::uint32_t index) const {
  FieldElement e(this);
  for (int i = params_.n - 1; i >= 0; --i) {
    e.c_[static_cast<std::size_t>(i)] = static_cast<Trit>(index % 3);
    index /= 3;
  }
  return e;
}

std::vector<FieldElement> Field::enumerate_elements() const {
  std::vector<FieldElement> out;
  out.reserve(size_);
  for (std::uint32_t i = 0; i < size_; ++i) out.push_back(element(i));
  return out;
}

Trit Field::trace(const FieldElement& a) const {
  int acc = 0;
  for (int i = 0; i < params_.n; ++i) acc += a.c_[static_cast<std::size_t>(i)] * basis_trace_[static_cast<std::size_t>(i)];
  return static_cast<Trit>(acc % 3);
}

std::uint64_t Field::order(const FieldElement& a) const {
  if (a.is_zero()) throw std::domain_error("order of zero is undefined");
  std::uint64_t ord = size_ - 1;
  for (std::uint64_t p : order_prime_factors_) {
    while (ord % p == 0 && a.pow(ord / p) == one()) ord /= p;
  }
  return ord;
}

std::optional<std::uint64_t> Field::discrete_log(const FieldElement& a) const {
  if (a.is_zero()) return std::nullopt;
  FieldElement cur = one();
  for (std::uint64_t k = 0; k + 1 < size_; ++k) {
    if (cur == a) return k;
    cur = cur * primitive_;
  }
  throw std::logic_error("discrete_log: element not reached");
}

std::string Field::to_string() const {
  std::ostringstream os;
  os << "GF(3^" << params_.n << ")/" << poly_to_string(params_.modulus);
  return os.str();
}

void Field::reduce(std::array<int, 2 * kMaxDegree>& prod, FieldElement& out) const {
  const int n = params_.n;
  const auto& m = params_.modulus;
  for (int d = 2 * n - 2; d >= n; --d) {
    const int lead = prod[static_cast<std::size_t>(d)] % 3;
    if (lead == 0) continue;
    prod[static_cast<std::size_t>(d)] = 0;
    // x^d = -(m_0 + ... + m_{n-1} x^{n-1}) x^{d-n}
    for (int i = 0; i < n; ++i) {
      prod[static_cast<std::size_t>(d - n + i)] += (3 - lead) * m[static_cast<std::size_t>(i)];
    }
  }
  for (int i = 0; i < n; ++i) out.c_[static_cast<std::size_t>(i)] = static_cast<Trit>(prod[static_cast<std::size_t>(i)] % 3);
}

int FieldElement::degree() const { return field_->params_.n; }

std::span<const Trit> FieldElement::coeffs() const {
  return std::span<const Trit>(c_.data(), static_cast<std::size_t>(degree()));
}

bool FieldElement::is_zero() const {
  for (Trit c : c_) {
    if (c != 0) return false;
  }
  return true;
}

std::uint32_t FieldElement::index() const {
  std::uint32_t idx = 0;
  for (int i = 0; i < degree(); ++i) idx = idx * 3 + c_[static_cast<std::size_t>(i)];
  return idx;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  assert(a.field_ == b.field_);
  FieldElement r(a.field_);
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = add3(a.c_[i], b.c_[i]);
  return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  assert(a.field_ == b.field_);
  FieldElement r(a.field_);
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = sub3(a.c_[i], b.c_[i]);
  return r;
}

FieldElement operator-(const FieldElement& a) {
  FieldElement r(a.field_);
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = neg3(a.c_[i]);
  return r;
}

FieldElement operator*(Trit c, const FieldElement& a) {
  FieldElement r(a.field_);
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = mul3(c, a.c_[i]);
  return r;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  assert(a.field_ == b.field_);
  const int n = a.degree();
  std::array<int, 2 * kMaxDegree> prod{};
  for (int i = 0; i < n; ++i) {
    const int ai = a.c_[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    for (int j = 0; j < n; ++j) prod[static_cast<std::size_t>(i + j)] += ai * b.c_[static_cast<std::size_t>(j)];
  }
  FieldElement r(a.field_);
  a.field_->reduce(prod, r);
  return r;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.c_ == b.c_;
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement result = field_->one();
  FieldElement base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return pow(field_->size() - 2);
}

std::string to_string(const FieldElement& a) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < a.degree(); ++i) {
    if (i) os << ',';
    os << int(a.coeff(i));
  }
  os << ']';
  return os.str();
}

std::string to_power_string(const FieldElement& a) {
  auto k = a.field().discrete_log(a);
  if (!k) return "0";
  return "g^" + std::to_string(*k);
}

}  // namespace tercodes
