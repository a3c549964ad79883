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

#ifndef TERCODES_FIELD_HPP_
#define TERCODES_FIELD_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tercodes {

/// A GF(3) value stored as 0, 1 or 2.
using Trit = std::uint8_t;

constexpr Trit add3(Trit a, Trit b) { return static_cast<Trit>((a + b) % 3); }
constexpr Trit sub3(Trit a, Trit b) { return static_cast<Trit>((a + 3 - b) % 3); }
constexpr Trit mul3(Trit a, Trit b) { return static_cast<Trit>((a * b) % 3); }
constexpr Trit neg3(Trit a) { return static_cast<Trit>((3 - a) % 3); }
/// Inverse in GF(3)*; 1 and 2 are self-inverse.
constexpr Trit inv3(Trit a) { return a; }
constexpr Trit to_trit(long long v) { return static_cast<Trit>(((v % 3) + 3) % 3); }

inline constexpr int kMaxDegree = 12;

std::uint64_t pow3(int e);

/// Extension degree plus a monic modulus, constant term first.
struct FieldParams {
  int n = 1;
  std::vector<Trit> modulus;
};

/// Thrown when a modulus has a nontrivial factor; `witness` is that factor
/// (monic, constant term first). A degree-1 witness x - r encodes the root r.
class ReducibleModulus : public std::invalid_argument {
 public:
  ReducibleModulus(const std::string& what, std::vector<Trit> witness)
      : std::invalid_argument(what), witness_(std::move(witness)) {}
  const std::vector<Trit>& witness() const { return witness_; }

 private:
  std::vector<Trit> witness_;
};

class Field;

/// Element of GF(3^n) in the polynomial basis {1, x, ..., x^{n-1}}.
///
/// Elements keep a non-owning pointer to their field; the field must outlive
/// them. Fields are always handed out through shared_ptr so higher level
/// objects pin them.
class FieldElement {
 public:
  FieldElement() = default;

  const Field& field() const { return *field_; }
  int degree() const;
  Trit coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  std::span<const Trit> coeffs() const;
  bool is_zero() const;
  /// Position in the lexicographic enumeration (coefficient 0 most significant).
  std::uint32_t index() const;

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(Trit c, const FieldElement& a);
  friend FieldElement operator-(const FieldElement& a);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  friend class Field;
  FieldElement(const Field* f) : field_(f) {}

  const Field* field_ = nullptr;
  std::array<Trit, kMaxDegree> c_{};
};

/// GF(3^n) for 1 <= n <= 12. Immutable after construction.
class Field {
 public:
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  const FieldParams& params() const { return params_; }
  int degree() const { return params_.n; }
  std::uint64_t size() const { return size_; }

  FieldElement zero() const;
  FieldElement one() const;
  /// The residue class of x, i.e. a root of the modulus.
  FieldElement generator_root() const;
  FieldElement embed(Trit c) const;
  FieldElement from_coeffs(std::span<const Trit> coeffs) const;
  FieldElement element(std::uint32_t index) const;

  /// First element in enumeration order whose multiplicative order is 3^n - 1.
  const FieldElement& primitive_element() const { return primitive_; }
  /// All 3^n elements in enumeration order, zero first.
  std::vector<FieldElement> enumerate_elements() const;

  /// Absolute trace to GF(3).
  Trit trace(const FieldElement& a) const;

  /// Smallest k with primitive_element()^k == a; nullopt for zero.
  std::optional<std::uint64_t> discrete_log(const FieldElement& a) const;

  /// Multiplicative order of a nonzero element.
  std::uint64_t order(const FieldElement& a) const;

  std::string to_string() const;

 private:
  friend std::shared_ptr<const Field> make_field(int, std::optional<std::vector<Trit>>);
  friend class FieldElement;
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  explicit Field(FieldParams params);

  void reduce(std::array<int, 2 * kMaxDegree>& prod, FieldElement& out) const;

  FieldParams params_;
  std::uint64_t size_;
  std::vector<std::uint64_t> order_prime_factors_;
  std::array<Trit, kMaxDegree> basis_trace_{};
  FieldElement primitive_;
};

/// Validated field construction. Without a modulus the built-in default for
/// that degree is used (x^3+2x+1 for n = 3).
/// Throws std::invalid_argument for bad degree or shape, ReducibleModulus
/// when the modulus factors.
std::shared_ptr<const Field> make_field(int n, std::optional<std::vector<Trit>> modulus = std::nullopt);

/// Built-in default modulus for degree n.
std::vector<Trit> default_modulus(int n);

/// Renders as [c0,c1,...,c_{n-1}].
std::string to_string(const FieldElement& a);
/// Renders as g^k relative to the primitive element, or "0".
std::string to_power_string(const FieldElement& a);

}  // namespace tercodes

#endif  // TERCODES_FIELD_HPP_
