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

#ifndef TERCODES_CODES_HPP_
#define TERCODES_CODES_HPP_

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tercodes/field.hpp"

namespace tercodes {

/// Dense row-major matrix over GF(3).
class Gf3Matrix {
 public:
  Gf3Matrix() = default;
  Gf3Matrix(std::size_t rows, std::size_t cols);
  static Gf3Matrix from_rows(const std::vector<std::vector<Trit>>& rows);
  static Gf3Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Trit at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Trit v);
  std::vector<Trit> row(std::size_t r) const;
  std::vector<Trit> column(std::size_t c) const;

  /// M * M^T.
  Gf3Matrix gram() const;
  /// [A | B]; row counts must agree.
  static Gf3Matrix hconcat(const Gf3Matrix& a, const Gf3Matrix& b);
  /// Keeps the listed columns in the given order.
  Gf3Matrix select_columns(const std::vector<std::size_t>& cols) const;
  bool is_zero() const;

  friend bool operator==(const Gf3Matrix&, const Gf3Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Trit> data_;
};

/// Matrix file: "rows cols" then one digit string per row.
void write_matrix(std::ostream& out, const Gf3Matrix& m);
/// Throws std::invalid_argument on malformed input.
Gf3Matrix read_matrix(std::istream& in);

struct RrefResult {
  std::size_t rank = 0;
  Gf3Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination; the pivot of each column is its first nonzero
/// entry at or below the current row.
RrefResult rank_and_rref(const Gf3Matrix& m);

/// Raised when a requested enumeration exceeds the configured limit.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxEnumerationDimension = 20;

/// Weight -> number of codewords of that weight, A_0 included.
struct WeightDistribution {
  std::map<std::size_t, std::uint64_t> counts;

  std::uint64_t total() const;
  /// Smallest nonzero weight, if any nonzero codeword exists.
  std::optional<std::size_t> min_nonzero() const;
  /// "1+24x^324+..." with the zero term first.
  std::string enumerator() const;

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

class LinearCode {
 public:
  explicit LinearCode(Gf3Matrix generator);

  const Gf3Matrix& generator() const { return gen_; }
  /// Rows of the reduced echelon form spanning the code (full rank).
  const Gf3Matrix& basis() const { return basis_; }
  std::size_t length() const { return gen_.cols(); }
  std::size_t dimension() const { return basis_.rows(); }

 private:
  Gf3Matrix gen_;
  Gf3Matrix basis_;
};

/// Enumerates all 3^k codewords over a packed row basis. `jobs` workers split
/// the message space; the result does not depend on `jobs`.
WeightDistribution weight_distribution(const LinearCode& c, unsigned jobs = 1);

/// Least nonzero weight by enumeration; nullopt for the zero code.
std::optional<std::size_t> minimum_distance(const LinearCode& c, unsigned jobs = 1);

enum class DualDistance { kOne, kTwo, kThree, kAboveThree, kDualTrivial };

std::string to_string(DualDistance d);

/// Column dependency found by dual_min_distance_upto3: sum of
/// coefficients[i] * column(columns[i]) is zero.
struct DualDistanceResult {
  DualDistance verdict = DualDistance::kAboveThree;
  std::vector<std::size_t> columns;
  std::vector<Trit> coefficients;
};

/// Minimum distance of the dual code, capped at 3, via column dependencies of
/// a generator matrix. Works on the row basis, so any generator is accepted.
DualDistanceResult dual_min_distance_upto3(const LinearCode& c);

/// Checks that a witness really is a dependency of the given length.
bool verify_dual_witness(const LinearCode& c, const DualDistanceResult& r);

struct SelfOrthogonality {
  /// G * G^T == 0.
  bool gram_zero = false;
  /// Every weight divisible by 3; absent when not enumerated.
  std::optional<bool> weights_divisible = std::nullopt;

  bool agree() const { return !weights_divisible || *weights_divisible == gram_zero; }
};

/// Method A always; method B when a distribution is supplied.
SelfOrthogonality is_self_orthogonal(const LinearCode& c, const WeightDistribution* dist = nullptr);

/// det(B B^T) != 0 for a full-rank basis B.
bool is_lcd(const LinearCode& c);

/// A_1, A_2, A_3 of the dual solved from the first four power moments.
struct PlessReport {
  bool total_matches = false;  // sum of A_j == 3^k
  mpq_class dual_a1;
  mpq_class dual_a2;
  mpq_class dual_a3;
  /// All three solved values are nonnegative integers.
  bool integral = false;
};

PlessReport pless_check(std::size_t length, std::size_t dimension, const WeightDistribution& dist);

/// Generator matrix of the dual code, built from the reduced echelon form.
/// Has zero rows when the code is the full space.
Gf3Matrix dual_generator(const LinearCode& c);

enum class BoundClass { kOptimal, kAlmostOptimal, kNeither, kExceedsBound };

std::string to_string(BoundClass b);

/// Largest d <= n - k + 1 with 3^(n-k) >= sum_{i <= (d-1)/2} C(n,i) 2^i.
std::size_t sphere_packing_max_d(std::size_t n, std::size_t k);
BoundClass classify_against_bound(std::size_t n, std::size_t k, std::size_t d);

}  // namespace tercodes

#endif  // TERCODES_CODES_HPP_
