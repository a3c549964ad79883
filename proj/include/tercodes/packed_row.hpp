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

#ifndef TERCODES_PACKED_ROW_HPP_
#define TERCODES_PACKED_ROW_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "tercodes/field.hpp"

namespace tercodes {

/// GF(3) vector, two bits per symbol split over two bit planes:
/// ones[w] bit i set <=> symbol == 1, twos[w] bit i set <=> symbol == 2.
class PackedRow {
 public:
  PackedRow() = default;
  explicit PackedRow(std::size_t length);
  explicit PackedRow(std::span<const Trit> symbols);

  std::size_t size() const { return length_; }
  Trit get(std::size_t i) const;
  void set(std::size_t i, Trit v);
  std::size_t weight() const;
  std::vector<Trit> unpack() const;

  /// out = a + b and out = a - b; all three must have equal length.
  static void add(const PackedRow& a, const PackedRow& b, PackedRow& out);
  static void sub(const PackedRow& a, const PackedRow& b, PackedRow& out);
  /// out = -a.
  static void negate(const PackedRow& a, PackedRow& out);

  friend bool operator==(const PackedRow&, const PackedRow&) = default;

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> ones_;
  std::vector<std::uint64_t> twos_;
};

}  // namespace tercodes

#endif  // TERCODES_PACKED_ROW_HPP_
