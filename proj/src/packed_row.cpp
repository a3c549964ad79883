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

#include "tercodes/packed_row.hpp"

#include <bit>
#include <cassert>

namespace tercodes {

namespace {

constexpr std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

// Bitsliced GF(3) addition. With x0 = "x is 0":
//   z == 1  <=>  (1,0) (0,1) (2,2)
//   z == 2  <=>  (2,0) (0,2) (1,1)
inline void add_word(std::uint64_t x1, std::uint64_t x2, std::uint64_t y1, std::uint64_t y2, std::uint64_t& z1,
                     std::uint64_t& z2) {
  const std::uint64_t x0 = ~(x1 | x2);
  const std::uint64_t y0 = ~(y1 | y2);
  z1 = (x1 & y0) | (x0 & y1) | (x2 & y2);
  z2 = (x2 & y0) | (x0 & y2) | (x1 & y1);
}

}  // namespace

PackedRow::PackedRow(std::size_t length)
    : length_(length), ones_(words_for(length), 0), twos_(words_for(length), 0) {}

PackedRow::PackedRow(std::span<const Trit> symbols) : PackedRow(symbols.size()) {
  for (std::size_t i = 0; i < symbols.size(); ++i) set(i, symbols[i]);
}

Trit PackedRow::get(std::size_t i) const {
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (ones_[i / 64] & bit) return 1;
  if (twos_[i / 64] & bit) return 2;
  return 0;
}

void PackedRow::set(std::size_t i, Trit v) {
  assert(i < length_ && v < 3);
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  ones_[i / 64] &= ~bit;
  twos_[i / 64] &= ~bit;
  if (v == 1) ones_[i / 64] |= bit;
  if (v == 2) twos_[i / 64] |= bit;
}

std::size_t PackedRow::weight() const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < ones_.size(); ++i) w += static_cast<std::size_t>(std::popcount(ones_[i] | twos_[i]));
  return w;
}

std::vector<Trit> PackedRow::unpack() const {
  std::vector<Trit> out(length_);
  for (std::size_t i = 0; i < length_; ++i) out[i] = get(i);
  return out;
}

void PackedRow::add(const PackedRow& a, const PackedRow& b, PackedRow& out) {
  assert(a.length_ == b.length_ && a.length_ == out.length_);
  for (std::size_t w = 0; w < a.ones_.size(); ++w) {
    add_word(a.ones_[w], a.twos_[w], b.ones_[w], b.twos_[w], out.ones_[w], out.twos_[w]);
  }
}

void PackedRow::sub(const PackedRow& a, const PackedRow& b, PackedRow& out) {
  assert(a.length_ == b.length_ && a.length_ == out.length_);
  // -b swaps the planes.
  for (std::size_t w = 0; w < a.ones_.size(); ++w) {
    add_word(a.ones_[w], a.twos_[w], b.twos_[w], b.ones_[w], out.ones_[w], out.twos_[w]);
  }
}

void PackedRow::negate(const PackedRow& a, PackedRow& out) {
  out = a;
  out.ones_.swap(out.twos_);
}

}  // namespace tercodes
