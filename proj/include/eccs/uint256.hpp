/*
 * Copyright 2026 The eccs Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ECCS_UINT256_HPP_
#define ECCS_UINT256_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "eccs/common.hpp"

namespace eccs {

/// Fixed-width 256-bit unsigned integer, little-endian 64-bit limbs.
///
/// Arithmetic helpers below run in a fixed number of limb operations; the
/// comparison operators and bit_length() are variable-time and reserved for
/// public values.
struct U256 {
  std::array<uint64_t, 4> limb{};

  constexpr U256() = default;
  constexpr explicit U256(uint64_t v) : limb{v, 0, 0, 0} {}
  constexpr U256(uint64_t l0, uint64_t l1, uint64_t l2, uint64_t l3)
      : limb{l0, l1, l2, l3} {}

  /// Parses big-endian hex, optional 0x prefix. Throws UsageError.
  static U256 from_hex(std::string_view hex);

  /// Big-endian bytes, at most 32. Throws ParseError if longer.
  static U256 from_be_bytes(ByteView bytes);

  /// Writes the low out.size() bytes big-endian. Throws UsageError when the
  /// value does not fit.
  void to_be_bytes(std::span<uint8_t> out) const;
  Bytes to_be_bytes(size_t width) const;

  std::string to_hex() const;

  constexpr bool bit(size_t i) const { return (limb[i / 64] >> (i % 64)) & 1U; }
  constexpr bool is_zero() const { return (limb[0] | limb[1] | limb[2] | limb[3]) == 0; }
  constexpr bool is_odd() const { return limb[0] & 1U; }
  constexpr uint64_t low() const { return limb[0]; }

  size_t bit_length() const;

  friend constexpr bool operator==(const U256&, const U256&) = default;
  friend constexpr std::strong_ordering operator<=>(const U256& a, const U256& b) {
    for (int i = 3; i >= 0; --i) {
      if (a.limb[i] != b.limb[i]) return a.limb[i] <=> b.limb[i];
    }
    return std::strong_ordering::equal;
  }
};

__extension__ typedef unsigned __int128 u128;

/// r = a + b, returns the carry out.
inline uint64_t add_carry(U256& r, const U256& a, const U256& b) {
  u128 c = 0;
  for (size_t i = 0; i < 4; ++i) {
    c += static_cast<u128>(a.limb[i]) + b.limb[i];
    r.limb[i] = static_cast<uint64_t>(c);
    c >>= 64;
  }
  return static_cast<uint64_t>(c);
}

/// r = a - b, returns the borrow out (0 or 1).
inline uint64_t sub_borrow(U256& r, const U256& a, const U256& b) {
  uint64_t borrow = 0;
  for (size_t i = 0; i < 4; ++i) {
    const u128 d = static_cast<u128>(a.limb[i]) - b.limb[i] - borrow;
    r.limb[i] = static_cast<uint64_t>(d);
    borrow = static_cast<uint64_t>(d >> 64) & 1U;
  }
  return borrow;
}

inline U256 operator+(const U256& a, const U256& b) {
  U256 r;
  add_carry(r, a, b);
  return r;
}

inline U256 operator-(const U256& a, const U256& b) {
  U256 r;
  sub_borrow(r, a, b);
  return r;
}

inline U256 shr1(const U256& a) {
  U256 r;
  for (size_t i = 0; i < 4; ++i) {
    r.limb[i] = a.limb[i] >> 1;
    if (i < 3) r.limb[i] |= a.limb[i + 1] << 63;
  }
  return r;
}

/// All-ones when flag is 1, zero when flag is 0.
constexpr uint64_t mask_from_bit(uint64_t flag) { return 0 - (flag & 1U); }

/// mask must be all-ones (pick a) or zero (pick b).
inline U256 ct_select(uint64_t mask, const U256& a, const U256& b) {
  U256 r;
  for (size_t i = 0; i < 4; ++i) r.limb[i] = (a.limb[i] & mask) | (b.limb[i] & ~mask);
  return r;
}

inline void ct_swap(uint64_t mask, U256& a, U256& b) {
  for (size_t i = 0; i < 4; ++i) {
    const uint64_t t = (a.limb[i] ^ b.limb[i]) & mask;
    a.limb[i] ^= t;
    b.limb[i] ^= t;
  }
}

/// 1 when a == b, without data-dependent branches.
inline uint64_t ct_equal(const U256& a, const U256& b) {
  uint64_t acc = 0;
  for (size_t i = 0; i < 4; ++i) acc |= a.limb[i] ^ b.limb[i];
  return 1U ^ ((acc | (0 - acc)) >> 63);
}

}  // namespace eccs

#endif  // ECCS_UINT256_HPP_
