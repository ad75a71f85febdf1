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

#include "eccs/uint256.hpp"

#include <bit>

namespace eccs {

namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

U256 U256::from_hex(std::string_view hex) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.empty() || hex.size() > 64) throw UsageError("U256::from_hex: bad length");
  U256 r;
  size_t nibble = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it, ++nibble) {
    const int d = hex_digit(*it);
    if (d < 0) throw UsageError("U256::from_hex: bad digit");
    r.limb[nibble / 16] |= static_cast<uint64_t>(d) << (4 * (nibble % 16));
  }
  return r;
}

U256 U256::from_be_bytes(ByteView bytes) {
  if (bytes.size() > 32) throw ParseError("integer wider than 256 bits");
  U256 r;
  size_t shift = 0;
  for (auto it = bytes.rbegin(); it != bytes.rend(); ++it, shift += 8) {
    r.limb[shift / 64] |= static_cast<uint64_t>(*it) << (shift % 64);
  }
  return r;
}

void U256::to_be_bytes(std::span<uint8_t> out) const {
  if (out.size() > 32) throw UsageError("U256::to_be_bytes: width > 32");
  if (bit_length() > out.size() * 8) throw UsageError("U256::to_be_bytes: value does not fit");
  size_t shift = 0;
  for (auto it = out.rbegin(); it != out.rend(); ++it, shift += 8) {
    *it = static_cast<uint8_t>(limb[shift / 64] >> (shift % 64));
  }
}

Bytes U256::to_be_bytes(size_t width) const {
  Bytes out(width);
  to_be_bytes(std::span<uint8_t>(out));
  return out;
}

std::string U256::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s(64, '0');
  for (size_t i = 0; i < 64; ++i) {
    const size_t nibble = 63 - i;
    s[i] = kDigits[(limb[nibble / 16] >> (4 * (nibble % 16))) & 0xF];
  }
  return s;
}

size_t U256::bit_length() const {
  for (int i = 3; i >= 0; --i) {
    if (limb[i] != 0) return static_cast<size_t>(i) * 64 + (64 - std::countl_zero(limb[i]));
  }
  return 0;
}

}  // namespace eccs
