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

#include "eccs/random.hpp"

#include <openssl/rand.h>

#include <algorithm>
#include <climits>

#include "eccs/hash.hpp"

namespace eccs {

void SystemRandom::fill(std::span<uint8_t> out) {
  if (out.empty()) return;
  if (out.size() > static_cast<size_t>(INT_MAX) || RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
    throw RngError("system randomness source failed");
  }
}

void DeterministicRandom::fill(std::span<uint8_t> out) {
  size_t offset = 0;
  while (offset < out.size()) {
    uint8_t block[16];
    for (int i = 0; i < 8; ++i) {
      block[i] = static_cast<uint8_t>(seed_ >> (56 - 8 * i));
      block[8 + i] = static_cast<uint8_t>(counter_ >> (56 - 8 * i));
    }
    ++counter_;
    const Digest256 d = sha3_256(block);
    const size_t take = std::min(d.size(), out.size() - offset);
    std::copy_n(d.begin(), take, out.begin() + static_cast<std::ptrdiff_t>(offset));
    offset += take;
  }
}

FieldElement random_nonzero(const std::shared_ptr<const PrimeField>& field, RandomSource& rng) {
  const size_t bits = field->bits();
  const size_t width = field->byte_width();
  const uint8_t top_mask = static_cast<uint8_t>(0xFF >> (8 * width - bits));
  Bytes buf(width);
  for (;;) {
    rng.fill(buf);
    buf[0] &= top_mask;
    const U256 v = U256::from_be_bytes(buf);
    if (!v.is_zero() && v < field->modulus()) return {field, v};
  }
}

}  // namespace eccs
