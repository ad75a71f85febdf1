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

#ifndef ECCS_TESTS_TEST_SUPPORT_HPP_
#define ECCS_TESTS_TEST_SUPPORT_HPP_

#include <random>

#include "eccs/curve.hpp"
#include "eccs/field.hpp"
#include "eccs/uint256.hpp"

namespace eccs::test {

inline U256 random_u256(std::mt19937_64& gen) { return U256(gen(), gen(), gen(), gen()); }

/// Uniform-ish value below modulus (reduction bias is irrelevant for tests).
inline FieldElement random_element(const std::shared_ptr<const PrimeField>& field, std::mt19937_64& gen) {
  return FieldElement::reduced(field, random_u256(gen));
}

/// (a * b) mod m by binary shift-and-add, independent of Montgomery code.
inline U256 mulmod_reference(const U256& a, const U256& b, const U256& m) {
  auto addmod = [&](const U256& x, const U256& y) {
    U256 s;
    const uint64_t carry = add_carry(s, x, y);
    if (carry || s >= m) s = s - m;
    return s;
  };
  U256 result;
  for (size_t i = b.bit_length(); i-- > 0;) {
    result = addmod(result, result);
    if (b.bit(i)) result = addmod(result, a);
  }
  return result;
}

}  // namespace eccs::test

#endif  // ECCS_TESTS_TEST_SUPPORT_HPP_
