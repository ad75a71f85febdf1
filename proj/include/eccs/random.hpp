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

#ifndef ECCS_RANDOM_HPP_
#define ECCS_RANDOM_HPP_

#include <span>

#include "eccs/common.hpp"
#include "eccs/field.hpp"

namespace eccs {

/// Every random draw in the library goes through one of these, supplied by
/// the caller. Implementations throw RngError when they cannot deliver.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::span<uint8_t> out) = 0;
};

/// Operating-system backed CSPRNG (OpenSSL RAND_bytes).
class SystemRandom final : public RandomSource {
 public:
  void fill(std::span<uint8_t> out) override;
};

/// Reproducible stream SHA3-256(seed || counter). Never use it for keys
/// that protect anything; it exists for self-tests and test fixtures.
class DeterministicRandom final : public RandomSource {
 public:
  explicit DeterministicRandom(uint64_t seed) : seed_(seed) {}
  void fill(std::span<uint8_t> out) override;

 private:
  uint64_t seed_;
  uint64_t counter_ = 0;
};

/// Uniform scalar in [1, modulus - 1] by rejection sampling.
FieldElement random_nonzero(const std::shared_ptr<const PrimeField>& field, RandomSource& rng);

}  // namespace eccs

#endif  // ECCS_RANDOM_HPP_
