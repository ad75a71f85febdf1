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

#ifndef ECCS_HASH_HPP_
#define ECCS_HASH_HPP_

#include <array>
#include <memory>

#include "eccs/common.hpp"

namespace eccs {

using Digest256 = std::array<uint8_t, 32>;

/// Incremental SHA3-256 (FIPS 202).
class Sha3_256 {
 public:
  Sha3_256();
  ~Sha3_256();
  Sha3_256(Sha3_256&&) noexcept;
  Sha3_256& operator=(Sha3_256&&) noexcept;

  Sha3_256& update(ByteView data);
  Sha3_256& update(uint8_t byte) { return update(ByteView(&byte, 1)); }
  /// Single use; the object must not be updated afterwards.
  Digest256 finish();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

Digest256 sha3_256(ByteView data);

}  // namespace eccs

#endif  // ECCS_HASH_HPP_
