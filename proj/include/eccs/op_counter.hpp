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

#ifndef ECCS_OP_COUNTER_HPP_
#define ECCS_OP_COUNTER_HPP_

#include <cstdint>

namespace eccs {

struct OpCounts {
  uint64_t scalar_mults = 0;
  uint64_t point_adds = 0;
  uint64_t negations = 0;
  uint64_t hashes = 0;

  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

/// Counts calls to the public group operations (scalar_mult, point_add,
/// point_negate) and to hash_to_scalar made on this thread while alive.
/// Scopes nest; only the innermost one counts. Not shareable across threads.
class ScopedOpCounter {
 public:
  ScopedOpCounter();
  ~ScopedOpCounter();
  ScopedOpCounter(const ScopedOpCounter&) = delete;
  ScopedOpCounter& operator=(const ScopedOpCounter&) = delete;

  const OpCounts& counts() const { return counts_; }
  void reset() { counts_ = {}; }

 private:
  friend OpCounts* active_op_counts();
  OpCounts counts_;
  ScopedOpCounter* previous_;
};

/// Innermost live counter on this thread, or nullptr.
OpCounts* active_op_counts();

}  // namespace eccs

#endif  // ECCS_OP_COUNTER_HPP_
