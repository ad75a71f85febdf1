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

#ifndef ECCS_TESTING_HPP_
#define ECCS_TESTING_HPP_

// Deterministic hooks for tests. Absent unless the library is configured
// with ECCS_TEST_HOOKS (off for Release builds).

#include "eccs/ecs.hpp"

#if defined(ECCS_TEST_HOOKS) && ECCS_TEST_HOOKS

namespace eccs::testing {

/// encrypt_chunk with a caller-chosen nonce r in [1, n - 1].
CiphertextChunk encrypt_chunk_with_nonce(const CurveParams& params, const PublicKey& pub,
                                         const CurvePoint& message_point, ByteView header, const FieldElement& r);

}  // namespace eccs::testing

#endif

#endif  // ECCS_TESTING_HPP_
