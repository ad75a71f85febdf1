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

#include "eccs/elgamal.hpp"

namespace eccs::elgamal {

KeyPair keygen(const CurveParams& params, RandomSource& rng) {
  FieldElement z = random_nonzero(params.scalars, rng);
  CurvePoint h = scalar_mult(params, params.g1, z);
  return {{std::move(z)}, {h}};
}

Ciphertext encrypt_point(const CurveParams& params, const PublicKey& pub, const CurvePoint& message_point,
                         RandomSource& rng) {
  const FieldElement r = random_nonzero(params.scalars, rng);
  return {scalar_mult(params, params.g1, r), point_add(params, scalar_mult(params, pub.h, r), message_point)};
}

CurvePoint decrypt_point(const CurveParams& params, const PrivateKey& priv, const Ciphertext& ct) {
  return point_add(params, ct.e, point_negate(params, scalar_mult(params, ct.u1, priv.z)));
}

}  // namespace eccs::elgamal
