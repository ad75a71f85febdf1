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

#ifndef ECCS_ELGAMAL_HPP_
#define ECCS_ELGAMAL_HPP_

#include "eccs/curve.hpp"
#include "eccs/random.hpp"

/// Textbook EC-ElGamal. NOT chosen-ciphertext secure: ciphertexts are
/// malleable by design. It exists as a benchmark baseline and as the foil in
/// the malleability comparison; do not use it to protect data.
namespace eccs::elgamal {

struct PrivateKey {
  FieldElement z;
};

struct PublicKey {
  CurvePoint h;  // z G1
};

struct KeyPair {
  PrivateKey priv;
  PublicKey pub;
};

/// (U1, E) = (r G1, r H + m)
struct Ciphertext {
  CurvePoint u1, e;
};

KeyPair keygen(const CurveParams& params, RandomSource& rng);
Ciphertext encrypt_point(const CurveParams& params, const PublicKey& pub, const CurvePoint& message_point,
                         RandomSource& rng);
/// E - z U1. Accepts anything on the curve; there is no validity check.
CurvePoint decrypt_point(const CurveParams& params, const PrivateKey& priv, const Ciphertext& ct);

}  // namespace eccs::elgamal

#endif  // ECCS_ELGAMAL_HPP_
