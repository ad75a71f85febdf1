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

#ifndef ECCS_ECS_HPP_
#define ECCS_ECS_HPP_

#include <array>
#include <vector>

#include "eccs/common.hpp"
#include "eccs/curve.hpp"
#include "eccs/field.hpp"
#include "eccs/random.hpp"

namespace eccs {

/// Five secret scalars modulo n, each in [1, n - 1].
struct PrivateKey {
  uint8_t curve_id = 0;
  FieldElement x1, x2, y1, y2, z;
};

/// C = x1 G1 + x2 G2, D = y1 G1 + y2 G2, H = z G1.
struct PublicKey {
  uint8_t curve_id = 0;
  CurvePoint c, d, h;

  friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

struct KeyPair {
  PrivateKey priv;
  PublicKey pub;
};

struct CiphertextChunk {
  CurvePoint u1, u2, e, v;

  friend bool operator==(const CiphertextChunk&, const CiphertextChunk&) = default;
};

struct Ciphertext {
  uint8_t curve_id = 0;
  std::vector<CiphertextChunk> chunks;

  uint32_t total() const { return static_cast<uint32_t>(chunks.size()); }
  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

/// index (4 bytes BE) || total (4 bytes BE); bound into every chunk's hash.
using ChunkHeader = std::array<uint8_t, 8>;
ChunkHeader chunk_header(uint32_t index, uint32_t total);

/// Draws x1, x2, y1, y2, z uniformly from [1, n - 1]. RngError propagates.
KeyPair keygen(const CurveParams& params, RandomSource& rng);

/// Recomputes C, D, H from the private scalars.
PublicKey derive_public_key(const CurveParams& params, const PrivateKey& priv);

/// alpha = SHA3-256("ECCS-v1-alpha" || id || header || U1 || U2 || E) mod n,
/// points in compressed form.
FieldElement hash_to_scalar(const CurveParams& params, ByteView header, const CurvePoint& u1,
                            const CurvePoint& u2, const CurvePoint& e);

/// U1 = rG1, U2 = rG2, E = rH + m, V = rC + (r alpha mod n) D with a fresh
/// r in [1, n - 1].
CiphertextChunk encrypt_chunk(const CurveParams& params, const PublicKey& pub, const CurvePoint& message_point,
                              ByteView header, RandomSource& rng);

/// Recomputes V from (x1 + alpha y1) U1 + (x2 + alpha y2) U2, compares
/// encodings in constant time, and only then returns E - z U1. Every failure
/// surfaces as InvalidCiphertext.
CurvePoint decrypt_chunk(const CurveParams& params, const PrivateKey& priv, const CiphertextChunk& chunk,
                         ByteView header);

/// split_message -> encode_chunk -> encrypt_chunk with header(i, total).
Ciphertext encrypt(const CurveParams& params, const PublicKey& pub, ByteView message, RandomSource& rng);

/// Every chunk is checked before any plaintext is assembled; any failure
/// (including a corrupt plaintext layout) is InvalidCiphertext.
Bytes decrypt(const CurveParams& params, const PrivateKey& priv, const Ciphertext& ct);

/// Constant-time byte-string equality (lengths are public).
bool ct_bytes_equal(ByteView a, ByteView b);

}  // namespace eccs

#endif  // ECCS_ECS_HPP_
