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

#include "eccs/ecs.hpp"

#include <string_view>

#include "eccs/codec.hpp"
#include "eccs/hash.hpp"
#include "eccs/op_counter.hpp"
#include "eccs/testing.hpp"

namespace eccs {

namespace {

constexpr std::string_view kAlphaTag = "ECCS-v1-alpha";

void require_curve(const CurveParams& params, uint8_t curve_id) {
  if (params.id != curve_id) throw UsageError("key belongs to a different curve");
}

CiphertextChunk encrypt_with_nonce(const CurveParams& params, const PublicKey& pub, const CurvePoint& m,
                                   ByteView header, const FieldElement& r) {
  const CurvePoint u1 = scalar_mult(params, params.g1, r);
  const CurvePoint u2 = scalar_mult(params, params.g2, r);
  const CurvePoint e = point_add(params, scalar_mult(params, pub.h, r), m);
  const FieldElement alpha = hash_to_scalar(params, header, u1, u2, e);
  const CurvePoint v = point_add(params, scalar_mult(params, pub.c, r), scalar_mult(params, pub.d, r * alpha));
  return {u1, u2, e, v};
}

}  // namespace

ChunkHeader chunk_header(uint32_t index, uint32_t total) {
  ChunkHeader h{};
  for (int i = 0; i < 4; ++i) {
    h[i] = static_cast<uint8_t>(index >> (24 - 8 * i));
    h[4 + i] = static_cast<uint8_t>(total >> (24 - 8 * i));
  }
  return h;
}

PublicKey derive_public_key(const CurveParams& params, const PrivateKey& priv) {
  require_curve(params, priv.curve_id);
  PublicKey pub;
  pub.curve_id = params.id;
  pub.c = point_add(params, scalar_mult(params, params.g1, priv.x1), scalar_mult(params, params.g2, priv.x2));
  pub.d = point_add(params, scalar_mult(params, params.g1, priv.y1), scalar_mult(params, params.g2, priv.y2));
  pub.h = scalar_mult(params, params.g1, priv.z);
  return pub;
}

KeyPair keygen(const CurveParams& params, RandomSource& rng) {
  const auto& n = params.scalars;
  PrivateKey priv{params.id,          random_nonzero(n, rng), random_nonzero(n, rng),
                  random_nonzero(n, rng), random_nonzero(n, rng), random_nonzero(n, rng)};
  PublicKey pub = derive_public_key(params, priv);
  return {std::move(priv), std::move(pub)};
}

FieldElement hash_to_scalar(const CurveParams& params, ByteView header, const CurvePoint& u1,
                            const CurvePoint& u2, const CurvePoint& e) {
  if (OpCounts* counts = active_op_counts()) ++counts->hashes;
  Sha3_256 h;
  h.update(as_bytes(kAlphaTag)).update(params.id).update(header);
  h.update(compress(params, u1)).update(compress(params, u2)).update(compress(params, e));
  return FieldElement::reduced(params.scalars, U256::from_be_bytes(h.finish()));
}

CiphertextChunk encrypt_chunk(const CurveParams& params, const PublicKey& pub, const CurvePoint& message_point,
                              ByteView header, RandomSource& rng) {
  require_curve(params, pub.curve_id);
  require_on_curve(params, message_point);
  return encrypt_with_nonce(params, pub, message_point, header, random_nonzero(params.scalars, rng));
}

bool ct_bytes_equal(ByteView a, ByteView b) {
  if (a.size() != b.size()) return false;
  uint8_t diff = 0;
  for (size_t i = 0; i < a.size(); ++i) diff |= a[i] ^ b[i];
  return diff == 0;
}

namespace {

// Both outcomes run the same group operations; the verdict is read only
// after the constant-time comparison.
CurvePoint decrypt_chunk_unchecked(const CurveParams& params, const PrivateKey& priv, const CiphertextChunk& chunk,
                                   ByteView header, bool& valid) {
  for (const CurvePoint* p : {&chunk.u1, &chunk.u2, &chunk.e, &chunk.v}) {
    if (!is_on_curve(params, *p)) throw InvalidCiphertext();
  }
  const FieldElement alpha = hash_to_scalar(params, header, chunk.u1, chunk.u2, chunk.e);
  const FieldElement s1 = priv.x1 + alpha * priv.y1;
  const FieldElement s2 = priv.x2 + alpha * priv.y2;
  const CurvePoint v_dec = point_add(params, scalar_mult(params, chunk.u1, s1), scalar_mult(params, chunk.u2, s2));
  const CurvePoint m =
      point_add(params, chunk.e, point_negate(params, scalar_mult(params, chunk.u1, priv.z)));
  valid = ct_bytes_equal(compress(params, v_dec), compress(params, chunk.v));
  return m;
}

}  // namespace

CurvePoint decrypt_chunk(const CurveParams& params, const PrivateKey& priv, const CiphertextChunk& chunk,
                         ByteView header) {
  require_curve(params, priv.curve_id);
  bool valid = false;
  CurvePoint m;
  try {
    m = decrypt_chunk_unchecked(params, priv, chunk, header, valid);
  } catch (const Error&) {
    throw InvalidCiphertext();
  }
  if (!valid) throw InvalidCiphertext();
  return m;
}

Ciphertext encrypt(const CurveParams& params, const PublicKey& pub, ByteView message, RandomSource& rng) {
  require_curve(params, pub.curve_id);
  const std::vector<Bytes> pieces = split_message(params, message);
  const auto total = static_cast<uint32_t>(pieces.size());
  Ciphertext ct;
  ct.curve_id = params.id;
  ct.chunks.reserve(pieces.size());
  for (uint32_t i = 0; i < total; ++i) {
    const ChunkHeader header = chunk_header(i, total);
    ct.chunks.push_back(encrypt_chunk(params, pub, encode_chunk(params, pieces[i]), header, rng));
  }
  return ct;
}

Bytes decrypt(const CurveParams& params, const PrivateKey& priv, const Ciphertext& ct) {
  require_curve(params, priv.curve_id);
  if (ct.curve_id != params.id || ct.chunks.empty()) throw InvalidCiphertext();
  const uint32_t total = ct.total();
  bool all_valid = true;
  std::vector<Bytes> pieces;
  pieces.reserve(ct.chunks.size());
  try {
    for (uint32_t i = 0; i < total; ++i) {
      bool valid = false;
      const CurvePoint m = decrypt_chunk_unchecked(params, priv, ct.chunks[i], chunk_header(i, total), valid);
      all_valid &= valid;
      pieces.push_back(all_valid ? decode_chunk(params, m) : Bytes{});
    }
  } catch (const Error&) {
    throw InvalidCiphertext();
  }
  if (!all_valid) throw InvalidCiphertext();
  return join_message(pieces);
}

#if defined(ECCS_TEST_HOOKS) && ECCS_TEST_HOOKS
namespace testing {

CiphertextChunk encrypt_chunk_with_nonce(const CurveParams& params, const PublicKey& pub,
                                         const CurvePoint& message_point, ByteView header, const FieldElement& r) {
  require_curve(params, pub.curve_id);
  require_on_curve(params, message_point);
  if (r.is_zero() || !r.field().same_modulus(*params.scalars)) throw UsageError("nonce must be in [1, n-1]");
  return encrypt_with_nonce(params, pub, message_point, header, r);
}

}  // namespace testing
#endif

}  // namespace eccs
