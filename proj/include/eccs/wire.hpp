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

#ifndef ECCS_WIRE_HPP_
#define ECCS_WIRE_HPP_

#include <array>
#include <string>
#include <string_view>

#include "eccs/common.hpp"
#include "eccs/ecs.hpp"

namespace eccs::wire {

// Envelope: "ECS1" | version 0x01 | kind | curve id | body
inline constexpr std::array<uint8_t, 4> kMagic = {'E', 'C', 'S', '1'};
inline constexpr uint8_t kVersion = 0x01;
inline constexpr size_t kEnvelopeHeaderSize = 7;

enum class Kind : uint8_t {
  kPublicKey = 0x01,
  kPrivateKey = 0x02,
  kCiphertext = 0x03,
};

inline constexpr std::string_view kPublicKeyLabel = "ECCS PUBLIC KEY";
inline constexpr std::string_view kPrivateKeyLabel = "ECCS PRIVATE KEY";
inline constexpr std::string_view kMessageLabel = "ECCS MESSAGE";

struct EnvelopeInfo {
  Kind kind;
  const CurveParams* curve;
};

/// Validates magic, version, kind and curve id without touching the body.
/// Throws ParseError.
EnvelopeInfo peek_envelope(ByteView data);

/// body = compress(C) || compress(D) || compress(H)
Bytes serialize_public_key(const PublicKey& pub);
/// Every point must be on the curve and not the identity.
PublicKey parse_public_key(ByteView data);

/// body = x1 || x2 || y1 || y2 || z, fixed-width big-endian.
Bytes serialize_private_key(const PrivateKey& priv);
/// Every scalar must lie in [1, n - 1].
PrivateKey parse_private_key(ByteView data);

/// body = total (4 bytes BE) || per chunk compress(U1) || compress(U2) ||
/// compress(E) || compress(V)
Bytes serialize_ciphertext(const Ciphertext& ct);
/// total must be >= 1 and match the number of chunks present; all points on
/// the curve; no trailing bytes.
Ciphertext parse_ciphertext(ByteView data);

/// -----BEGIN <label>----- / base64 at 64 columns / -----END <label>-----
std::string armor(ByteView data, std::string_view label);
/// Strict inverse of armor(). Throws ParseError on label mismatch, bad
/// base64, an empty body, or missing delimiters.
Bytes dearmor(std::string_view text, std::string_view label);

/// True when text starts with an armor BEGIN line.
bool looks_armored(ByteView data);

}  // namespace eccs::wire

#endif  // ECCS_WIRE_HPP_
