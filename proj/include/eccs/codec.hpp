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

#ifndef ECCS_CODEC_HPP_
#define ECCS_CODEC_HPP_

#include <vector>

#include "eccs/common.hpp"
#include "eccs/curve.hpp"

namespace eccs {

/// Message bytes carried by one point: floor((bits(p) - 16) / 8), or 0 when
/// the field is too small for the two header bytes plus one message byte.
size_t chunk_capacity(const CurveParams& params);

/// Embeds up to chunk_capacity() bytes into the x-coordinate
///
///   x = pad_counter (1 byte) || length (1 byte) || data || zero fill
///
/// bumping pad_counter until x^3 + ax + b is a residue, and returns
/// (x, even root). Throws EncodingError when the data is too long, the curve
/// has no byte capacity, or all 256 counters fail.
CurvePoint encode_chunk(const CurveParams& params, ByteView data);

/// Inverse of encode_chunk. Throws EncodingError for the identity, a length
/// byte above capacity, bytes above the layout, or non-zero fill.
Bytes decode_chunk(const CurveParams& params, const CurvePoint& point);

/// Greedy capacity-sized split; an empty message yields one empty chunk.
std::vector<Bytes> split_message(const CurveParams& params, ByteView data);
Bytes join_message(const std::vector<Bytes>& chunks);

}  // namespace eccs

#endif  // ECCS_CODEC_HPP_
