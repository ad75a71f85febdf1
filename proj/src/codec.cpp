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

#include "eccs/codec.hpp"

#include <algorithm>

namespace eccs {

namespace {
constexpr size_t kHeaderBytes = 2;
}  // namespace

size_t chunk_capacity(const CurveParams& params) {
  const size_t bits = params.field->bits();
  return bits < 16 + 8 ? 0 : (bits - 16) / 8;
}

CurvePoint encode_chunk(const CurveParams& params, ByteView data) {
  const size_t capacity = chunk_capacity(params);
  if (capacity == 0) throw EncodingError("curve field too small for byte-level message encoding");
  if (data.size() > capacity) throw EncodingError("chunk longer than point capacity");

  const PrimeField& f = *params.field;
  const U256 a_m = f.to_mont(params.a);
  const U256 b_m = f.to_mont(params.b);
  Bytes layout(kHeaderBytes + capacity, 0);
  layout[1] = static_cast<uint8_t>(data.size());
  std::copy(data.begin(), data.end(), layout.begin() + kHeaderBytes);

  for (unsigned counter = 0; counter < 256; ++counter) {
    layout[0] = static_cast<uint8_t>(counter);
    const U256 x = U256::from_be_bytes(layout);
    if (x >= f.modulus()) continue;
    const U256 x_m = f.to_mont(x);
    const U256 rhs = f.add(f.mul(f.add(f.sqr(x_m), a_m), x_m), b_m);
    if (const auto root = f.sqrt(rhs)) return CurvePoint::affine(x, f.from_mont(*root));
  }
  throw EncodingError("no pad counter maps the chunk onto the curve");
}

Bytes decode_chunk(const CurveParams& params, const CurvePoint& point) {
  if (point.is_identity()) throw EncodingError("identity carries no message");
  const size_t capacity = chunk_capacity(params);
  if (capacity == 0) throw EncodingError("curve field too small for byte-level message encoding");

  Bytes full(32);
  point.x().to_be_bytes(std::span<uint8_t>(full));
  const size_t layout_size = kHeaderBytes + capacity;
  const auto layout = ByteView(full).subspan(32 - layout_size);
  if (std::any_of(full.begin(), full.end() - static_cast<std::ptrdiff_t>(layout_size),
                  [](uint8_t b) { return b != 0; })) {
    throw EncodingError("x-coordinate exceeds the message layout");
  }
  const size_t length = layout[1];
  if (length > capacity) throw EncodingError("chunk length byte exceeds capacity");
  const auto body = layout.subspan(kHeaderBytes);
  if (std::any_of(body.begin() + static_cast<std::ptrdiff_t>(length), body.end(),
                  [](uint8_t b) { return b != 0; })) {
    throw EncodingError("non-zero fill after chunk data");
  }
  return Bytes(body.begin(), body.begin() + static_cast<std::ptrdiff_t>(length));
}

std::vector<Bytes> split_message(const CurveParams& params, ByteView data) {
  const size_t capacity = chunk_capacity(params);
  if (capacity == 0) throw EncodingError("curve field too small for byte-level message encoding");
  std::vector<Bytes> chunks;
  for (size_t offset = 0; offset < data.size(); offset += capacity) {
    const auto piece = data.subspan(offset, std::min(capacity, data.size() - offset));
    chunks.emplace_back(piece.begin(), piece.end());
  }
  if (chunks.empty()) chunks.emplace_back();
  return chunks;
}

Bytes join_message(const std::vector<Bytes>& chunks) {
  Bytes out;
  for (const Bytes& c : chunks) out.insert(out.end(), c.begin(), c.end());
  return out;
}

}  // namespace eccs
