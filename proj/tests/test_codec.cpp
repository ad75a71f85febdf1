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

#include <map>
#include <random>

#include "doctest.h"
#include "eccs/codec.hpp"
#include "eccs/curve.hpp"

using namespace eccs;

namespace {

Bytes random_bytes(std::mt19937_64& gen, size_t len) {
  Bytes out(len);
  for (auto& b : out) b = static_cast<uint8_t>(gen());
  return out;
}

// Builds a point whose x carries an arbitrary 32-byte layout, if one exists.
std::optional<CurvePoint> point_with_x(const CurveParams& params, Bytes x_bytes) {
  for (int counter = 0; counter < 256; ++counter) {
    x_bytes[0] = static_cast<uint8_t>(counter);
    const FieldElement x = FieldElement::from_bytes(params.field, x_bytes);
    const FieldElement rhs = x * x * x + FieldElement(params.field, params.b);
    if (auto y = fe_sqrt(rhs)) return CurvePoint::affine(x.value(), y->value());
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("chunk capacity") {
  CHECK(chunk_capacity(secp256k1()) == 30);
  CHECK(chunk_capacity(toy_curve()) == 0);
  CHECK_THROWS_AS(encode_chunk(toy_curve(), Bytes{}), EncodingError);
}

TEST_CASE("encode and decode round trip") {
  const CurveParams& k1 = secp256k1();
  std::mt19937_64 gen(3);
  for (int i = 0; i < 10000; ++i) {
    const Bytes data = random_bytes(gen, gen() % 31);
    const CurvePoint p = encode_chunk(k1, data);
    REQUIRE_FALSE(p.is_identity());
    REQUIRE(is_on_curve(k1, p));
    REQUIRE_FALSE(p.y().is_odd());
    REQUIRE(decode_chunk(k1, p) == data);
  }
  CHECK(decode_chunk(k1, encode_chunk(k1, as_bytes("abc"))) == Bytes{'a', 'b', 'c'});
  CHECK(decode_chunk(k1, encode_chunk(k1, Bytes{})).empty());
}

TEST_CASE("encoding is injective over short inputs") {
  const CurveParams& k1 = secp256k1();
  std::map<U256, Bytes> seen;
  auto check = [&](const Bytes& data) {
    const CurvePoint p = encode_chunk(k1, data);
    REQUIRE(decode_chunk(k1, p) == data);
    const auto [it, inserted] = seen.emplace(p.x(), data);
    REQUIRE((inserted || it->second == data));
  };
  check(Bytes{});
  for (int a = 0; a < 256; ++a) check(Bytes{static_cast<uint8_t>(a)});
  for (int a = 0; a < 256; ++a) {
    for (int b = 0; b < 256; b += 5) check(Bytes{static_cast<uint8_t>(a), static_cast<uint8_t>(b)});
  }
  std::mt19937_64 gen(21);
  for (int i = 0; i < 2000; ++i) check(random_bytes(gen, 3 + gen() % 28));
  CHECK(seen.size() > 13000);
}

TEST_CASE("encode rejects oversized chunks") {
  const CurveParams& k1 = secp256k1();
  CHECK_NOTHROW(encode_chunk(k1, Bytes(30, 0xAB)));
  CHECK_THROWS_AS(encode_chunk(k1, Bytes(31, 0xAB)), EncodingError);
}

TEST_CASE("decode rejects corrupt layouts") {
  const CurveParams& k1 = secp256k1();
  CHECK_THROWS_AS(decode_chunk(k1, CurvePoint::identity()), EncodingError);

  Bytes layout(32, 0);
  layout[1] = 0xFF;  // length byte beyond capacity
  auto p = point_with_x(k1, layout);
  REQUIRE(p.has_value());
  CHECK_THROWS_AS(decode_chunk(k1, *p), EncodingError);

  layout[1] = 2;
  layout[2] = 'h';
  layout[3] = 'i';
  layout[20] = 0x01;  // non-zero fill
  p = point_with_x(k1, layout);
  REQUIRE(p.has_value());
  CHECK_THROWS_AS(decode_chunk(k1, *p), EncodingError);

  layout[20] = 0;
  p = point_with_x(k1, layout);
  REQUIRE(p.has_value());
  CHECK(decode_chunk(k1, *p) == Bytes{'h', 'i'});
}

TEST_CASE("split and join") {
  const CurveParams& k1 = secp256k1();
  const auto chunks = split_message(k1, Bytes(70, 0x11));
  REQUIRE(chunks.size() == 3);
  CHECK(chunks[0].size() == 30);
  CHECK(chunks[1].size() == 30);
  CHECK(chunks[2].size() == 10);

  const auto empty = split_message(k1, Bytes{});
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].empty());
  CHECK(join_message(empty).empty());

  CHECK(split_message(k1, Bytes(60, 0)).size() == 2);
  CHECK(split_message(k1, Bytes(61, 0)).size() == 3);

  std::mt19937_64 gen(8);
  for (size_t len : {size_t{1}, size_t{29}, size_t{30}, size_t{31}, size_t{4096}, size_t{1} << 20}) {
    const Bytes data = random_bytes(gen, len);
    const auto parts = split_message(k1, data);
    CHECK(parts.size() == (len + 29) / 30);
    CHECK(join_message(parts) == data);
  }
}
