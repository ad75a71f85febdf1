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

#include <random>
#include <set>

#include "doctest.h"
#include "eccs/ecs.hpp"
#include "eccs/oracle.hpp"
#include "eccs/testing.hpp"

using namespace eccs;

namespace {

const oracle::GroupTable& toy_table() {
  static const oracle::GroupTable table = oracle::GroupTable::enumerate(toy_curve());
  return table;
}

std::optional<CurvePoint> scheme_decrypt(const PrivateKey& priv, const CiphertextChunk& chunk, ByteView header) {
  try {
    return decrypt_chunk(toy_curve(), priv, chunk, header);
  } catch (const InvalidCiphertext&) {
    return std::nullopt;
  }
}

// Mutation fixture: decryption with the validity check removed.
std::optional<CurvePoint> unchecked_decrypt(const PrivateKey& priv, const CiphertextChunk& chunk) {
  const CurveParams& toy = toy_curve();
  return point_add(toy, chunk.e, point_negate(toy, scalar_mult(toy, chunk.u1, priv.z)));
}

}  // namespace

TEST_CASE("enumeration order, size and Latin-square structure") {
  const auto& table = toy_table();
  REQUIRE(table.size() == 1093);
  CHECK(table.point(0).is_identity());
  for (uint32_t i = 2; i < table.size(); ++i) {
    const CurvePoint& prev = table.point(i - 1);
    const CurvePoint& cur = table.point(i);
    const bool ordered = prev.x() < cur.x() || (prev.x() == cur.x() && !prev.y().is_odd() && cur.y().is_odd());
    REQUIRE(ordered);
  }
  for (uint32_t i = 0; i < table.size(); ++i) {
    REQUIRE(table.index_of(table.point(i)) == i);
    REQUIRE(table.add(0, i) == i);
  }

  std::vector<uint8_t> seen(table.size());
  for (uint32_t i = 0; i < table.size(); ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (uint32_t j = 0; j < table.size(); ++j) seen[table.add(i, j)] = 1;
    REQUIRE(std::count(seen.begin(), seen.end(), 1) == static_cast<long>(table.size()));
    REQUIRE(table.add(i, table.negate(i)) == 0);
  }

  const int64_t trace = 1051 + 1 - static_cast<int64_t>(table.size());
  CHECK(trace * trace <= 4 * 1051);
  CHECK_FALSE(table.index_of(CurvePoint::affine(U256(3), U256(667))).has_value());
}

TEST_CASE("enumeration refuses large curves") {
  CHECK_THROWS_AS(oracle::GroupTable::enumerate(secp256k1()), UsageError);
}

TEST_CASE("schoolbook addition agrees with the group table") {
  const auto& table = toy_table();
  std::mt19937_64 gen(1);
  for (int i = 0; i < 20000; ++i) {
    const auto a = static_cast<uint32_t>(gen() % table.size());
    const auto b = static_cast<uint32_t>(gen() % table.size());
    REQUIRE(oracle::schoolbook_add(1051, 0, table.point(a), table.point(b)) == table.point(table.add(a, b)));
  }
}

TEST_CASE("brute-force discrete log") {
  const CurveParams& toy = toy_curve();
  const auto& table = toy_table();
  CHECK(oracle::brute_dlog(table, toy.g1, CurvePoint::identity()) == 0u);
  CHECK(oracle::brute_dlog(table, toy.g1, toy.g1) == 1u);
  const uint32_t g = *table.index_of(toy.g1);
  for (uint64_t k = 0; k < 1093; k += 13) {
    CHECK(oracle::brute_dlog(table, toy.g1, table.point(table.multiply(g, k))) == k);
  }
  CHECK_FALSE(oracle::brute_dlog(table, toy.g1, CurvePoint::affine(U256(3), U256(667))).has_value());
}

TEST_CASE("independent decryption agrees with the scheme") {
  const CurveParams& toy = toy_curve();
  const auto& table = toy_table();
  DeterministicRandom rng(404);
  std::mt19937_64 gen(404);
  size_t honest = 0;
  size_t rejected = 0;
  for (int i = 0; i < 1000; ++i) {
    const KeyPair keys = keygen(toy, rng);
    const auto header = chunk_header(static_cast<uint32_t>(i % 3), 3);
    const CurvePoint m = table.point(static_cast<uint32_t>(1 + gen() % (table.size() - 1)));
    CiphertextChunk chunk = encrypt_chunk(toy, keys.pub, m, header, rng);
    // E and V tampering keeps U2 = r G2, where both checks are the same equation.
    switch (i % 4) {
      case 1:
        chunk.v = point_add(toy, chunk.v, toy.g1);
        break;
      case 2:
        chunk.e = point_add(toy, chunk.e, toy.g2);
        break;
      default:
        break;
    }
    const auto expected = oracle::independent_decrypt(table, toy, keys.pub, chunk, header);
    const auto actual = scheme_decrypt(keys.priv, chunk, header);
    REQUIRE(expected == actual);
    if (i % 4 == 0 || i % 4 == 3) {
      REQUIRE(actual == m);
      ++honest;
    }
    rejected += !actual.has_value();
  }
  CHECK(honest == 500);
  CHECK(rejected >= 490);
}

TEST_CASE("oracle detects a decryptor without a validity check") {
  const CurveParams& toy = toy_curve();
  DeterministicRandom rng(405);
  const KeyPair keys = keygen(toy, rng);
  const auto header = chunk_header(0, 1);
  size_t disagreements = 0;
  for (int i = 0; i < 50; ++i) {
    CiphertextChunk chunk = encrypt_chunk(toy, keys.pub, toy_table().point(7), header, rng);
    chunk.e = point_add(toy, chunk.e, toy.g1);
    if (oracle::independent_decrypt(toy_table(), toy, keys.pub, chunk, header) != unchecked_decrypt(keys.priv, chunk)) {
      ++disagreements;
    }
  }
  CHECK(disagreements >= 45);
}

#if defined(ECCS_TEST_HOOKS) && ECCS_TEST_HOOKS
TEST_CASE("oracle recovers the nonce fixed through the test hook") {
  const CurveParams& toy = toy_curve();
  DeterministicRandom rng(406);
  const KeyPair keys = keygen(toy, rng);
  const auto header = chunk_header(0, 1);
  for (uint64_t r = 1; r < 1093; r += 37) {
    const CiphertextChunk chunk = testing::encrypt_chunk_with_nonce(toy, keys.pub, toy_table().point(11), header,
                                                                    FieldElement(toy.scalars, U256(r)));
    oracle::DecryptTrace trace;
    const auto m = oracle::independent_decrypt(toy_table(), toy, keys.pub, chunk, header, &trace);
    CHECK(m == toy_table().point(11));
    CHECK(trace.r == r);
    CHECK(U256(trace.z) == keys.priv.z.value());
    CHECK(U256(trace.alpha) == hash_to_scalar(toy, header, chunk.u1, chunk.u2, chunk.e).value());
  }
}
#endif
