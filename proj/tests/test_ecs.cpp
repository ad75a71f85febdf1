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
#include "eccs/codec.hpp"
#include "eccs/ecs.hpp"
#include "eccs/hash.hpp"
#include "eccs/op_counter.hpp"
#include "eccs/oracle.hpp"
#include "eccs/testing.hpp"

using namespace eccs;

namespace {

const oracle::GroupTable& toy_table() {
  static const oracle::GroupTable table = oracle::GroupTable::enumerate(toy_curve());
  return table;
}

std::string hex(ByteView bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (uint8_t b : bytes) {
    out += kDigits[b >> 4];
    out += kDigits[b & 15];
  }
  return out;
}

bool rejected(const CurveParams& params, const PrivateKey& priv, const CiphertextChunk& chunk, ByteView header) {
  try {
    decrypt_chunk(params, priv, chunk, header);
    return false;
  } catch (const InvalidCiphertext&) {
    return true;
  }
}

class FailingRandom final : public RandomSource {
 public:
  void fill(std::span<uint8_t>) override { throw RngError("entropy source unavailable"); }
};

}  // namespace

TEST_CASE("SHA3-256 reference vectors") {
  CHECK(hex(sha3_256({})) == "a7ffc6f8bf1ed76651c14756a061d662f580ff4de43b49fa82d80a4b80f8434a");
  CHECK(hex(sha3_256(as_bytes("abc"))) == "3a985da74fe225b2045c172d6bd390bd855f086e3e9d525b46bfe24511431532");
  CHECK(hex(sha3_256(as_bytes("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq"))) ==
        "41c0dba2a9d6240849100376a8235e2c82e1b9998a999e21db32dd97496d3376");
  CHECK(hex(sha3_256(Bytes(200, 0xa3))) == "79f38adec5c20307a98ef76e8324afbfd46cfd81b22e3973c65fa1bd9de31787");

  Sha3_256 incremental;
  for (int i = 0; i < 200; ++i) incremental.update(uint8_t{0xa3});
  CHECK(hex(incremental.finish()) == hex(sha3_256(Bytes(200, 0xa3))));
}

TEST_CASE("keygen is deterministic under a seeded source") {
  for (const CurveParams* params : {&secp256k1(), &toy_curve()}) {
    DeterministicRandom a(42), b(42), c(43);
    const KeyPair k1 = keygen(*params, a);
    const KeyPair k2 = keygen(*params, b);
    const KeyPair k3 = keygen(*params, c);
    CHECK(k1.pub == k2.pub);
    CHECK(k1.priv.z == k2.priv.z);
    CHECK(k1.priv.x1 == k2.priv.x1);
    CHECK_FALSE(k1.pub == k3.pub);
    for (const CurvePoint* p : {&k1.pub.c, &k1.pub.d, &k1.pub.h}) {
      CHECK(is_on_curve(*params, *p));
      CHECK_FALSE(p->is_identity());
    }
    CHECK(derive_public_key(*params, k1.priv) == k1.pub);
  }
}

TEST_CASE("keygen propagates randomness failures") {
  FailingRandom rng;
  CHECK_THROWS_AS(keygen(secp256k1(), rng), RngError);
  DeterministicRandom seeded(1);
  const KeyPair keys = keygen(secp256k1(), seeded);
  CHECK_THROWS_AS(encrypt(secp256k1(), keys.pub, as_bytes("x"), rng), RngError);
}

TEST_CASE("brute-force dlog of H recovers z on the toy curve") {
  const CurveParams& toy = toy_curve();
  DeterministicRandom rng(7);
  for (int i = 0; i < 20; ++i) {
    const KeyPair keys = keygen(toy, rng);
    const auto z = oracle::brute_dlog(toy_table(), toy.g1, keys.pub.h);
    REQUIRE(z.has_value());
    CHECK(U256(*z) == keys.priv.z.value());
  }
}

TEST_CASE("hash_to_scalar binds the chunk header") {
  const CurveParams& k1 = secp256k1();
  DeterministicRandom rng(9);
  const KeyPair keys = keygen(k1, rng);
  const CiphertextChunk chunk = encrypt_chunk(k1, keys.pub, k1.g1, chunk_header(0, 1), rng);
  const FieldElement alpha = hash_to_scalar(k1, chunk_header(0, 1), chunk.u1, chunk.u2, chunk.e);
  CHECK(hash_to_scalar(k1, chunk_header(0, 1), chunk.u1, chunk.u2, chunk.e) == alpha);

  std::set<U256> alphas{alpha.value()};
  for (uint32_t i = 1; i <= 1000; ++i) {
    alphas.insert(hash_to_scalar(k1, chunk_header(i, 1001), chunk.u1, chunk.u2, chunk.e).value());
  }
  CHECK(alphas.size() == 1001);

  const ChunkHeader h = chunk_header(0x01020304, 0x0A0B0C0D);
  CHECK(h == ChunkHeader{0x01, 0x02, 0x03, 0x04, 0x0A, 0x0B, 0x0C, 0x0D});
}

#if defined(ECCS_TEST_HOOKS) && ECCS_TEST_HOOKS

TEST_CASE("nonce hook: r = 1 yields the generators") {
  for (const CurveParams* params : {&secp256k1(), &toy_curve()}) {
    DeterministicRandom rng(1);
    const KeyPair keys = keygen(*params, rng);
    const FieldElement one = FieldElement::one(params->scalars);
    const CiphertextChunk chunk =
        testing::encrypt_chunk_with_nonce(*params, keys.pub, params->g1, chunk_header(0, 1), one);
    CHECK(chunk.u1 == params->g1);
    CHECK(chunk.u2 == params->g2);
    CHECK(chunk.e == point_add(*params, keys.pub.h, params->g1));
    CHECK_THROWS_AS(testing::encrypt_chunk_with_nonce(*params, keys.pub, params->g1, chunk_header(0, 1),
                                                      FieldElement::zero(params->scalars)),
                    UsageError);
  }
}

TEST_CASE("toy ciphertext components match the group table") {
  const CurveParams& toy = toy_curve();
  const auto& table = toy_table();
  DeterministicRandom rng(12);
  const KeyPair keys = keygen(toy, rng);
  const uint32_t g1 = *table.index_of(toy.g1);
  const uint32_t g2 = *table.index_of(toy.g2);
  const uint32_t h = *table.index_of(keys.pub.h);
  const uint32_t c = *table.index_of(keys.pub.c);
  const uint32_t d = *table.index_of(keys.pub.d);
  const ChunkHeader header = chunk_header(0, 1);

  for (uint64_t r = 1; r < 1093; r += 7) {
    const uint32_t m = static_cast<uint32_t>(1 + (r * 31) % (table.size() - 1));
    const CiphertextChunk chunk = testing::encrypt_chunk_with_nonce(
        toy, keys.pub, table.point(m), header, FieldElement(toy.scalars, U256(r)));
    CHECK(chunk.u1 == table.point(table.multiply(g1, r)));
    CHECK(chunk.u2 == table.point(table.multiply(g2, r)));
    CHECK(chunk.e == table.point(table.add(table.multiply(h, r), m)));
    const uint64_t alpha = hash_to_scalar(toy, header, chunk.u1, chunk.u2, chunk.e).value().low();
    const uint64_t ra = (r * alpha) % 1093;
    CHECK(chunk.v == table.point(table.add(table.multiply(c, r), table.multiply(d, ra))));
    CHECK(decrypt_chunk(toy, keys.priv, chunk, header) == table.point(m));
  }
}

TEST_CASE("validity check equals the four-term form for every r") {
  const CurveParams& toy = toy_curve();
  DeterministicRandom rng(13);
  const KeyPair keys = keygen(toy, rng);
  const ChunkHeader header = chunk_header(0, 1);
  const auto& s = keys.priv;
  for (uint64_t r = 1; r < 1093; ++r) {
    const CiphertextChunk chunk = testing::encrypt_chunk_with_nonce(toy, keys.pub, toy_table().point(5), header,
                                                                    FieldElement(toy.scalars, U256(r)));
    const FieldElement alpha = hash_to_scalar(toy, header, chunk.u1, chunk.u2, chunk.e);
    CurvePoint sum = scalar_mult(toy, chunk.u1, s.x1);
    sum = point_add(toy, sum, scalar_mult(toy, chunk.u1, alpha * s.y1));
    sum = point_add(toy, sum, scalar_mult(toy, chunk.u2, s.x2));
    sum = point_add(toy, sum, scalar_mult(toy, chunk.u2, alpha * s.y2));
    REQUIRE(sum == chunk.v);
  }
}

#endif  // ECCS_TEST_HOOKS

TEST_CASE("chunk round trip and single-point tampering") {
  const CurveParams& toy = toy_curve();
  const auto& table = toy_table();
  DeterministicRandom rng(14);
  const ChunkHeader header = chunk_header(0, 1);
  size_t v_rejected = 0;
  size_t e_rejected = 0;
  const int trials = 200;
  for (int i = 0; i < trials; ++i) {
    const KeyPair keys = keygen(toy, rng);
    const CurvePoint m = table.point(static_cast<uint32_t>(1 + i));
    const CiphertextChunk chunk = encrypt_chunk(toy, keys.pub, m, header, rng);
    REQUIRE(decrypt_chunk(toy, keys.priv, chunk, header) == m);

    CiphertextChunk bad_v = chunk;
    bad_v.v = point_add(toy, chunk.v, toy.g1);
    v_rejected += rejected(toy, keys.priv, bad_v, header);

    CiphertextChunk bad_e = chunk;
    bad_e.e = point_add(toy, chunk.e, toy.g1);
    e_rejected += rejected(toy, keys.priv, bad_e, header);
  }
  CHECK(v_rejected == trials);
  CHECK(e_rejected == trials);

  // Off-curve and mismatched-curve input.
  DeterministicRandom rng2(15);
  const KeyPair keys = keygen(toy, rng2);
  CiphertextChunk chunk = encrypt_chunk(toy, keys.pub, table.point(9), header, rng2);
  chunk.u2 = CurvePoint::affine(U256(1), U256(1));
  CHECK(rejected(toy, keys.priv, chunk, header));
  CHECK_THROWS_AS(decrypt_chunk(secp256k1(), keys.priv, chunk, header), UsageError);
}

TEST_CASE("message round trip on secp256k1") {
  const CurveParams& k1 = secp256k1();
  DeterministicRandom rng(16);
  const KeyPair keys = keygen(k1, rng);
  std::mt19937_64 gen(16);
  for (size_t len : {size_t{0}, size_t{1}, size_t{30}, size_t{31}, size_t{70}, size_t{517}, size_t{4096}}) {
    Bytes message(len);
    for (auto& b : message) b = static_cast<uint8_t>(gen());
    const Ciphertext ct = encrypt(k1, keys.pub, message, rng);
    CHECK(ct.total() == std::max<size_t>(1, (len + 29) / 30));
    CHECK(decrypt(k1, keys.priv, ct) == message);
  }
  CHECK(encrypt(k1, keys.pub, Bytes(70, 1), rng).total() == 3);
}

TEST_CASE("chunk order, truncation and wrong keys are rejected") {
  const CurveParams& k1 = secp256k1();
  DeterministicRandom rng(17);
  const KeyPair keys = keygen(k1, rng);
  const KeyPair other = keygen(k1, rng);
  const Bytes message(70, 0x5A);
  const Ciphertext ct = encrypt(k1, keys.pub, message, rng);

  Ciphertext swapped = ct;
  std::swap(swapped.chunks[0], swapped.chunks[1]);
  CHECK_THROWS_AS(decrypt(k1, keys.priv, swapped), InvalidCiphertext);

  Ciphertext truncated = ct;
  truncated.chunks.pop_back();
  CHECK_THROWS_AS(decrypt(k1, keys.priv, truncated), InvalidCiphertext);

  Ciphertext empty = ct;
  empty.chunks.clear();
  CHECK_THROWS_AS(decrypt(k1, keys.priv, empty), InvalidCiphertext);

  CHECK_THROWS_AS(decrypt(k1, other.priv, ct), InvalidCiphertext);

  Ciphertext tampered = ct;
  tampered.chunks[2].v = point_add(k1, tampered.chunks[2].v, k1.g1);
  try {
    decrypt(k1, keys.priv, tampered);
    FAIL("tampered ciphertext accepted");
  } catch (const InvalidCiphertext& e) {
    CHECK(std::string(e.what()) == "invalid ciphertext");
  }
}

TEST_CASE("fresh nonces per chunk and per encryption") {
  const CurveParams& k1 = secp256k1();
  DeterministicRandom rng(18);
  const KeyPair keys = keygen(k1, rng);
  std::set<Bytes> u1s;
  for (int i = 0; i < 1000; ++i) {
    const Ciphertext ct = encrypt(k1, keys.pub, as_bytes("same"), rng);
    u1s.insert(compress(k1, ct.chunks[0].u1));
  }
  CHECK(u1s.size() == 1000);

  const Bytes message(45, 0x33);
  for (int i = 0; i < 100; ++i) {
    const Ciphertext a = encrypt(k1, keys.pub, message, rng);
    const Ciphertext b = encrypt(k1, keys.pub, message, rng);
    REQUIRE(a.total() == b.total());
    for (size_t j = 0; j < a.chunks.size(); ++j) {
      CHECK_FALSE(a.chunks[j].u1 == b.chunks[j].u1);
      CHECK_FALSE(a.chunks[j].e == b.chunks[j].e);
      CHECK_FALSE(a.chunks[j].v == b.chunks[j].v);
    }
  }
}

TEST_CASE("operation counts per chunk") {
  const CurveParams& k1 = secp256k1();
  DeterministicRandom rng(19);
  std::optional<KeyPair> generated;
  {
    ScopedOpCounter counter;
    generated = keygen(k1, rng);
    CHECK(counter.counts() == OpCounts{5, 2, 0, 0});
  }
  const KeyPair& keys = *generated;

  const CurvePoint m = encode_chunk(k1, as_bytes("count me"));
  CiphertextChunk chunk;
  {
    ScopedOpCounter counter;
    chunk = encrypt_chunk(k1, keys.pub, m, chunk_header(0, 1), rng);
    // U1, U2, rH, rC and (r alpha) D; V cannot be formed with fewer.
    CHECK(counter.counts() == OpCounts{5, 2, 0, 1});
  }
  {
    ScopedOpCounter counter;
    CHECK(decrypt_chunk(k1, keys.priv, chunk, chunk_header(0, 1)) == m);
    CHECK(counter.counts() == OpCounts{3, 2, 1, 1});
  }
  {
    ScopedOpCounter outer;
    {
      ScopedOpCounter inner;
      scalar_mult(k1, k1.g1, FieldElement::one(k1.scalars));
      CHECK(inner.counts().scalar_mults == 1);
    }
    CHECK(outer.counts().scalar_mults == 0);
  }
  CHECK(active_op_counts() == nullptr);
}

TEST_CASE("keys must match the curve") {
  DeterministicRandom rng(20);
  const KeyPair toy_keys = keygen(toy_curve(), rng);
  CHECK_THROWS_AS(encrypt(secp256k1(), toy_keys.pub, as_bytes("x"), rng), UsageError);
  CHECK_THROWS_AS(derive_public_key(secp256k1(), toy_keys.priv), UsageError);
}

TEST_CASE("constant-time byte comparison") {
  CHECK(ct_bytes_equal(Bytes{1, 2, 3}, Bytes{1, 2, 3}));
  CHECK_FALSE(ct_bytes_equal(Bytes{1, 2, 3}, Bytes{1, 2, 4}));
  CHECK_FALSE(ct_bytes_equal(Bytes{1, 2}, Bytes{1, 2, 3}));
  CHECK(ct_bytes_equal(Bytes{}, Bytes{}));
}
