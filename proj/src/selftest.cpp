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

#include "eccs/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

#include "eccs/ecs.hpp"
#include "eccs/hash.hpp"
#include "eccs/oracle.hpp"
#include "eccs/wire.hpp"

namespace eccs {

namespace {

struct KnownAnswer {
  Bytes input;
  const char* digest_hex;
};

std::string hex(ByteView bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  for (uint8_t b : bytes) {
    s.push_back(kDigits[b >> 4]);
    s.push_back(kDigits[b & 0xF]);
  }
  return s;
}

std::string check_sha3() {
  const auto abc = as_bytes("abc");
  const auto long_msg = as_bytes("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq");
  const KnownAnswer vectors[] = {
      {{}, "a7ffc6f8bf1ed76651c14756a061d662f580ff4de43b49fa82d80a4b80f8434a"},
      {Bytes(abc.begin(), abc.end()), "3a985da74fe225b2045c172d6bd390bd855f086e3e9d525b46bfe24511431532"},
      {Bytes(long_msg.begin(), long_msg.end()), "41c0dba2a9d6240849100376a8235e2c82e1b9998a999e21db32dd97496d3376"},
      {Bytes(200, 0xa3), "79f38adec5c20307a98ef76e8324afbfd46cfd81b22e3973c65fa1bd9de31787"},
  };
  for (const KnownAnswer& v : vectors) {
    if (hex(sha3_256(v.input)) != v.digest_hex) return "digest mismatch for a " + std::to_string(v.input.size()) + "-byte input";
  }
  return {};
}

std::string check_params(const CurveParams& toy, const oracle::GroupTable& table) {
  for (const CurvePoint* g : {&toy.g1, &toy.g2}) {
    if (g->is_identity() || !is_on_curve(toy, *g)) return "generator not a curve point";
    if (!has_order_n(toy, *g)) return "generator order is not n";
  }
  if (U256(table.size()) != toy.n()) return "enumerated point count differs from n";
  // Hasse: (n - p - 1)^2 <= 4p
  const auto n = static_cast<int64_t>(table.size());
  const auto p = static_cast<int64_t>(table.p());
  if ((n - p - 1) * (n - p - 1) > 4 * p) return "Hasse bound violated";
  return {};
}

std::string check_group_law(const CurveParams& toy, const oracle::GroupTable& table) {
  const auto n = static_cast<uint32_t>(table.size());
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t j = 0; j < n; ++j) {
      if (!(point_add(toy, table.point(i), table.point(j)) == table.point(table.add(i, j)))) {
        return "point_add disagrees with the table at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
      }
    }
  }
  return {};
}

// For every nonce r: build the ciphertext by the encryption equations and
// require decrypt_chunk to accept it and return the message point.
std::string check_correctness(const CurveParams& toy, const oracle::GroupTable& table) {
  DeterministicRandom rng(0xC0FFEE);
  const KeyPair keys = keygen(toy, rng);
  const ChunkHeader header = chunk_header(0, 1);
  const uint64_t n = table.size();
  for (uint64_t r_value = 1; r_value < n; ++r_value) {
    const FieldElement r(toy.scalars, r_value);
    const CurvePoint m = table.point(static_cast<uint32_t>(1 + r_value * 7 % (n - 1)));
    CiphertextChunk chunk;
    chunk.u1 = scalar_mult(toy, toy.g1, r);
    chunk.u2 = scalar_mult(toy, toy.g2, r);
    chunk.e = point_add(toy, scalar_mult(toy, keys.pub.h, r), m);
    const FieldElement alpha = hash_to_scalar(toy, header, chunk.u1, chunk.u2, chunk.e);
    chunk.v = point_add(toy, scalar_mult(toy, keys.pub.c, r), scalar_mult(toy, keys.pub.d, r * alpha));
    try {
      if (!(decrypt_chunk(toy, keys.priv, chunk, header) == m)) return "wrong plaintext for r = " + std::to_string(r_value);
    } catch (const InvalidCiphertext&) {
      return "honest ciphertext rejected for r = " + std::to_string(r_value);
    }
  }
  return {};
}

std::string check_tamper(const CurveParams& toy, const oracle::GroupTable& table) {
  DeterministicRandom rng(0x7A3F);
  const KeyPair keys = keygen(toy, rng);
  for (uint32_t trial = 0; trial < 5; ++trial) {
    Ciphertext ct;
    ct.curve_id = toy.id;
    const ChunkHeader header = chunk_header(0, 1);
    ct.chunks.push_back(encrypt_chunk(toy, keys.pub, table.point(1 + trial * 97), header, rng));
    const Bytes wire_bytes = wire::serialize_ciphertext(ct);
    for (size_t bit = 0; bit < wire_bytes.size() * 8; ++bit) {
      Bytes tampered = wire_bytes;
      tampered[bit / 8] ^= static_cast<uint8_t>(1U << (bit % 8));
      try {
        const Ciphertext parsed = wire::parse_ciphertext(tampered);
        if (parsed.chunks.size() != 1) continue;  // cannot decrypt under header(0, 1)
        decrypt_chunk(toy, keys.priv, parsed.chunks[0], header);
        return "bit flip " + std::to_string(bit) + " of ciphertext " + std::to_string(trial) + " was accepted";
      } catch (const ParseError&) {
      } catch (const InvalidCiphertext&) {
      }
    }
  }
  return {};
}

}  // namespace

bool SelftestReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const SelftestCheck& c) { return c.passed; });
}

SelftestReport run_selftest(const CurveParams& toy, std::ostream* log) {
  SelftestReport report;
  auto run = [&](const std::string& name, const std::function<std::string()>& body) {
    const auto start = std::chrono::steady_clock::now();
    SelftestCheck check{name, false, {}, 0};
    try {
      check.detail = body();
      check.passed = check.detail.empty();
    } catch (const std::exception& e) {
      check.detail = std::string("exception: ") + e.what();
    }
    check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (log) {
      *log << (check.passed ? "[PASS] " : "[FAIL] ") << check.name;
      if (!check.passed) *log << ": " << check.detail;
      *log << " (" << check.seconds << " s)\n";
    }
    report.checks.push_back(std::move(check));
  };

  run("sha3-256 known answers", check_sha3);

  std::optional<oracle::GroupTable> table;
  run("toy curve enumeration", [&] {
    table = oracle::GroupTable::enumerate(toy);
    return std::string();
  });
  if (!table) return report;
  run("toy curve parameters", [&] { return check_params(toy, *table); });
  run("group law vs oracle table", [&] { return check_group_law(toy, *table); });
  run("correctness identity for every nonce", [&] { return check_correctness(toy, *table); });
  run("single-bit tamper sweep", [&] { return check_tamper(toy, *table); });
  return report;
}

}  // namespace eccs
