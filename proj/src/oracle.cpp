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

#include "eccs/oracle.hpp"

#include <string_view>

#include "eccs/hash.hpp"

namespace eccs::oracle {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) { return static_cast<uint64_t>(u128{a} * b % m); }

uint64_t powmod(uint64_t base, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

uint64_t invmod(uint64_t a, uint64_t m) {
  // Extended Euclid on signed integers.
  int64_t t = 0, new_t = 1;
  int64_t r = static_cast<int64_t>(m), new_r = static_cast<int64_t>(a % m);
  while (new_r != 0) {
    const int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return static_cast<uint64_t>(t < 0 ? t + static_cast<int64_t>(m) : t);
}

uint64_t small(const U256& v) {
  if (v.limb[1] | v.limb[2] | v.limb[3]) throw UsageError("oracle: value exceeds desk scale");
  return v.limb[0];
}

Bytes encode(const GroupTable& table, uint32_t index) {
  const CurvePoint& pt = table.point(index);
  if (pt.is_identity()) return {0x00};
  size_t width = 0;
  for (uint64_t p = table.p() - 1; p; p >>= 8) ++width;
  Bytes out{static_cast<uint8_t>(pt.y().low() & 1 ? 0x03 : 0x02)};
  for (size_t i = width; i-- > 0;) out.push_back(static_cast<uint8_t>(pt.x().low() >> (8 * i)));
  return out;
}

}  // namespace

CurvePoint schoolbook_add(uint64_t p, uint64_t a, const CurvePoint& lhs, const CurvePoint& rhs) {
  if (lhs.is_identity()) return rhs;
  if (rhs.is_identity()) return lhs;
  const uint64_t x1 = small(lhs.x()), y1 = small(lhs.y());
  const uint64_t x2 = small(rhs.x()), y2 = small(rhs.y());
  if (x1 == x2 && (y1 + y2) % p == 0) return CurvePoint::identity();
  uint64_t lambda;
  if (x1 == x2) {
    lambda = mulmod((3 * mulmod(x1, x1, p) + a) % p, invmod(2 * y1 % p, p), p);
  } else {
    lambda = mulmod((y2 + p - y1) % p, invmod((x2 + p - x1) % p, p), p);
  }
  const uint64_t x3 = (mulmod(lambda, lambda, p) + 2 * p - x1 - x2) % p;
  const uint64_t y3 = (mulmod(lambda, (x1 + p - x3) % p, p) + p - y1) % p;
  return CurvePoint::affine(U256(x3), U256(y3));
}

GroupTable GroupTable::enumerate(const CurveParams& params) {
  if (params.p().bit_length() > 20) throw UsageError("oracle: curve is not desk scale (p >= 2^20)");
  GroupTable t;
  t.p_ = params.p().low();
  t.curve_id_ = params.id;
  const uint64_t p = t.p_;
  const uint64_t a = small(params.a);
  const uint64_t b = small(params.b);

  t.points_.push_back(CurvePoint::identity());
  for (uint64_t x = 0; x < p; ++x) {
    const uint64_t rhs = (mulmod(mulmod(x, x, p), x, p) + mulmod(a, x, p) + b) % p;
    if (rhs == 0) {
      t.points_.push_back(CurvePoint::affine(U256(x), U256(0)));
      continue;
    }
    if (powmod(rhs, (p - 1) / 2, p) != 1) continue;
    uint64_t y = 0;
    while (mulmod(y, y, p) != rhs) ++y;
    const uint64_t even = y % 2 == 0 ? y : p - y;
    t.points_.push_back(CurvePoint::affine(U256(x), U256(even)));
    t.points_.push_back(CurvePoint::affine(U256(x), U256(p - even)));
  }
  const size_t n = t.points_.size();
  if (n > 8192) throw UsageError("oracle: group too large for a full addition table");

  t.by_x_parity_.assign(2 * p, 0);
  for (uint32_t i = 1; i < n; ++i) {
    const CurvePoint& pt = t.points_[i];
    t.by_x_parity_[2 * pt.x().low() + (pt.y().low() & 1)] = i + 1;
  }

  t.sum_.assign(n * n, 0);
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t j = i; j < n; ++j) {
      const auto k = t.index_of(schoolbook_add(p, a, t.points_[i], t.points_[j]));
      if (!k) throw Error("oracle: addition left the enumerated point set");
      t.sum_[static_cast<size_t>(i) * n + j] = *k;
      t.sum_[static_cast<size_t>(j) * n + i] = *k;
    }
  }
  t.neg_.resize(n);
  for (uint32_t i = 0; i < n; ++i) {
    const CurvePoint& pt = t.points_[i];
    t.neg_[i] = pt.is_identity() ? kIdentity
                                 : *t.index_of(CurvePoint::affine(pt.x(), U256((p - pt.y().low()) % p)));
  }
  return t;
}

std::optional<uint32_t> GroupTable::index_of(const CurvePoint& point) const {
  if (point.is_identity()) return kIdentity;
  const U256& x = point.x();
  const U256& y = point.y();
  if (x >= U256(p_) || y >= U256(p_)) return std::nullopt;
  const uint32_t slot = by_x_parity_[2 * x.low() + (y.low() & 1)];
  if (slot == 0 || points_[slot - 1].y() != y) return std::nullopt;
  return slot - 1;
}

uint32_t GroupTable::multiply(uint32_t i, uint64_t k) const {
  uint32_t acc = kIdentity;
  uint32_t addend = i;
  for (; k; k >>= 1) {
    if (k & 1) acc = add(acc, addend);
    addend = add(addend, addend);
  }
  return acc;
}

std::optional<uint64_t> brute_dlog(const GroupTable& table, const CurvePoint& base, const CurvePoint& target) {
  const auto b = table.index_of(base);
  const auto t = table.index_of(target);
  if (!b || !t) return std::nullopt;
  uint32_t acc = GroupTable::kIdentity;
  for (uint64_t k = 0; k < table.size(); ++k) {
    if (acc == *t) return k;
    acc = table.add(acc, *b);
  }
  return std::nullopt;
}

std::optional<CurvePoint> independent_decrypt(const GroupTable& table, const CurveParams& params,
                                              const PublicKey& pub, const CiphertextChunk& chunk, ByteView header,
                                              DecryptTrace* trace) {
  if (table.curve_id() != params.id || pub.curve_id != params.id) throw UsageError("oracle: curve mismatch");
  const auto g1 = table.index_of(params.g1);
  const auto g2 = table.index_of(params.g2);
  const auto c = table.index_of(pub.c);
  const auto d = table.index_of(pub.d);
  const auto h = table.index_of(pub.h);
  const auto u1 = table.index_of(chunk.u1);
  const auto u2 = table.index_of(chunk.u2);
  const auto e = table.index_of(chunk.e);
  const auto v = table.index_of(chunk.v);
  if (!g1 || !g2 || !c || !d || !h) throw UsageError("oracle: parameters not on the enumerated curve");
  if (!u1 || !u2 || !e || !v) return std::nullopt;

  const uint64_t n = table.size();
  const auto z = brute_dlog(table, params.g1, pub.h);
  const auto r = brute_dlog(table, params.g1, chunk.u1);
  if (!z || !r) return std::nullopt;

  constexpr std::string_view kAlphaTag = "ECCS-v1-alpha";
  Bytes input(kAlphaTag.begin(), kAlphaTag.end());
  input.push_back(params.id);
  input.insert(input.end(), header.begin(), header.end());
  for (uint32_t idx : {*u1, *u2, *e}) {
    const Bytes enc = encode(table, idx);
    input.insert(input.end(), enc.begin(), enc.end());
  }
  uint64_t alpha = 0;
  for (uint8_t byte : sha3_256(input)) alpha = (alpha * 256 + byte) % n;

  if (trace) *trace = {*r, *z, alpha};

  if (table.multiply(*g2, *r) != *u2) return std::nullopt;
  const uint32_t expected_v = table.add(table.multiply(*c, *r), table.multiply(*d, *r * alpha % n));
  if (expected_v != *v) return std::nullopt;
  return table.point(table.add(*e, table.negate(table.multiply(*u1, *z))));
}

}  // namespace eccs::oracle
