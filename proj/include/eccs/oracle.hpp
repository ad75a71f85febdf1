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

#ifndef ECCS_ORACLE_HPP_
#define ECCS_ORACLE_HPP_

#include <optional>
#include <vector>

#include "eccs/curve.hpp"
#include "eccs/ecs.hpp"

/// Brute-force verification machinery for desk-scale curves. Shares no
/// arithmetic with the curve module: coordinates are plain 64-bit integers
/// and the group law is schoolbook chord-and-tangent.
namespace eccs::oracle {

/// Every point of the curve with its full addition table.
///
/// Order: identity first, then ascending x, even y before odd y.
class GroupTable {
 public:
  static constexpr uint32_t kIdentity = 0;

  /// Refuses (UsageError) when p >= 2^20 or the group has more than 8192
  /// points (the table is quadratic in the group size).
  static GroupTable enumerate(const CurveParams& params);

  size_t size() const { return points_.size(); }
  uint64_t p() const { return p_; }
  uint8_t curve_id() const { return curve_id_; }
  const std::vector<CurvePoint>& points() const { return points_; }
  const CurvePoint& point(uint32_t i) const { return points_.at(i); }
  std::optional<uint32_t> index_of(const CurvePoint& point) const;

  uint32_t add(uint32_t i, uint32_t j) const { return sum_[static_cast<size_t>(i) * points_.size() + j]; }
  uint32_t negate(uint32_t i) const { return neg_[i]; }
  /// k * point(i) by double-and-add over table lookups.
  uint32_t multiply(uint32_t i, uint64_t k) const;

 private:
  uint64_t p_ = 0;
  uint8_t curve_id_ = 0;
  std::vector<CurvePoint> points_;
  std::vector<uint32_t> sum_;
  std::vector<uint32_t> neg_;
  std::vector<uint32_t> by_x_parity_;  // 2x + (y & 1) -> index + 1, 0 when absent
};

/// Straight-line affine addition with 64-bit arithmetic modulo p.
CurvePoint schoolbook_add(uint64_t p, uint64_t a, const CurvePoint& lhs, const CurvePoint& rhs);

/// Smallest k >= 0 with k * base == target, by linear scan; nullopt when
/// target is not a multiple of base.
std::optional<uint64_t> brute_dlog(const GroupTable& table, const CurvePoint& base, const CurvePoint& target);

struct DecryptTrace {
  uint64_t r = 0;  // dlog of U1
  uint64_t z = 0;  // dlog of H
  uint64_t alpha = 0;
};

/// Decrypts with no private key: z and r come from brute-force discrete
/// logs, alpha is rehashed from its own encodings, and U2, V are checked
/// against r G2 and r C + r alpha D. nullopt means "reject".
std::optional<CurvePoint> independent_decrypt(const GroupTable& table, const CurveParams& params,
                                              const PublicKey& pub, const CiphertextChunk& chunk, ByteView header,
                                              DecryptTrace* trace = nullptr);

}  // namespace eccs::oracle

#endif  // ECCS_ORACLE_HPP_
