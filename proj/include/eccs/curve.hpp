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

#ifndef ECCS_CURVE_HPP_
#define ECCS_CURVE_HPP_

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "eccs/common.hpp"
#include "eccs/field.hpp"
#include "eccs/uint256.hpp"

namespace eccs {

/// A point of a short-Weierstrass curve in affine form, or the identity.
/// Coordinates are plain canonical integers; nothing here checks the curve
/// equation. Group operations validate their inputs.
class CurvePoint {
 public:
  CurvePoint() = default;  // identity
  static CurvePoint identity() { return {}; }
  static CurvePoint affine(const U256& x, const U256& y) { return CurvePoint(x, y); }

  bool is_identity() const { return identity_; }
  const U256& x() const { return x_; }
  const U256& y() const { return y_; }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.identity_ || b.identity_) return a.identity_ == b.identity_;
    return a.x_ == b.x_ && a.y_ == b.y_;
  }

 private:
  CurvePoint(const U256& x, const U256& y) : identity_(false), x_(x), y_(y) {}

  bool identity_ = true;
  U256 x_;
  U256 y_;
};

/// y^2 = x^3 + a x + b over F_p with a prime-order group (cofactor 1).
struct CurveParams {
  uint8_t id = 0;
  std::string name;
  std::shared_ptr<const PrimeField> field;    // p
  std::shared_ptr<const PrimeField> scalars;  // n
  U256 a;
  U256 b;
  CurvePoint g1;
  CurvePoint g2;

  const U256& p() const { return field->modulus(); }
  const U256& n() const { return scalars->modulus(); }
  /// Bytes of a compressed non-identity point.
  size_t point_width() const { return 1 + field->byte_width(); }
  size_t scalar_width() const { return scalars->byte_width(); }
};

inline constexpr uint8_t kSecp256k1Id = 0x01;
inline constexpr uint8_t kToyCurveId = 0x7F;

const CurveParams& secp256k1();
/// y^2 = x^3 + 7 over F_1051, n = 1093. Desk-scale substrate for the
/// brute-force oracles.
const CurveParams& toy_curve();
/// nullptr for unknown ids.
const CurveParams* find_curve(uint8_t id);
/// Throws UsageError for unknown names ("secp256k1", "toy").
const CurveParams& curve_by_name(std::string_view name);

bool is_on_curve(const CurveParams& params, const CurvePoint& point);
/// Throws ValidationError when the point is off the curve.
void require_on_curve(const CurveParams& params, const CurvePoint& point);

CurvePoint point_add(const CurveParams& params, const CurvePoint& lhs, const CurvePoint& rhs);
CurvePoint point_negate(const CurveParams& params, const CurvePoint& point);

/// k * point by a Montgomery ladder of fixed length bits(n); the sequence of
/// field operations does not depend on k. k must live modulo n.
CurvePoint scalar_mult(const CurveParams& params, const CurvePoint& point, const FieldElement& k);

/// n * point == identity, computed with the plain integer n.
bool has_order_n(const CurveParams& params, const CurvePoint& point);

/// 0x00 for the identity, else 0x02/0x03 (y even/odd) followed by
/// big-endian x of width field->byte_width().
Bytes compress(const CurveParams& params, const CurvePoint& point);
/// Throws ParseError on bad length, prefix, x >= p, or a non-residue RHS.
CurvePoint decompress(const CurveParams& params, ByteView data);

/// SHA3-256(data) read big-endian and reduced modulo the field.
FieldElement hash_to_field(const std::shared_ptr<const PrimeField>& field, ByteView data);

/// "ECCS-G2-v1" || curve id.
Bytes g2_domain_tag(uint8_t curve_id);

/// Try-and-increment: x = hash_to_field(tag || counter_be32) for counter =
/// 0, 1, ... until x^3 + ax + b is a residue; returns (x, even root). Only
/// params.field, a, b, n are read.
CurvePoint derive_g2(const CurveParams& params, ByteView domain_tag);

/// Validated constructor. Derives G2 when g2 is not supplied. Throws
/// UsageError on a singular curve, composite n, or bad generators.
CurveParams make_curve(uint8_t id, std::string name, const U256& p, const U256& a, const U256& b,
                       const U256& n, const CurvePoint& g1,
                       std::optional<CurvePoint> g2 = std::nullopt);

/// Smallest prime p >= 1009 with #E(F_p) prime for y^2 = x^3 + 7, G1 the
/// point with smallest x (even root), G2 derived. The registry toy curve is
/// the frozen result of this search.
CurveParams toy_curve_search();

}  // namespace eccs

#endif  // ECCS_CURVE_HPP_
