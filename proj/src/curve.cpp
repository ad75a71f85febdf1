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

#include "eccs/curve.hpp"

#include <utility>

#include "eccs/hash.hpp"
#include "eccs/op_counter.hpp"

namespace eccs {

namespace {

// Homogeneous projective point (X : Y : Z), coordinates in Montgomery form.
// The identity is (0 : 1 : 0).
struct Projective {
  U256 x, y, z;
};

struct CurveConstants {
  const PrimeField& f;
  U256 a;   // Montgomery
  U256 b3;  // 3b, Montgomery

  explicit CurveConstants(const CurveParams& params)
      : f(*params.field), a(f.to_mont(params.a)), b3(f.to_mont(params.b)) {
    b3 = f.add(f.add(b3, b3), b3);
  }
};

void ct_swap(uint64_t mask, Projective& p, Projective& q) {
  eccs::ct_swap(mask, p.x, q.x);
  eccs::ct_swap(mask, p.y, q.y);
  eccs::ct_swap(mask, p.z, q.z);
}

// Complete addition for prime-order short-Weierstrass curves with arbitrary
// a (Renes, Costello, Batina 2016, Algorithm 1). Handles doubling, inverse
// pairs and the identity with one straight-line formula.
Projective add_complete(const CurveConstants& c, const Projective& p, const Projective& q) {
  const PrimeField& f = c.f;
  U256 t0 = f.mul(p.x, q.x);
  U256 t1 = f.mul(p.y, q.y);
  U256 t2 = f.mul(p.z, q.z);
  U256 t3 = f.add(p.x, p.y);
  U256 t4 = f.add(q.x, q.y);
  t3 = f.mul(t3, t4);
  t4 = f.add(t0, t1);
  t3 = f.sub(t3, t4);
  t4 = f.add(p.x, p.z);
  U256 t5 = f.add(q.x, q.z);
  t4 = f.mul(t4, t5);
  t5 = f.add(t0, t2);
  t4 = f.sub(t4, t5);
  t5 = f.add(p.y, p.z);
  U256 x3 = f.add(q.y, q.z);
  t5 = f.mul(t5, x3);
  x3 = f.add(t1, t2);
  t5 = f.sub(t5, x3);
  U256 z3 = f.mul(c.a, t4);
  x3 = f.mul(c.b3, t2);
  z3 = f.add(x3, z3);
  x3 = f.sub(t1, z3);
  z3 = f.add(t1, z3);
  U256 y3 = f.mul(x3, z3);
  t1 = f.add(t0, t0);
  t1 = f.add(t1, t0);
  t2 = f.mul(c.a, t2);
  t4 = f.mul(c.b3, t4);
  t1 = f.add(t1, t2);
  t2 = f.sub(t0, t2);
  t2 = f.mul(c.a, t2);
  t4 = f.add(t4, t2);
  t0 = f.mul(t1, t4);
  y3 = f.add(y3, t0);
  t0 = f.mul(t5, t4);
  x3 = f.mul(x3, t3);
  x3 = f.sub(x3, t0);
  t0 = f.mul(t3, t1);
  z3 = f.mul(z3, t5);
  z3 = f.add(z3, t0);
  return {x3, y3, z3};
}

Projective to_projective(const PrimeField& f, const CurvePoint& p) {
  if (p.is_identity()) return {U256(), f.one(), U256()};
  return {f.to_mont(p.x()), f.to_mont(p.y()), f.one()};
}

CurvePoint to_affine(const PrimeField& f, const Projective& p) {
  if (p.z.is_zero()) return CurvePoint::identity();
  const U256 zinv = f.inv(p.z);
  return CurvePoint::affine(f.from_mont(f.mul(p.x, zinv)), f.from_mont(f.mul(p.y, zinv)));
}

// k * base over exactly `bits` ladder steps.
Projective ladder(const CurveConstants& c, const Projective& base, const U256& k, size_t bits) {
  Projective r0{U256(), c.f.one(), U256()};
  Projective r1 = base;
  for (size_t i = bits; i-- > 0;) {
    const uint64_t mask = mask_from_bit((k.limb[i / 64] >> (i % 64)) & 1U);
    ct_swap(mask, r0, r1);
    r1 = add_complete(c, r0, r1);
    r0 = add_complete(c, r0, r0);
    ct_swap(mask, r0, r1);
  }
  return r0;
}

U256 rhs(const PrimeField& f, const U256& a_m, const U256& b_m, const U256& x_m) {
  return f.add(f.mul(f.add(f.sqr(x_m), a_m), x_m), b_m);
}

}  // namespace

bool is_on_curve(const CurveParams& params, const CurvePoint& point) {
  if (point.is_identity()) return true;
  const PrimeField& f = *params.field;
  if (point.x() >= f.modulus() || point.y() >= f.modulus()) return false;
  const U256 x = f.to_mont(point.x());
  const U256 y = f.to_mont(point.y());
  return f.sqr(y) == rhs(f, f.to_mont(params.a), f.to_mont(params.b), x);
}

void require_on_curve(const CurveParams& params, const CurvePoint& point) {
  if (!is_on_curve(params, point)) throw ValidationError("point is not on the curve");
}

CurvePoint point_add(const CurveParams& params, const CurvePoint& lhs, const CurvePoint& rhs_point) {
  require_on_curve(params, lhs);
  require_on_curve(params, rhs_point);
  if (OpCounts* counts = active_op_counts()) ++counts->point_adds;
  const CurveConstants c(params);
  return to_affine(c.f, add_complete(c, to_projective(c.f, lhs), to_projective(c.f, rhs_point)));
}

CurvePoint point_negate(const CurveParams& params, const CurvePoint& point) {
  require_on_curve(params, point);
  if (OpCounts* counts = active_op_counts()) ++counts->negations;
  if (point.is_identity()) return point;
  const PrimeField& f = *params.field;
  return CurvePoint::affine(point.x(), f.from_mont(f.neg(f.to_mont(point.y()))));
}

CurvePoint scalar_mult(const CurveParams& params, const CurvePoint& point, const FieldElement& k) {
  if (!k.field().same_modulus(*params.scalars)) throw UsageError("scalar is not reduced modulo the group order");
  require_on_curve(params, point);
  if (OpCounts* counts = active_op_counts()) ++counts->scalar_mults;
  const CurveConstants c(params);
  return to_affine(c.f, ladder(c, to_projective(c.f, point), k.value(), params.scalars->bits()));
}

bool has_order_n(const CurveParams& params, const CurvePoint& point) {
  require_on_curve(params, point);
  const CurveConstants c(params);
  return ladder(c, to_projective(c.f, point), params.n(), params.scalars->bits()).z.is_zero();
}

Bytes compress(const CurveParams& params, const CurvePoint& point) {
  if (point.is_identity()) return {0x00};
  const size_t width = params.field->byte_width();
  Bytes out(1 + width);
  out[0] = point.y().is_odd() ? 0x03 : 0x02;
  point.x().to_be_bytes(std::span<uint8_t>(out).subspan(1));
  return out;
}

CurvePoint decompress(const CurveParams& params, ByteView data) {
  if (data.empty()) throw ParseError("point encoding is empty");
  if (data[0] == 0x00) {
    if (data.size() != 1) throw ParseError("identity encoding must be one byte");
    return CurvePoint::identity();
  }
  if (data[0] != 0x02 && data[0] != 0x03) throw ParseError("bad point prefix");
  const PrimeField& f = *params.field;
  if (data.size() != 1 + f.byte_width()) throw ParseError("bad point length");
  const U256 x = U256::from_be_bytes(data.subspan(1));
  if (x >= f.modulus()) throw ParseError("point x-coordinate not below p");
  const U256 x_m = f.to_mont(x);
  const auto root = f.sqrt(rhs(f, f.to_mont(params.a), f.to_mont(params.b), x_m));
  if (!root) throw ParseError("x-coordinate has no point on the curve");
  U256 y = f.from_mont(*root);
  const bool want_odd = data[0] == 0x03;
  if (y.is_odd() != want_odd) {
    if (y.is_zero()) throw ParseError("no point with odd y for this x");
    y = f.modulus() - y;
  }
  return CurvePoint::affine(x, y);
}

FieldElement hash_to_field(const std::shared_ptr<const PrimeField>& field, ByteView data) {
  const Digest256 digest = sha3_256(data);
  return FieldElement::reduced(field, U256::from_be_bytes(digest));
}

Bytes g2_domain_tag(uint8_t curve_id) {
  constexpr std::string_view kTag = "ECCS-G2-v1";
  Bytes tag(kTag.begin(), kTag.end());
  tag.push_back(curve_id);
  return tag;
}

CurvePoint derive_g2(const CurveParams& params, ByteView domain_tag) {
  const PrimeField& f = *params.field;
  const U256 a_m = f.to_mont(params.a);
  const U256 b_m = f.to_mont(params.b);
  Bytes input(domain_tag.begin(), domain_tag.end());
  input.resize(domain_tag.size() + 4);
  for (uint32_t counter = 0;; ++counter) {
    for (int i = 0; i < 4; ++i) {
      input[domain_tag.size() + i] = static_cast<uint8_t>(counter >> (24 - 8 * i));
    }
    const U256 x = hash_to_field(params.field, input).value();
    const auto root = f.sqrt(rhs(f, a_m, b_m, f.to_mont(x)));
    if (!root) continue;
    const CurvePoint candidate = CurvePoint::affine(x, f.from_mont(*root));
    if (has_order_n(params, candidate)) return candidate;
  }
}

CurveParams make_curve(uint8_t id, std::string name, const U256& p, const U256& a, const U256& b,
                       const U256& n, const CurvePoint& g1, std::optional<CurvePoint> g2) {
  CurveParams params;
  params.id = id;
  params.name = std::move(name);
  params.field = PrimeField::create(p);
  params.scalars = PrimeField::create(n);
  if (a >= p || b >= p) throw UsageError("curve coefficients must be reduced modulo p");
  params.a = a;
  params.b = b;

  const PrimeField& f = *params.field;
  const U256 a_m = f.to_mont(a);
  const U256 b_m = f.to_mont(b);
  const U256 four = f.to_mont(U256(4));
  const U256 twenty_seven = f.to_mont(U256(27));
  const U256 disc = f.add(f.mul(four, f.mul(f.sqr(a_m), a_m)), f.mul(twenty_seven, f.sqr(b_m)));
  if (disc.is_zero()) throw UsageError("singular curve: 4a^3 + 27b^2 = 0");

  auto check_generator = [&](const CurvePoint& g, const char* label) {
    if (g.is_identity() || !is_on_curve(params, g) || !has_order_n(params, g)) {
      throw UsageError(std::string("invalid generator ") + label);
    }
  };
  params.g1 = g1;
  check_generator(params.g1, "G1");
  params.g2 = g2 ? *g2 : derive_g2(params, g2_domain_tag(id));
  check_generator(params.g2, "G2");
  if (params.g1 == params.g2) throw UsageError("G1 and G2 coincide");
  return params;
}

const CurveParams& secp256k1() {
  static const CurveParams params = make_curve(
      kSecp256k1Id, "secp256k1",
      U256::from_hex("fffffffffffffffffffffffffffffffffffffffffffffffffffffffefffffc2f"), U256(0), U256(7),
      U256::from_hex("fffffffffffffffffffffffffffffffebaaedce6af48a03bbfd25e8cd0364141"),
      CurvePoint::affine(U256::from_hex("79be667ef9dcbbac55a06295ce870b07029bfcdb2dce28d959f2815b16f81798"),
                         U256::from_hex("483ada7726a3c4655da4fbfc0e1108a8fd17b448a68554199c47d08ffb10d4b8")),
      CurvePoint::affine(U256::from_hex("9b87df2b2083c5095c3bdaaeb321151e2be89c5b772dba9d711e2e86e5ad6076"),
                         U256::from_hex("08554bf431efe0801349ceaf8498a33df168280a7d7eede3736bcdd909684e22")));
  return params;
}

const CurveParams& toy_curve() {
  static const CurveParams params = make_curve(kToyCurveId, "toy", U256(1051), U256(0), U256(7), U256(1093),
                                               CurvePoint::affine(U256(3), U256(666)),
                                               CurvePoint::affine(U256(1033), U256(592)));
  return params;
}

const CurveParams* find_curve(uint8_t id) {
  switch (id) {
    case kSecp256k1Id:
      return &secp256k1();
    case kToyCurveId:
      return &toy_curve();
    default:
      return nullptr;
  }
}

const CurveParams& curve_by_name(std::string_view name) {
  if (name == "secp256k1") return secp256k1();
  if (name == "toy") return toy_curve();
  throw UsageError("unknown curve: " + std::string(name));
}

CurveParams toy_curve_search() {
  for (uint64_t p = 1009;; ++p) {
    if (!is_probable_prime(U256(p))) continue;
    const auto field = PrimeField::create(U256(p));
    const U256 seven = field->to_mont(U256(7));
    uint64_t count = 1;  // identity
    std::optional<CurvePoint> first;
    for (uint64_t x = 0; x < p; ++x) {
      const U256 x_m = field->to_mont(U256(x));
      const U256 r = field->add(field->mul(field->sqr(x_m), x_m), seven);
      if (r.is_zero()) {
        ++count;
      } else if (field->is_qr(r)) {
        count += 2;
      } else {
        continue;
      }
      if (!first) first = CurvePoint::affine(U256(x), field->from_mont(*field->sqrt(r)));
    }
    if (!is_probable_prime(U256(count))) continue;
    return make_curve(kToyCurveId, "toy", U256(p), U256(0), U256(7), U256(count), *first);
  }
}

}  // namespace eccs
