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

#include "eccs/field.hpp"

#include <random>
#include <utility>

namespace eccs {

namespace {

uint64_t mod_u64(const U256& a, uint64_t m) {
  u128 r = 0;
  for (int i = 3; i >= 0; --i) r = ((r << 64) | a.limb[i]) % m;
  return static_cast<uint64_t>(r);
}

bool has_small_factor(const U256& n) {
  static constexpr uint64_t kSmallPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                              41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83,
                                              89, 97, 101, 103, 107, 109, 113, 127};
  for (uint64_t p : kSmallPrimes) {
    if (n == U256(p)) return false;
    if (mod_u64(n, p) == 0) return true;
  }
  return false;
}

}  // namespace

PrimeField::PrimeField(const U256& modulus) : modulus_(modulus), bits_(modulus.bit_length()) {
  // Newton iteration for modulus^-1 mod 2^64; each step doubles the correct bits.
  uint64_t inv = 1;
  for (int i = 0; i < 6; ++i) inv *= 2 - modulus.limb[0] * inv;
  n0inv_ = 0 - inv;

  // 2^512 mod m by 512 modular doublings of 1.
  U256 x(1);
  for (int i = 0; i < 512; ++i) {
    U256 doubled;
    const uint64_t carry = add_carry(doubled, x, x);
    U256 reduced;
    const uint64_t borrow = sub_borrow(reduced, doubled, modulus_);
    x = ct_select(mask_from_bit(carry | (borrow ^ 1U)), reduced, doubled);
  }
  r2_ = x;
  one_ = to_mont(U256(1));
}

std::shared_ptr<const PrimeField> PrimeField::create(const U256& modulus) {
  if (!modulus.is_odd() || modulus <= U256(3)) {
    throw UsageError("field modulus must be an odd prime > 3");
  }
  if (!is_probable_prime(modulus, 64)) throw UsageError("field modulus is not prime");
  return create_trusted(modulus);
}

std::shared_ptr<const PrimeField> PrimeField::create_trusted(const U256& modulus) {
  if (!modulus.is_odd() || modulus <= U256(3)) {
    throw UsageError("field modulus must be an odd prime > 3");
  }
  auto field = std::shared_ptr<PrimeField>(new PrimeField(modulus));

  field->odd_part_ = modulus - U256(1);
  while (!field->odd_part_.is_odd()) {
    field->odd_part_ = shr1(field->odd_part_);
    ++field->two_adicity_;
  }
  if (field->two_adicity_ > 1) {
    const U256 euler = shr1(modulus - U256(1));
    const U256 minus_one = field->neg(field->one_);
    for (uint64_t z = 2;; ++z) {
      const U256 candidate = field->to_mont(U256(z));
      if (field->pow(candidate, euler) == minus_one) {
        field->nonresidue_ = candidate;
        break;
      }
    }
  }
  return field;
}

namespace {

// acc = acc + x * y + carry; returns the low word and leaves the high word in carry.
inline uint64_t mac(uint64_t acc, uint64_t x, uint64_t y, uint64_t& carry) {
  const u128 t = static_cast<u128>(x) * y + acc + carry;
  carry = static_cast<uint64_t>(t >> 64);
  return static_cast<uint64_t>(t);
}

inline uint64_t adc(uint64_t x, uint64_t y, uint64_t& carry) {
  const u128 t = static_cast<u128>(x) + y + carry;
  carry = static_cast<uint64_t>(t >> 64);
  return static_cast<uint64_t>(t);
}

}  // namespace

U256 PrimeField::mul(const U256& a, const U256& b) const {
  // CIOS Montgomery multiplication, fully unrolled; t4 holds the 257th bit.
  const uint64_t* m = modulus_.limb.data();
  uint64_t t0 = 0, t1 = 0, t2 = 0, t3 = 0, t4 = 0;
#pragma GCC unroll 4
  for (size_t i = 0; i < 4; ++i) {
    const uint64_t bi = b.limb[i];
    uint64_t c = 0;
    t0 = mac(t0, a.limb[0], bi, c);
    t1 = mac(t1, a.limb[1], bi, c);
    t2 = mac(t2, a.limb[2], bi, c);
    t3 = mac(t3, a.limb[3], bi, c);
    uint64_t hi = 0;
    t4 = adc(t4, c, hi);

    const uint64_t q = t0 * n0inv_;
    c = 0;
    mac(t0, q, m[0], c);
    t0 = mac(t1, q, m[1], c);
    t1 = mac(t2, q, m[2], c);
    t2 = mac(t3, q, m[3], c);
    uint64_t c2 = 0;
    t3 = adc(t4, c, c2);
    t4 = hi + c2;
  }
  const U256 r(t0, t1, t2, t3);
  U256 reduced;
  const uint64_t borrow = sub_borrow(reduced, r, modulus_);
  return ct_select(mask_from_bit(t4 | (borrow ^ 1U)), reduced, r);
}

U256 PrimeField::to_mont(const U256& a) const { return mul(a, r2_); }

U256 PrimeField::from_mont(const U256& a) const { return mul(a, U256(1)); }

U256 PrimeField::add(const U256& a, const U256& b) const {
  U256 s;
  const uint64_t carry = add_carry(s, a, b);
  U256 reduced;
  const uint64_t borrow = sub_borrow(reduced, s, modulus_);
  return ct_select(mask_from_bit(carry | (borrow ^ 1U)), reduced, s);
}

U256 PrimeField::sub(const U256& a, const U256& b) const {
  U256 d;
  const uint64_t borrow = sub_borrow(d, a, b);
  const U256 corrected = d + modulus_;
  return ct_select(mask_from_bit(borrow), corrected, d);
}

U256 PrimeField::neg(const U256& a) const { return sub(U256(), a); }

U256 PrimeField::pow(const U256& a, const U256& exponent) const {
  U256 result = one_;
  for (size_t i = exponent.bit_length(); i-- > 0;) {
    result = sqr(result);
    if (exponent.bit(i)) result = mul(result, a);
  }
  return result;
}

U256 PrimeField::inv(const U256& a) const { return pow(a, modulus_ - U256(2)); }

bool PrimeField::is_qr(const U256& a) const {
  if (a.is_zero()) return true;
  return pow(a, shr1(modulus_ - U256(1))) == one_;
}

std::optional<U256> PrimeField::sqrt(const U256& a) const {
  if (a.is_zero()) return U256();
  if (!is_qr(a)) return std::nullopt;

  U256 root;
  if (two_adicity_ == 1) {
    // modulus = 3 mod 4: a^((p+1)/4).
    root = pow(a, shr1(shr1(modulus_)) + U256(1));
  } else {
    size_t m = two_adicity_;
    U256 c = pow(nonresidue_, odd_part_);
    U256 t = pow(a, odd_part_);
    root = pow(a, shr1(odd_part_) + U256(1));
    while (t != one_) {
      size_t i = 0;
      for (U256 probe = t; probe != one_; probe = sqr(probe)) ++i;
      U256 b = c;
      for (size_t j = 0; j + i + 1 < m; ++j) b = sqr(b);
      m = i;
      c = sqr(b);
      t = mul(t, c);
      root = mul(root, b);
    }
  }
  if (from_mont(root).is_odd()) root = neg(root);
  return root;
}

bool is_probable_prime(const U256& candidate, int rounds) {
  if (candidate < U256(2)) return false;
  if (candidate == U256(2) || candidate == U256(3)) return true;
  if (!candidate.is_odd() || has_small_factor(candidate)) return false;

  const PrimeField ctx(candidate);
  const U256 minus_one_plain = candidate - U256(1);
  const U256 minus_one = ctx.neg(ctx.one());
  U256 d = minus_one_plain;
  size_t s = 0;
  while (!d.is_odd()) {
    d = shr1(d);
    ++s;
  }

  std::mt19937_64 gen(0x5eed'ecc5'0000'0001ULL);
  const size_t bits = candidate.bit_length();
  const U256 upper = candidate - U256(2);
  for (int round = 0; round < rounds; ++round) {
    U256 base;
    do {
      for (auto& l : base.limb) l = gen();
      for (size_t i = bits; i < 256; ++i) base.limb[i / 64] &= ~(uint64_t{1} << (i % 64));
    } while (base < U256(2) || base > upper);

    U256 x = ctx.pow(ctx.to_mont(base), d);
    if (x == ctx.one() || x == minus_one) continue;
    bool witness = true;
    for (size_t r = 1; r < s; ++r) {
      x = ctx.sqr(x);
      if (x == minus_one) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(std::shared_ptr<const PrimeField> field, const U256& value)
    : field_(std::move(field)), value_(value) {
  if (!field_) throw UsageError("FieldElement: null field");
  if (value_ >= field_->modulus()) throw UsageError("FieldElement: value not below modulus");
}

FieldElement FieldElement::reduced(std::shared_ptr<const PrimeField> field, const U256& value) {
  const U256 r = field->reduce(value);
  return {std::move(field), r};
}

FieldElement FieldElement::from_bytes(std::shared_ptr<const PrimeField> field, ByteView bytes) {
  if (bytes.size() != field->byte_width()) throw ParseError("field element: wrong width");
  const U256 v = U256::from_be_bytes(bytes);
  if (v >= field->modulus()) throw ParseError("field element: non-canonical value");
  return {std::move(field), v};
}

namespace {

const PrimeField& shared_field(const FieldElement& a, const FieldElement& b) {
  if (!a.field().same_modulus(b.field())) throw UsageError("field elements have different moduli");
  return a.field();
}

template <typename Op>
FieldElement apply(const FieldElement& a, const FieldElement& b, Op op) {
  const PrimeField& f = shared_field(a, b);
  return {a.field_ptr(), f.from_mont(op(f, f.to_mont(a.value()), f.to_mont(b.value())))};
}

}  // namespace

FieldElement fe_add(const FieldElement& a, const FieldElement& b) {
  return apply(a, b, [](const PrimeField& f, const U256& x, const U256& y) { return f.add(x, y); });
}

FieldElement fe_sub(const FieldElement& a, const FieldElement& b) {
  return apply(a, b, [](const PrimeField& f, const U256& x, const U256& y) { return f.sub(x, y); });
}

FieldElement fe_mul(const FieldElement& a, const FieldElement& b) {
  return apply(a, b, [](const PrimeField& f, const U256& x, const U256& y) { return f.mul(x, y); });
}

FieldElement fe_neg(const FieldElement& a) {
  const PrimeField& f = a.field();
  return {a.field_ptr(), f.from_mont(f.neg(f.to_mont(a.value())))};
}

FieldElement fe_inv(const FieldElement& a) {
  if (a.is_zero()) throw ArithmeticError("zero has no inverse");
  const PrimeField& f = a.field();
  return {a.field_ptr(), f.from_mont(f.inv(f.to_mont(a.value())))};
}

FieldElement fe_pow(const FieldElement& a, const U256& exponent) {
  const PrimeField& f = a.field();
  return {a.field_ptr(), f.from_mont(f.pow(f.to_mont(a.value()), exponent))};
}

std::optional<FieldElement> fe_sqrt(const FieldElement& a) {
  const PrimeField& f = a.field();
  auto root = f.sqrt(f.to_mont(a.value()));
  if (!root) return std::nullopt;
  return FieldElement(a.field_ptr(), f.from_mont(*root));
}

bool fe_is_qr(const FieldElement& a) {
  const PrimeField& f = a.field();
  return f.is_qr(f.to_mont(a.value()));
}

}  // namespace eccs
