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

#ifndef ECCS_FIELD_HPP_
#define ECCS_FIELD_HPP_

#include <memory>
#include <optional>
#include <utility>

#include "eccs/common.hpp"
#include "eccs/uint256.hpp"

namespace eccs {

/// Probabilistic primality test, deterministic bases drawn from a fixed seed.
bool is_probable_prime(const U256& candidate, int rounds = 64);

/// Arithmetic context for integers modulo an odd prime below 2^256.
///
/// The raw operations (add, mul, inv, ...) work on residues held in
/// Montgomery form; use to_mont/from_mont at the boundary. They run a fixed
/// limb-operation sequence for a given modulus. pow() branches on the bits of
/// its exponent, which callers only ever pass public exponents for.
///
/// The same context type serves the curve field F_p and the scalar ring
/// modulo the group order n.
class PrimeField {
 public:
  /// Validates primality with 64 Miller-Rabin rounds. Throws UsageError for
  /// even, tiny, or composite moduli.
  static std::shared_ptr<const PrimeField> create(const U256& modulus);

  /// Skips the primality test. Used only for registry constants.
  static std::shared_ptr<const PrimeField> create_trusted(const U256& modulus);

  const U256& modulus() const { return modulus_; }
  size_t bits() const { return bits_; }
  /// ceil(bits / 8): width of the big-endian element encoding.
  size_t byte_width() const { return (bits_ + 7) / 8; }

  /// Reduces any 256-bit value; output in Montgomery form.
  U256 to_mont(const U256& a) const;
  U256 from_mont(const U256& a) const;
  /// Plain a mod modulus.
  U256 reduce(const U256& a) const { return from_mont(to_mont(a)); }

  const U256& one() const { return one_; }
  U256 add(const U256& a, const U256& b) const;
  U256 sub(const U256& a, const U256& b) const;
  U256 neg(const U256& a) const;
  U256 mul(const U256& a, const U256& b) const;
  U256 sqr(const U256& a) const { return mul(a, a); }
  /// exponent is a plain (non-Montgomery) integer.
  U256 pow(const U256& a, const U256& exponent) const;
  /// Fermat inversion a^(p-2); maps 0 to 0.
  U256 inv(const U256& a) const;
  bool is_qr(const U256& a) const;
  /// Root whose plain representative is even, or nullopt for non-residues.
  std::optional<U256> sqrt(const U256& a) const;

  bool same_modulus(const PrimeField& other) const { return modulus_ == other.modulus_; }

 private:
  friend bool is_probable_prime(const U256& candidate, int rounds);
  explicit PrimeField(const U256& modulus);

  U256 modulus_;
  size_t bits_ = 0;
  uint64_t n0inv_ = 0;  // -modulus^-1 mod 2^64
  U256 r2_;             // 2^512 mod modulus
  U256 one_;            // 2^256 mod modulus
  // Tonelli-Shanks: modulus - 1 = odd_part * 2^two_adicity.
  U256 odd_part_;
  size_t two_adicity_ = 0;
  U256 nonresidue_;  // Montgomery form
};

/// An integer modulo a prime, always canonical (value < modulus).
class FieldElement {
 public:
  /// Throws UsageError when value >= modulus.
  FieldElement(std::shared_ptr<const PrimeField> field, const U256& value);
  FieldElement(std::shared_ptr<const PrimeField> field, uint64_t value)
      : FieldElement(std::move(field), U256(value)) {}

  /// Reduces value modulo the field instead of rejecting it.
  static FieldElement reduced(std::shared_ptr<const PrimeField> field, const U256& value);
  static FieldElement zero(std::shared_ptr<const PrimeField> field) { return {std::move(field), U256()}; }
  static FieldElement one(std::shared_ptr<const PrimeField> field) { return {std::move(field), U256(1)}; }

  /// Big-endian, exactly byte_width() bytes. Throws ParseError on wrong
  /// width or a non-canonical value.
  static FieldElement from_bytes(std::shared_ptr<const PrimeField> field, ByteView bytes);
  Bytes to_bytes() const { return value_.to_be_bytes(field_->byte_width()); }

  const U256& value() const { return value_; }
  const PrimeField& field() const { return *field_; }
  const std::shared_ptr<const PrimeField>& field_ptr() const { return field_; }
  bool is_zero() const { return value_.is_zero(); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_->same_modulus(*b.field_) && a.value_ == b.value_;
  }

 private:
  std::shared_ptr<const PrimeField> field_;
  U256 value_;
};

FieldElement fe_add(const FieldElement& a, const FieldElement& b);
FieldElement fe_sub(const FieldElement& a, const FieldElement& b);
FieldElement fe_neg(const FieldElement& a);
FieldElement fe_mul(const FieldElement& a, const FieldElement& b);
/// Throws ArithmeticError for zero.
FieldElement fe_inv(const FieldElement& a);
FieldElement fe_pow(const FieldElement& a, const U256& exponent);
std::optional<FieldElement> fe_sqrt(const FieldElement& a);
bool fe_is_qr(const FieldElement& a);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return fe_add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return fe_sub(a, b); }
inline FieldElement operator-(const FieldElement& a) { return fe_neg(a); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return fe_mul(a, b); }

}  // namespace eccs

#endif  // ECCS_FIELD_HPP_
