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

#ifndef ECCS_COMMON_HPP_
#define ECCS_COMMON_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eccs {

using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;

inline ByteView as_bytes(std::string_view s) {
  return {reinterpret_cast<const uint8_t*>(s.data()), s.size()};
}

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller broke a precondition (mismatched moduli, wrong curve, bad argument).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Inversion of zero and similar.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// A point handed to a group operation is not on the curve.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed bytes: point encodings, envelopes, armor.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Message <-> point embedding failures.
class EncodingError : public Error {
 public:
  using Error::Error;
};

/// The randomness source could not deliver.
class RngError : public Error {
 public:
  using Error::Error;
};

/// The only error decryption ever reports, whatever the cause.
class InvalidCiphertext : public Error {
 public:
  InvalidCiphertext() : Error("invalid ciphertext") {}
};

}  // namespace eccs

#endif  // ECCS_COMMON_HPP_
