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

#ifndef ECCS_BENCH_HPP_
#define ECCS_BENCH_HPP_

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "eccs/curve.hpp"
#include "eccs/op_counter.hpp"
#include "eccs/random.hpp"

namespace eccs::bench {

struct Timing {
  double median_ms = 0;
  double p90_ms = 0;
};

struct AlgorithmReport {
  std::string name;
  bool cca_secure = false;
  size_t public_key_bytes = 0;
  size_t private_key_bytes = 0;
  Timing keygen, encrypt, decrypt;
  // Per single operation, from the op-count instrumentation.
  OpCounts keygen_ops, encrypt_ops, decrypt_ops;
};

struct BenchReport {
  std::string curve;
  size_t iterations = 0;
  size_t message_bytes = 0;
  std::string host;
  std::vector<AlgorithmReport> algorithms;
};

inline constexpr size_t kMessageBytes = 28;
inline constexpr size_t kMinIterations = 10;

/// Measures keygen/encrypt/decrypt of a fixed 28-byte (one chunk) message
/// for this scheme and the EC-ElGamal baseline. iters >= 10; two warm-up
/// rounds are excluded from the statistics.
BenchReport run_suite(const CurveParams& params, size_t iters, RandomSource& rng);

/// Published reference figures, reported verbatim and never measured here.
struct LiteratureColumn {
  const char* name;
  const char* public_key;
  const char* private_key;
  const char* agreement_ms;
  const char* encryption_ms;
  const char* decryption_ms;
  const char* initialisation_ms;
};
const std::vector<LiteratureColumn>& literature_table();

void print_table(std::ostream& out, const BenchReport& report);
/// One key=value line per measurement.
void print_key_values(std::ostream& out, const BenchReport& report);

}  // namespace eccs::bench

#endif  // ECCS_BENCH_HPP_
