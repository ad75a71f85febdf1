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

#include "eccs/bench.hpp"

#include <sys/utsname.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "eccs/codec.hpp"
#include "eccs/ecs.hpp"
#include "eccs/elgamal.hpp"
#include "eccs/wire.hpp"

namespace eccs::bench {

namespace {

constexpr size_t kWarmup = 2;

Timing summarize(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  const size_t n = samples.size();
  const double median = n % 2 ? samples[n / 2] : (samples[n / 2 - 1] + samples[n / 2]) / 2;
  const size_t p90 = std::min(n - 1, (n * 9 + 9) / 10 - 1);
  return {median, samples[p90]};
}

// Runs op warm-up + iters times; returns timings of the measured runs and the
// op counts of a single run.
template <typename Op>
std::pair<Timing, OpCounts> measure(size_t iters, Op&& op) {
  std::vector<double> samples;
  samples.reserve(iters);
  OpCounts counts;
  for (size_t i = 0; i < kWarmup + iters; ++i) {
    ScopedOpCounter counter;
    const auto start = std::chrono::steady_clock::now();
    op();
    const auto stop = std::chrono::steady_clock::now();
    if (i == 0) counts = counter.counts();
    if (i >= kWarmup) samples.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
  }
  return {summarize(std::move(samples)), counts};
}

std::string host_descriptor() {
  std::ostringstream os;
  utsname u{};
  if (uname(&u) == 0) os << u.sysname << ' ' << u.release << ' ' << u.machine;
  os << ", " << std::thread::hardware_concurrency() << " hw threads";
  return os.str();
}

AlgorithmReport bench_scheme(const CurveParams& params, size_t iters, RandomSource& rng, const CurvePoint& m) {
  AlgorithmReport r;
  r.name = "ECCS (this scheme)";
  r.cca_secure = true;

  KeyPair keys = keygen(params, rng);
  r.public_key_bytes = wire::serialize_public_key(keys.pub).size();
  r.private_key_bytes = wire::serialize_private_key(keys.priv).size();

  const ChunkHeader header = chunk_header(0, 1);
  std::tie(r.keygen, r.keygen_ops) = measure(iters, [&] { keys = keygen(params, rng); });
  CiphertextChunk chunk = encrypt_chunk(params, keys.pub, m, header, rng);
  std::tie(r.encrypt, r.encrypt_ops) =
      measure(iters, [&] { chunk = encrypt_chunk(params, keys.pub, m, header, rng); });
  CurvePoint out;
  std::tie(r.decrypt, r.decrypt_ops) = measure(iters, [&] { out = decrypt_chunk(params, keys.priv, chunk, header); });
  if (!(out == m)) throw Error("bench: scheme roundtrip failed");
  return r;
}

AlgorithmReport bench_elgamal(const CurveParams& params, size_t iters, RandomSource& rng, const CurvePoint& m) {
  AlgorithmReport r;
  r.name = "EC-ElGamal (baseline, not CCA)";
  r.cca_secure = false;

  elgamal::KeyPair keys = elgamal::keygen(params, rng);
  r.public_key_bytes = params.point_width();
  r.private_key_bytes = params.scalar_width();

  std::tie(r.keygen, r.keygen_ops) = measure(iters, [&] { keys = elgamal::keygen(params, rng); });
  elgamal::Ciphertext ct = elgamal::encrypt_point(params, keys.pub, m, rng);
  std::tie(r.encrypt, r.encrypt_ops) = measure(iters, [&] { ct = elgamal::encrypt_point(params, keys.pub, m, rng); });
  CurvePoint out;
  std::tie(r.decrypt, r.decrypt_ops) = measure(iters, [&] { out = elgamal::decrypt_point(params, keys.priv, ct); });
  if (!(out == m)) throw Error("bench: baseline roundtrip failed");
  return r;
}

std::string ops(const OpCounts& c) {
  std::ostringstream os;
  os << c.scalar_mults << "M/" << c.point_adds << "A/" << c.hashes << "H/" << c.negations << "N";
  return os.str();
}

std::string ms(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << v;
  return os.str();
}

}  // namespace

BenchReport run_suite(const CurveParams& params, size_t iters, RandomSource& rng) {
  if (iters < kMinIterations) throw UsageError("bench needs at least 10 iterations");
  if (chunk_capacity(params) < kMessageBytes) throw UsageError("bench needs a curve with 28-byte chunk capacity");

  Bytes message(kMessageBytes);
  for (size_t i = 0; i < message.size(); ++i) message[i] = static_cast<uint8_t>('A' + i % 26);
  const CurvePoint m = encode_chunk(params, message);

  BenchReport report;
  report.curve = params.name;
  report.iterations = iters;
  report.message_bytes = kMessageBytes;
  report.host = host_descriptor();
  report.algorithms.push_back(bench_scheme(params, iters, rng, m));
  report.algorithms.push_back(bench_elgamal(params, iters, rng, m));
  return report;
}

const std::vector<LiteratureColumn>& literature_table() {
  // Published comparison figures, Intel Core i7-8565U, Java.
  static const std::vector<LiteratureColumn> table = {
      {"RSA (4096)", "512 B", "512 B", "-", "116", "4", "17.700"},
      {"ECC (256)", "32 B", "32 B", "-", "19", "7", "397"},
      {"CS (256)", "1 KB", "1 KB", "-", "3", "1", "3"},
      {"CS-EC (256)", "64 B", "64 B", "-", "41", "43", "473"},
      {"ECDH (secp256k1)", "32 B", "32 B", "2", "-", "-", "682"},
      {"SIDH (P751)", "564 B", "48 B", "416", "-", "-", "687"},
      {"Kyber (1024)", "1.5 KB", "3.1 KB", "-", "2", "4", "152"},
  };
  return table;
}

void print_table(std::ostream& out, const BenchReport& report) {
  out << "curve " << report.curve << ", " << report.iterations << " iterations, " << report.message_bytes
      << "-byte message, host: " << report.host << "\n\n";
  out << "measured (ms, median / p90; ops = scalar mults/point adds/hashes/negations)\n";
  out << std::left << std::setw(32) << "algorithm" << std::setw(8) << "pub B" << std::setw(8) << "priv B"
      << std::setw(20) << "keygen" << std::setw(20) << "encrypt" << std::setw(20) << "decrypt" << "\n";
  for (const AlgorithmReport& a : report.algorithms) {
    out << std::left << std::setw(32) << a.name << std::setw(8) << a.public_key_bytes << std::setw(8)
        << a.private_key_bytes << std::setw(20) << (ms(a.keygen.median_ms) + " / " + ms(a.keygen.p90_ms))
        << std::setw(20) << (ms(a.encrypt.median_ms) + " / " + ms(a.encrypt.p90_ms)) << std::setw(20)
        << (ms(a.decrypt.median_ms) + " / " + ms(a.decrypt.p90_ms)) << "\n";
    out << std::left << std::setw(48) << "  op counts" << std::setw(20) << ops(a.keygen_ops) << std::setw(20)
        << ops(a.encrypt_ops) << std::setw(20) << ops(a.decrypt_ops) << "\n";
  }
  out << "\nliterature values, not measured on this host (ms)\n";
  out << std::left << std::setw(20) << "algorithm" << std::setw(10) << "pub" << std::setw(10) << "priv"
      << std::setw(11) << "agreement" << std::setw(11) << "encrypt" << std::setw(11) << "decrypt" << "init\n";
  for (const LiteratureColumn& c : literature_table()) {
    out << std::left << std::setw(20) << c.name << std::setw(10) << c.public_key << std::setw(10) << c.private_key
        << std::setw(11) << c.agreement_ms << std::setw(11) << c.encryption_ms << std::setw(11) << c.decryption_ms
        << c.initialisation_ms << "\n";
  }
  out << "\nnote: the published 64 B key sizes for CS-EC (256) cannot hold three points and five 256-bit\n"
         "scalars; measured sizes above are the serialized envelope sizes.\n";
}

void print_key_values(std::ostream& out, const BenchReport& report) {
  out << "bench.curve=" << report.curve << "\n";
  out << "bench.iterations=" << report.iterations << "\n";
  out << "bench.message_bytes=" << report.message_bytes << "\n";
  out << "bench.host=" << report.host << "\n";
  for (size_t i = 0; i < report.algorithms.size(); ++i) {
    const AlgorithmReport& a = report.algorithms[i];
    const std::string key = i == 0 ? "eccs" : "elgamal";
    out << key << ".cca_secure=" << (a.cca_secure ? "true" : "false") << "\n";
    out << key << ".public_key_bytes=" << a.public_key_bytes << "\n";
    out << key << ".private_key_bytes=" << a.private_key_bytes << "\n";
    const std::pair<const char*, std::pair<const Timing*, const OpCounts*>> rows[] = {
        {"keygen", {&a.keygen, &a.keygen_ops}},
        {"encrypt", {&a.encrypt, &a.encrypt_ops}},
        {"decrypt", {&a.decrypt, &a.decrypt_ops}},
    };
    for (const auto& [op, data] : rows) {
      out << key << '.' << op << ".median_ms=" << ms(data.first->median_ms) << "\n";
      out << key << '.' << op << ".p90_ms=" << ms(data.first->p90_ms) << "\n";
      out << key << '.' << op << ".scalar_mults=" << data.second->scalar_mults << "\n";
      out << key << '.' << op << ".point_adds=" << data.second->point_adds << "\n";
      out << key << '.' << op << ".hashes=" << data.second->hashes << "\n";
      out << key << '.' << op << ".negations=" << data.second->negations << "\n";
    }
  }
}

}  // namespace eccs::bench
