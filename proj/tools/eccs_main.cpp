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

// eccs: command-line front end for key generation, encryption, decryption,
// inspection, self-test and benchmarking.
//
// Exit codes: 0 success, 1 self-test failure, 2 usage or parse error,
// 3 environment (randomness, file I/O), 4 invalid ciphertext.

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "eccs/bench.hpp"
#include "eccs/curve.hpp"
#include "eccs/ecs.hpp"
#include "eccs/random.hpp"
#include "eccs/selftest.hpp"
#include "eccs/wire.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSelftestFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitEnvironment = 3;
constexpr int kExitInvalidCiphertext = 4;

class IoError : public eccs::Error {
 public:
  using Error::Error;
};

struct Options {
  std::string curve = "secp256k1";
  std::string pub_path;
  std::string priv_path;
  std::string in_path;
  std::string out_path;
  bool armor = false;
  size_t iters = 50;
  std::optional<uint64_t> seed;
};

eccs::Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  eccs::Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("cannot read " + path);
  return data;
}

void write_file(const std::string& path, eccs::ByteView data, mode_t mode = 0644) {
  const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, mode);
  if (fd < 0) throw IoError("cannot write " + path);
  ::fchmod(fd, mode);
  size_t written = 0;
  while (written < data.size()) {
    const ssize_t n = ::write(fd, data.data() + written, data.size() - written);
    if (n <= 0) {
      ::close(fd);
      throw IoError("cannot write " + path);
    }
    written += static_cast<size_t>(n);
  }
  if (::close(fd) != 0) throw IoError("cannot write " + path);
}

void write_output(const std::string& path, const eccs::Bytes& data, bool armor, std::string_view label,
                  mode_t mode = 0644) {
  if (!armor) return write_file(path, data, mode);
  const std::string text = eccs::wire::armor(data, label);
  write_file(path, eccs::as_bytes(text), mode);
}

/// Raw envelope bytes, unwrapping armor when present.
eccs::Bytes read_envelope(const std::string& path, std::string_view label) {
  eccs::Bytes data = read_file(path);
  if (!eccs::wire::looks_armored(data)) return data;
  return eccs::wire::dearmor(std::string_view(reinterpret_cast<const char*>(data.data()), data.size()), label);
}

void require_distinct(const std::string& a, const std::string& b) {
  std::error_code ec;
  if (a == b || std::filesystem::equivalent(a, b, ec)) throw eccs::UsageError("input and output paths must differ");
}

std::unique_ptr<eccs::RandomSource> make_rng(const Options& opt) {
  if (opt.seed) return std::make_unique<eccs::DeterministicRandom>(*opt.seed);
  return std::make_unique<eccs::SystemRandom>();
}

int cmd_keygen(const Options& opt) {
  const eccs::CurveParams& params = eccs::curve_by_name(opt.curve);
  require_distinct(opt.pub_path, opt.priv_path);
  const auto rng = make_rng(opt);
  const eccs::KeyPair keys = eccs::keygen(params, *rng);
  write_output(opt.priv_path, eccs::wire::serialize_private_key(keys.priv), opt.armor,
               eccs::wire::kPrivateKeyLabel, 0600);
  write_output(opt.pub_path, eccs::wire::serialize_public_key(keys.pub), opt.armor, eccs::wire::kPublicKeyLabel);
  return kExitOk;
}

int cmd_encrypt(const Options& opt) {
  require_distinct(opt.in_path, opt.out_path);
  const eccs::PublicKey pub = eccs::wire::parse_public_key(read_envelope(opt.pub_path, eccs::wire::kPublicKeyLabel));
  const eccs::CurveParams& params = *eccs::find_curve(pub.curve_id);
  const eccs::Bytes message = read_file(opt.in_path);
  const auto rng = make_rng(opt);
  const eccs::Ciphertext ct = eccs::encrypt(params, pub, message, *rng);
  write_output(opt.out_path, eccs::wire::serialize_ciphertext(ct), opt.armor, eccs::wire::kMessageLabel);
  return kExitOk;
}

int cmd_decrypt(const Options& opt) {
  require_distinct(opt.in_path, opt.out_path);
  const eccs::PrivateKey priv =
      eccs::wire::parse_private_key(read_envelope(opt.priv_path, eccs::wire::kPrivateKeyLabel));
  const eccs::CurveParams& params = *eccs::find_curve(priv.curve_id);
  const eccs::Bytes input = read_file(opt.in_path);

  eccs::Bytes plaintext;
  try {
    eccs::Bytes raw = input;
    if (eccs::wire::looks_armored(input)) {
      raw = eccs::wire::dearmor(std::string_view(reinterpret_cast<const char*>(input.data()), input.size()),
                                eccs::wire::kMessageLabel);
    }
    plaintext = eccs::decrypt(params, priv, eccs::wire::parse_ciphertext(raw));
  } catch (const eccs::Error&) {
    throw eccs::InvalidCiphertext();
  }
  write_file(opt.out_path, plaintext, 0600);
  return kExitOk;
}

int cmd_inspect(const Options& opt) {
  eccs::Bytes data = read_file(opt.in_path);
  if (eccs::wire::looks_armored(data)) {
    const std::string_view text(reinterpret_cast<const char*>(data.data()), data.size());
    std::optional<eccs::Bytes> unwrapped;
    for (std::string_view label :
         {eccs::wire::kPublicKeyLabel, eccs::wire::kPrivateKeyLabel, eccs::wire::kMessageLabel}) {
      try {
        unwrapped = eccs::wire::dearmor(text, label);
        break;
      } catch (const eccs::ParseError&) {
      }
    }
    if (!unwrapped) throw eccs::ParseError("unrecognised armor");
    data = std::move(*unwrapped);
  }
  const eccs::wire::EnvelopeInfo info = eccs::wire::peek_envelope(data);
  const std::string& curve = info.curve->name;
  switch (info.kind) {
    case eccs::wire::Kind::kPublicKey:
      eccs::wire::parse_public_key(data);
      std::cout << "public key, " << curve << ", " << data.size() << " bytes\n";
      break;
    case eccs::wire::Kind::kPrivateKey:
      eccs::wire::parse_private_key(data);
      std::cout << "private key (scalars withheld), " << curve << ", " << data.size() << " bytes\n";
      break;
    case eccs::wire::Kind::kCiphertext: {
      const eccs::Ciphertext ct = eccs::wire::parse_ciphertext(data);
      std::cout << "ciphertext, " << curve << ", " << data.size() << " bytes, " << ct.total()
                << (ct.total() == 1 ? " chunk\n" : " chunks\n");
      break;
    }
  }
  return kExitOk;
}

int cmd_selftest() {
  const eccs::SelftestReport report = eccs::run_selftest(eccs::toy_curve(), &std::cout);
  std::cout << (report.passed() ? "selftest: all checks passed\n" : "selftest: FAILED\n");
  return report.passed() ? kExitOk : kExitSelftestFailed;
}

int cmd_bench(const Options& opt) {
  const eccs::CurveParams& params = eccs::curve_by_name(opt.curve);
  const auto rng = make_rng(opt);
  const eccs::bench::BenchReport report = eccs::bench::run_suite(params, opt.iters, *rng);
  eccs::bench::print_table(std::cout, report);
  std::cout << '\n';
  eccs::bench::print_key_values(std::cout, report);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eccs - Cramer-Shoup public-key encryption over elliptic curves"};
  app.require_subcommand(1);
  Options opt;

  auto add_seed = [&]([[maybe_unused]] CLI::App* cmd) {
#if defined(ECCS_TEST_HOOKS) && ECCS_TEST_HOOKS
    cmd->add_option("--seed", opt.seed, "Deterministic randomness (test builds only)");
#endif
  };

  auto* keygen = app.add_subcommand("keygen", "Generate a key pair");
  keygen->add_option("--curve", opt.curve, "Curve name (secp256k1, toy)")->capture_default_str();
  keygen->add_option("--pub", opt.pub_path, "Public key output")->required();
  keygen->add_option("--priv", opt.priv_path, "Private key output")->required();
  keygen->add_flag("--armor", opt.armor, "Write text armor");
  add_seed(keygen);

  auto* encrypt = app.add_subcommand("encrypt", "Encrypt a file");
  encrypt->add_option("--pub", opt.pub_path, "Recipient public key")->required();
  encrypt->add_option("--in", opt.in_path, "Plaintext input")->required();
  encrypt->add_option("--out", opt.out_path, "Ciphertext output")->required();
  encrypt->add_flag("--armor", opt.armor, "Write text armor");
  add_seed(encrypt);

  auto* decrypt = app.add_subcommand("decrypt", "Decrypt a file");
  decrypt->add_option("--priv", opt.priv_path, "Private key")->required();
  decrypt->add_option("--in", opt.in_path, "Ciphertext input")->required();
  decrypt->add_option("--out", opt.out_path, "Plaintext output")->required();

  auto* inspect = app.add_subcommand("inspect", "Describe a key or ciphertext file");
  inspect->add_option("--in", opt.in_path, "File to inspect")->required();

  auto* selftest = app.add_subcommand("selftest", "Run the built-in verification suite");

  auto* bench = app.add_subcommand("bench", "Benchmark against an EC-ElGamal baseline");
  bench->add_option("--curve", opt.curve, "Curve name")->capture_default_str();
  bench->add_option("--iters", opt.iters, "Measured iterations (>= 10)")->capture_default_str();
  add_seed(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*keygen) return cmd_keygen(opt);
    if (*encrypt) return cmd_encrypt(opt);
    if (*decrypt) return cmd_decrypt(opt);
    if (*inspect) return cmd_inspect(opt);
    if (*selftest) return cmd_selftest();
    if (*bench) return cmd_bench(opt);
  } catch (const eccs::InvalidCiphertext&) {
    std::cerr << "error: invalid ciphertext\n";
    return kExitInvalidCiphertext;
  } catch (const eccs::RngError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitEnvironment;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitEnvironment;
  } catch (const eccs::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
