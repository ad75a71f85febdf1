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

#include "eccs/hash.hpp"

#include <openssl/evp.h>

namespace eccs {

struct Sha3_256::Impl {
  struct CtxDeleter {
    void operator()(EVP_MD_CTX* ctx) const { EVP_MD_CTX_free(ctx); }
  };
  std::unique_ptr<EVP_MD_CTX, CtxDeleter> ctx{EVP_MD_CTX_new()};
};

Sha3_256::Sha3_256() : impl_(std::make_unique<Impl>()) {
  if (!impl_->ctx || EVP_DigestInit_ex(impl_->ctx.get(), EVP_sha3_256(), nullptr) != 1) {
    throw Error("sha3-256: digest init failed");
  }
}

Sha3_256::~Sha3_256() = default;
Sha3_256::Sha3_256(Sha3_256&&) noexcept = default;
Sha3_256& Sha3_256::operator=(Sha3_256&&) noexcept = default;

Sha3_256& Sha3_256::update(ByteView data) {
  if (!data.empty() && EVP_DigestUpdate(impl_->ctx.get(), data.data(), data.size()) != 1) {
    throw Error("sha3-256: update failed");
  }
  return *this;
}

Digest256 Sha3_256::finish() {
  Digest256 out{};
  unsigned int len = 0;
  if (EVP_DigestFinal_ex(impl_->ctx.get(), out.data(), &len) != 1 || len != out.size()) {
    throw Error("sha3-256: finalisation failed");
  }
  return out;
}

Digest256 sha3_256(ByteView data) { return Sha3_256().update(data).finish(); }

}  // namespace eccs
