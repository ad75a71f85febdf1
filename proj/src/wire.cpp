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

#include "eccs/wire.hpp"

#include <openssl/evp.h>

#include <algorithm>

namespace eccs::wire {

namespace {

class Reader {
 public:
  explicit Reader(ByteView data) : data_(data) {}

  ByteView take(size_t n) {
    if (n > data_.size() - pos_) throw ParseError("truncated input");
    const ByteView out = data_.subspan(pos_, n);
    pos_ += n;
    return out;
  }
  uint8_t peek() const {
    if (pos_ >= data_.size()) throw ParseError("truncated input");
    return data_[pos_];
  }
  uint32_t u32() {
    const ByteView b = take(4);
    return (uint32_t{b[0]} << 24) | (uint32_t{b[1]} << 16) | (uint32_t{b[2]} << 8) | b[3];
  }
  size_t remaining() const { return data_.size() - pos_; }

 private:
  ByteView data_;
  size_t pos_ = 0;
};

CurvePoint read_point(Reader& in, const CurveParams& params) {
  const size_t len = in.peek() == 0x00 ? 1 : params.point_width();
  const CurvePoint p = decompress(params, in.take(len));
  if (!is_on_curve(params, p)) throw ParseError("point is not on the curve");
  return p;
}

void append(Bytes& out, ByteView b) { out.insert(out.end(), b.begin(), b.end()); }

Bytes envelope(Kind kind, uint8_t curve_id) {
  Bytes out(kMagic.begin(), kMagic.end());
  out.push_back(kVersion);
  out.push_back(static_cast<uint8_t>(kind));
  out.push_back(curve_id);
  return out;
}

const CurveParams& open(Reader& in, Kind expected) {
  const ByteView header = in.take(kEnvelopeHeaderSize);
  const EnvelopeInfo info = peek_envelope(header);
  if (info.kind != expected) throw ParseError("unexpected envelope kind");
  return *info.curve;
}

void finish(const Reader& in) {
  if (in.remaining() != 0) throw ParseError("trailing bytes after envelope body");
}

const CurveParams& registry_curve(uint8_t id) {
  const CurveParams* params = find_curve(id);
  if (!params) throw UsageError("curve id not in registry");
  return *params;
}

}  // namespace

EnvelopeInfo peek_envelope(ByteView data) {
  if (data.size() < kEnvelopeHeaderSize) throw ParseError("truncated envelope header");
  if (!std::equal(kMagic.begin(), kMagic.end(), data.begin())) throw ParseError("bad magic");
  if (data[4] != kVersion) throw ParseError("unsupported envelope version");
  const uint8_t kind = data[5];
  if (kind < 0x01 || kind > 0x03) throw ParseError("unknown envelope kind");
  const CurveParams* curve = find_curve(data[6]);
  if (!curve) throw ParseError("unknown curve id");
  return {static_cast<Kind>(kind), curve};
}

Bytes serialize_public_key(const PublicKey& pub) {
  const CurveParams& params = registry_curve(pub.curve_id);
  Bytes out = envelope(Kind::kPublicKey, pub.curve_id);
  for (const CurvePoint* p : {&pub.c, &pub.d, &pub.h}) append(out, compress(params, *p));
  return out;
}

PublicKey parse_public_key(ByteView data) {
  Reader in(data);
  const CurveParams& params = open(in, Kind::kPublicKey);
  PublicKey pub;
  pub.curve_id = params.id;
  for (CurvePoint* p : {&pub.c, &pub.d, &pub.h}) {
    *p = read_point(in, params);
    if (p->is_identity()) throw ParseError("public key point is the identity");
  }
  finish(in);
  return pub;
}

Bytes serialize_private_key(const PrivateKey& priv) {
  const CurveParams& params = registry_curve(priv.curve_id);
  Bytes out = envelope(Kind::kPrivateKey, priv.curve_id);
  for (const FieldElement* s : {&priv.x1, &priv.x2, &priv.y1, &priv.y2, &priv.z}) {
    if (!s->field().same_modulus(*params.scalars)) throw UsageError("private scalar not modulo n");
    append(out, s->to_bytes());
  }
  return out;
}

PrivateKey parse_private_key(ByteView data) {
  Reader in(data);
  const CurveParams& params = open(in, Kind::kPrivateKey);
  auto scalar = [&] {
    FieldElement s = FieldElement::from_bytes(params.scalars, in.take(params.scalar_width()));
    if (s.is_zero()) throw ParseError("private scalar is zero");
    return s;
  };
  PrivateKey priv{params.id, scalar(), scalar(), scalar(), scalar(), scalar()};
  finish(in);
  return priv;
}

Bytes serialize_ciphertext(const Ciphertext& ct) {
  const CurveParams& params = registry_curve(ct.curve_id);
  if (ct.chunks.empty()) throw UsageError("ciphertext without chunks");
  Bytes out = envelope(Kind::kCiphertext, ct.curve_id);
  const uint32_t total = ct.total();
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(total >> (24 - 8 * i)));
  for (const CiphertextChunk& c : ct.chunks) {
    for (const CurvePoint* p : {&c.u1, &c.u2, &c.e, &c.v}) append(out, compress(params, *p));
  }
  return out;
}

Ciphertext parse_ciphertext(ByteView data) {
  Reader in(data);
  const CurveParams& params = open(in, Kind::kCiphertext);
  const uint32_t total = in.u32();
  if (total == 0) throw ParseError("ciphertext declares zero chunks");
  // Each chunk needs at least four bytes; reject impossible counts before allocating.
  if (total > in.remaining() / 4) throw ParseError("declared chunk count exceeds input");
  Ciphertext ct;
  ct.curve_id = params.id;
  ct.chunks.reserve(total);
  for (uint32_t i = 0; i < total; ++i) {
    CiphertextChunk c;
    for (CurvePoint* p : {&c.u1, &c.u2, &c.e, &c.v}) *p = read_point(in, params);
    ct.chunks.push_back(c);
  }
  finish(in);
  return ct;
}

// ---------------------------------------------------------------------------
// Armor

namespace {

std::string begin_line(std::string_view label) { return "-----BEGIN " + std::string(label) + "-----"; }
std::string end_line(std::string_view label) { return "-----END " + std::string(label) + "-----"; }

bool is_base64_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '+' || c == '/';
}

}  // namespace

std::string armor(ByteView data, std::string_view label) {
  if (data.empty()) throw UsageError("cannot armor an empty body");
  std::string encoded(4 * ((data.size() + 2) / 3) + 1, '\0');
  const int len = EVP_EncodeBlock(reinterpret_cast<unsigned char*>(encoded.data()), data.data(),
                                  static_cast<int>(data.size()));
  encoded.resize(static_cast<size_t>(len));

  std::string out = begin_line(label) + "\n";
  for (size_t i = 0; i < encoded.size(); i += 64) {
    out.append(encoded, i, 64);
    out.push_back('\n');
  }
  out += end_line(label) + "\n";
  return out;
}

Bytes dearmor(std::string_view text, std::string_view label) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();

  if (lines.size() < 2) throw ParseError("armor: missing delimiters");
  if (lines.front() != begin_line(label)) throw ParseError("armor: BEGIN line missing or label mismatch");
  if (lines.back() != end_line(label)) throw ParseError("armor: END line missing or label mismatch");
  if (lines.size() == 2) throw ParseError("armor: empty body");

  std::string body;
  for (size_t i = 1; i + 1 < lines.size(); ++i) {
    const std::string_view line = lines[i];
    const bool last = i + 2 == lines.size();
    if (line.empty() || line.size() > 64 || (!last && line.size() != 64)) {
      throw ParseError("armor: body lines must be wrapped at 64 columns");
    }
    body.append(line);
  }
  if (body.size() % 4 != 0) throw ParseError("armor: base64 length not a multiple of 4");
  size_t padding = 0;
  while (padding < 2 && body[body.size() - 1 - padding] == '=') ++padding;
  for (size_t i = 0; i + padding < body.size(); ++i) {
    if (!is_base64_char(body[i])) throw ParseError("armor: invalid base64 character");
  }

  Bytes out(body.size() / 4 * 3);
  const int len = EVP_DecodeBlock(out.data(), reinterpret_cast<const unsigned char*>(body.data()),
                                  static_cast<int>(body.size()));
  if (len < 0) throw ParseError("armor: invalid base64");
  out.resize(static_cast<size_t>(len) - padding);
  if (out.empty()) throw ParseError("armor: empty body");
  // Canonical encoding only: re-encoding must reproduce the input.
  std::string check(body.size() + 1, '\0');
  EVP_EncodeBlock(reinterpret_cast<unsigned char*>(check.data()), out.data(), static_cast<int>(out.size()));
  check.resize(body.size());
  if (check != body) throw ParseError("armor: non-canonical base64");
  return out;
}

bool looks_armored(ByteView data) {
  constexpr std::string_view kPrefix = "-----BEGIN ";
  return data.size() >= kPrefix.size() && std::equal(kPrefix.begin(), kPrefix.end(), data.begin());
}

}  // namespace eccs::wire
