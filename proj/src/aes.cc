// Copyright 2026 The xtskit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "xtskit/aes.h"

#include <bit>

#include "xtskit/error.h"

namespace xtskit {

namespace {

using Table = std::array<std::uint32_t, 256>;
using ByteTable = std::array<std::uint8_t, 256>;

constexpr std::uint8_t GMul(std::uint8_t a, std::uint8_t b) {
  std::uint8_t p = 0;
  while (b) {
    if (b & 1) p ^= a;
    a = static_cast<std::uint8_t>((a << 1) ^ ((a & 0x80) ? 0x1b : 0));
    b >>= 1;
  }
  return p;
}

constexpr ByteTable MakeSbox() {
  ByteTable s{};
  for (int x = 0; x < 256; ++x) {
    // a^254 = a^-1 in GF(2^8), 0 -> 0.
    std::uint8_t inv = 1;
    for (int i = 0; i < 254; ++i) inv = GMul(inv, static_cast<std::uint8_t>(x));
    if (x == 0) inv = 0;
    std::uint8_t y = inv;
    for (int r = 1; r <= 4; ++r) {
      y ^= static_cast<std::uint8_t>((inv << r) | (inv >> (8 - r)));
    }
    s[x] = static_cast<std::uint8_t>(y ^ 0x63);
  }
  return s;
}

constexpr ByteTable kSbox = MakeSbox();

constexpr ByteTable MakeInvSbox() {
  ByteTable inv{};
  for (int x = 0; x < 256; ++x) inv[kSbox[x]] = static_cast<std::uint8_t>(x);
  return inv;
}

constexpr ByteTable kInvSbox = MakeInvSbox();

constexpr std::uint32_t Word(std::uint8_t a, std::uint8_t b, std::uint8_t c,
                             std::uint8_t d) {
  return (std::uint32_t{a} << 24) | (std::uint32_t{b} << 16) |
         (std::uint32_t{c} << 8) | std::uint32_t{d};
}

constexpr Table MakeTe(int rot) {
  Table t{};
  for (int x = 0; x < 256; ++x) {
    const std::uint8_t s = kSbox[x];
    t[x] = std::rotr(Word(GMul(s, 2), s, s, GMul(s, 3)), 8 * rot);
  }
  return t;
}

constexpr Table MakeTd(int rot) {
  Table t{};
  for (int x = 0; x < 256; ++x) {
    const std::uint8_t s = kInvSbox[x];
    t[x] = std::rotr(
        Word(GMul(s, 0x0e), GMul(s, 0x09), GMul(s, 0x0d), GMul(s, 0x0b)),
        8 * rot);
  }
  return t;
}

constexpr Table kTe0 = MakeTe(0), kTe1 = MakeTe(1), kTe2 = MakeTe(2),
                kTe3 = MakeTe(3);
constexpr Table kTd0 = MakeTd(0), kTd1 = MakeTd(1), kTd2 = MakeTd(2),
                kTd3 = MakeTd(3);

constexpr std::uint8_t B0(std::uint32_t w) { return w >> 24; }
constexpr std::uint8_t B1(std::uint32_t w) { return (w >> 16) & 0xff; }
constexpr std::uint8_t B2(std::uint32_t w) { return (w >> 8) & 0xff; }
constexpr std::uint8_t B3(std::uint32_t w) { return w & 0xff; }

std::uint32_t Load(const std::uint8_t* p) { return Word(p[0], p[1], p[2], p[3]); }

void Store(std::uint8_t* p, std::uint32_t w) {
  p[0] = B0(w);
  p[1] = B1(w);
  p[2] = B2(w);
  p[3] = B3(w);
}

std::uint32_t SubWord(std::uint32_t w) {
  return Word(kSbox[B0(w)], kSbox[B1(w)], kSbox[B2(w)], kSbox[B3(w)]);
}

void CheckBlock(std::span<std::uint8_t> block) {
  if (block.size() != Aes::kBlockBytes) {
    throw ContractError("AES block must be 16 bytes, got " +
                        std::to_string(block.size()));
  }
}

}  // namespace

Aes::Aes(std::span<const std::uint8_t> key) {
  if (key.size() != 16 && key.size() != 32) {
    throw ContractError("AES key must be 16 or 32 bytes, got " +
                        std::to_string(key.size()));
  }
  const int nk = static_cast<int>(key.size() / 4);
  rounds_ = nk + 6;
  const int total = 4 * (rounds_ + 1);

  for (int i = 0; i < nk; ++i) enc_keys_[i] = Load(&key[4 * i]);
  std::uint32_t rcon = 0x01;
  for (int i = nk; i < total; ++i) {
    std::uint32_t t = enc_keys_[i - 1];
    if (i % nk == 0) {
      t = SubWord(std::rotl(t, 8)) ^ (rcon << 24);
      rcon = GMul(static_cast<std::uint8_t>(rcon), 2);
    } else if (nk > 6 && i % nk == 4) {
      t = SubWord(t);
    }
    enc_keys_[i] = enc_keys_[i - nk] ^ t;
  }

  // Equivalent inverse cipher: reversed round keys, InvMixColumns applied
  // to all but the first and last.
  for (int r = 0; r <= rounds_; ++r) {
    for (int c = 0; c < 4; ++c) {
      std::uint32_t w = enc_keys_[4 * (rounds_ - r) + c];
      if (r != 0 && r != rounds_) {
        w = kTd0[kSbox[B0(w)]] ^ kTd1[kSbox[B1(w)]] ^ kTd2[kSbox[B2(w)]] ^
            kTd3[kSbox[B3(w)]];
      }
      dec_keys_[4 * r + c] = w;
    }
  }
}

std::string Aes::name() const { return rounds_ == 10 ? "aes128" : "aes256"; }

void Aes::EncryptInPlace(std::span<std::uint8_t> block) const {
  CheckBlock(block);
  const std::uint32_t* rk = enc_keys_.data();
  std::uint32_t s0 = Load(&block[0]) ^ rk[0];
  std::uint32_t s1 = Load(&block[4]) ^ rk[1];
  std::uint32_t s2 = Load(&block[8]) ^ rk[2];
  std::uint32_t s3 = Load(&block[12]) ^ rk[3];

  for (int r = 1; r < rounds_; ++r) {
    rk += 4;
    const std::uint32_t t0 =
        kTe0[B0(s0)] ^ kTe1[B1(s1)] ^ kTe2[B2(s2)] ^ kTe3[B3(s3)] ^ rk[0];
    const std::uint32_t t1 =
        kTe0[B0(s1)] ^ kTe1[B1(s2)] ^ kTe2[B2(s3)] ^ kTe3[B3(s0)] ^ rk[1];
    const std::uint32_t t2 =
        kTe0[B0(s2)] ^ kTe1[B1(s3)] ^ kTe2[B2(s0)] ^ kTe3[B3(s1)] ^ rk[2];
    const std::uint32_t t3 =
        kTe0[B0(s3)] ^ kTe1[B1(s0)] ^ kTe2[B2(s1)] ^ kTe3[B3(s2)] ^ rk[3];
    s0 = t0;
    s1 = t1;
    s2 = t2;
    s3 = t3;
  }

  rk += 4;
  Store(&block[0], Word(kSbox[B0(s0)], kSbox[B1(s1)], kSbox[B2(s2)],
                        kSbox[B3(s3)]) ^ rk[0]);
  Store(&block[4], Word(kSbox[B0(s1)], kSbox[B1(s2)], kSbox[B2(s3)],
                        kSbox[B3(s0)]) ^ rk[1]);
  Store(&block[8], Word(kSbox[B0(s2)], kSbox[B1(s3)], kSbox[B2(s0)],
                        kSbox[B3(s1)]) ^ rk[2]);
  Store(&block[12], Word(kSbox[B0(s3)], kSbox[B1(s0)], kSbox[B2(s1)],
                         kSbox[B3(s2)]) ^ rk[3]);
}

void Aes::DecryptInPlace(std::span<std::uint8_t> block) const {
  CheckBlock(block);
  const std::uint32_t* rk = dec_keys_.data();
  std::uint32_t s0 = Load(&block[0]) ^ rk[0];
  std::uint32_t s1 = Load(&block[4]) ^ rk[1];
  std::uint32_t s2 = Load(&block[8]) ^ rk[2];
  std::uint32_t s3 = Load(&block[12]) ^ rk[3];

  for (int r = 1; r < rounds_; ++r) {
    rk += 4;
    const std::uint32_t t0 =
        kTd0[B0(s0)] ^ kTd1[B1(s3)] ^ kTd2[B2(s2)] ^ kTd3[B3(s1)] ^ rk[0];
    const std::uint32_t t1 =
        kTd0[B0(s1)] ^ kTd1[B1(s0)] ^ kTd2[B2(s3)] ^ kTd3[B3(s2)] ^ rk[1];
    const std::uint32_t t2 =
        kTd0[B0(s2)] ^ kTd1[B1(s1)] ^ kTd2[B2(s0)] ^ kTd3[B3(s3)] ^ rk[2];
    const std::uint32_t t3 =
        kTd0[B0(s3)] ^ kTd1[B1(s2)] ^ kTd2[B2(s1)] ^ kTd3[B3(s0)] ^ rk[3];
    s0 = t0;
    s1 = t1;
    s2 = t2;
    s3 = t3;
  }

  rk += 4;
  Store(&block[0], Word(kInvSbox[B0(s0)], kInvSbox[B1(s3)], kInvSbox[B2(s2)],
                        kInvSbox[B3(s1)]) ^ rk[0]);
  Store(&block[4], Word(kInvSbox[B0(s1)], kInvSbox[B1(s0)], kInvSbox[B2(s3)],
                        kInvSbox[B3(s2)]) ^ rk[1]);
  Store(&block[8], Word(kInvSbox[B0(s2)], kInvSbox[B1(s1)], kInvSbox[B2(s0)],
                        kInvSbox[B3(s3)]) ^ rk[2]);
  Store(&block[12], Word(kInvSbox[B0(s3)], kInvSbox[B1(s2)], kInvSbox[B2(s1)],
                         kInvSbox[B3(s0)]) ^ rk[3]);
}

}  // namespace xtskit
