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

// Reference implementations that share no code with the library: a
// bit-vector polynomial model of GF(2^n) and OpenSSL's AES and XTS.

#ifndef XTSKIT_TESTS_ORACLES_H_
#define XTSKIT_TESTS_ORACLES_H_

#include <openssl/evp.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

using Bytes = std::vector<std::uint8_t>;

// Coefficient i of the polynomial lives in bit (i % 8) of byte (i / 8).
inline std::vector<int> ToBits(const Bytes& b) {
  std::vector<int> bits(b.size() * 8);
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = (b[i / 8] >> (i % 8)) & 1;
  return bits;
}

inline Bytes FromBits(const std::vector<int>& bits) {
  Bytes b(bits.size() / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) b[i / 8] |= static_cast<std::uint8_t>(1u << (i % 8));
  }
  return b;
}

// a * b mod (x^n + r), with r given by its set coefficient exponents.
inline Bytes PolyMulMod(const Bytes& a, const Bytes& b,
                        const std::vector<int>& r_terms) {
  const std::size_t n = a.size() * 8;
  const std::vector<int> x = ToBits(a), y = ToBits(b);
  std::vector<int> prod(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] ^= y[j];
  }
  // x^k for k >= n is x^(k-n) * r(x).
  for (std::size_t k = 2 * n - 1; k >= n; --k) {
    if (!prod[k]) continue;
    prod[k] = 0;
    for (int t : r_terms) prod[k - n + t] ^= 1;
  }
  prod.resize(n);
  return FromBits(prod);
}

inline Bytes PolyMulX(const Bytes& a, const std::vector<int>& r_terms) {
  Bytes x(a.size(), 0);
  x[0] = 2;
  return PolyMulMod(a, x, r_terms);
}

inline const std::vector<int>& StandardTerms() {
  static const std::vector<int> kTerms = {7, 2, 1, 0};
  return kTerms;
}

inline Bytes RandomBytes(std::mt19937_64& rng, std::size_t n) {
  Bytes b(n);
  for (auto& v : b) v = static_cast<std::uint8_t>(rng());
  return b;
}

inline const EVP_CIPHER* EcbFor(std::size_t key_bytes) {
  return key_bytes == 16 ? EVP_aes_128_ecb() : EVP_aes_256_ecb();
}

inline Bytes AesEcb(const Bytes& key, const Bytes& in, bool encrypt) {
  EVP_CIPHER_CTX* ctx = EVP_CIPHER_CTX_new();
  Bytes out(in.size() + 16);
  int len = 0, fin = 0;
  if (EVP_CipherInit_ex(ctx, EcbFor(key.size()), nullptr, key.data(), nullptr,
                        encrypt ? 1 : 0) != 1) {
    EVP_CIPHER_CTX_free(ctx);
    throw std::runtime_error("EVP init failed");
  }
  EVP_CIPHER_CTX_set_padding(ctx, 0);
  EVP_CipherUpdate(ctx, out.data(), &len, in.data(), static_cast<int>(in.size()));
  EVP_CipherFinal_ex(ctx, out.data() + len, &fin);
  EVP_CIPHER_CTX_free(ctx);
  out.resize(static_cast<std::size_t>(len + fin));
  return out;
}

// The XTS initial vector is the 16-byte value encrypted under K_T.
inline Bytes AesXts(const Bytes& k, const Bytes& kt, const Bytes& iv,
                    const Bytes& in, bool encrypt) {
  Bytes key = k;
  key.insert(key.end(), kt.begin(), kt.end());
  const EVP_CIPHER* cipher =
      k.size() == 16 ? EVP_aes_128_xts() : EVP_aes_256_xts();
  EVP_CIPHER_CTX* ctx = EVP_CIPHER_CTX_new();
  Bytes out(in.size());
  int len = 0;
  if (EVP_CipherInit_ex(ctx, cipher, nullptr, key.data(), iv.data(),
                        encrypt ? 1 : 0) != 1 ||
      EVP_CipherUpdate(ctx, out.data(), &len, in.data(),
                       static_cast<int>(in.size())) != 1) {
    EVP_CIPHER_CTX_free(ctx);
    throw std::runtime_error("EVP xts failed");
  }
  EVP_CIPHER_CTX_free(ctx);
  return out;
}

inline Bytes SectorIv(std::uint64_t n) {
  Bytes iv(16, 0);
  for (int i = 0; i < 8; ++i) iv[15 - i] = static_cast<std::uint8_t>(n >> (8 * i));
  return iv;
}

}  // namespace oracle

#endif  // XTSKIT_TESTS_ORACLES_H_
