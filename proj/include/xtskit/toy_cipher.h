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

#ifndef XTSKIT_TOY_CIPHER_H_
#define XTSKIT_TOY_CIPHER_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "xtskit/cipher.h"

namespace xtskit {

// 64-bit xorshift-multiply finalizer (the splitmix64 output mix).
constexpr std::uint64_t Mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Four-round balanced Feistel network on 16-, 24- or 32-bit blocks, small
// enough that birthday collisions show up after a few thousand blocks.
// Bijective by construction; has no cryptographic strength.
//
// The block is read as an integer with byte 0 least significant, split
// into high half L and low half R, and each round maps
// (L, R) -> (R, L ^ F(R, k_r)) where
//   k_r     = Mix64(seed + r * 0x9E3779B97F4A7C15)
//   F(h, k) = top width/2 bits of Mix64(h ^ (k mod 2^(width/2))).
class ToyFeistel final : public BlockCipher {
 public:
  static constexpr int kRounds = 4;

  ToyFeistel(std::uint64_t seed, std::size_t width_bits);

  std::size_t block_bytes() const override { return width_bits_ / 8; }
  std::string name() const override;
  std::uint64_t seed() const { return seed_; }

  void EncryptInPlace(std::span<std::uint8_t> block) const override;
  void DecryptInPlace(std::span<std::uint8_t> block) const override;

  // Integer-level permutation, `v` < 2^width.
  std::uint32_t Encrypt(std::uint32_t v) const;
  std::uint32_t Decrypt(std::uint32_t v) const;

 private:
  std::uint32_t Round(std::uint32_t half, int r) const;

  std::uint64_t seed_;
  std::size_t width_bits_;
  std::size_t half_bits_;
  std::uint32_t half_mask_;
  std::array<std::uint64_t, kRounds> round_keys_{};
};

}  // namespace xtskit

#endif  // XTSKIT_TOY_CIPHER_H_
