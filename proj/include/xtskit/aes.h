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

#ifndef XTSKIT_AES_H_
#define XTSKIT_AES_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "xtskit/cipher.h"

namespace xtskit {

// AES-128 / AES-256 (FIPS 197), table driven. Not hardened against cache
// timing.
class Aes final : public BlockCipher {
 public:
  static constexpr std::size_t kBlockBytes = 16;

  // 16 or 32 key bytes.
  explicit Aes(std::span<const std::uint8_t> key);

  std::size_t block_bytes() const override { return kBlockBytes; }
  std::string name() const override;

  void EncryptInPlace(std::span<std::uint8_t> block) const override;
  void DecryptInPlace(std::span<std::uint8_t> block) const override;

 private:
  int rounds_;
  std::array<std::uint32_t, 60> enc_keys_{};
  std::array<std::uint32_t, 60> dec_keys_{};
};

}  // namespace xtskit

#endif  // XTSKIT_AES_H_
