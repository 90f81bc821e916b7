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

#ifndef XTSKIT_CIPHER_H_
#define XTSKIT_CIPHER_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "xtskit/block.h"

namespace xtskit {

enum class CipherKind { kAes128, kAes256, kToy16, kToy24, kToy32 };

// "aes128", "aes256", "toy16", "toy24", "toy32".
std::string_view CipherName(CipherKind kind);
CipherKind ParseCipherKind(std::string_view name);

std::size_t KeyBytes(CipherKind kind);
std::size_t BlockBytes(CipherKind kind);
bool IsToy(CipherKind kind);

// Keyed permutation on n-bit blocks. Implementations are immutable after
// construction, so one instance may be shared by any number of threads.
class BlockCipher {
 public:
  virtual ~BlockCipher() = default;

  virtual std::size_t block_bytes() const = 0;
  std::size_t block_bits() const { return block_bytes() * 8; }
  virtual std::string name() const = 0;

  // `block` must be exactly block_bytes() long.
  virtual void EncryptInPlace(std::span<std::uint8_t> block) const = 0;
  virtual void DecryptInPlace(std::span<std::uint8_t> block) const = 0;
};

Block EncryptBlock(const BlockCipher& cipher, const Block& p);
Block DecryptBlock(const BlockCipher& cipher, const Block& c);

// Builds a cipher from raw key bytes. AES takes 16/32 key bytes; the toy
// ciphers take an 8-byte seed read big-endian.
std::unique_ptr<BlockCipher> MakeCipher(CipherKind kind,
                                        std::span<const std::uint8_t> key);

}  // namespace xtskit

#endif  // XTSKIT_CIPHER_H_
