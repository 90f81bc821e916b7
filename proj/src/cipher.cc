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

#include "xtskit/cipher.h"

#include "xtskit/aes.h"
#include "xtskit/error.h"
#include "xtskit/toy_cipher.h"

namespace xtskit {

std::string_view CipherName(CipherKind kind) {
  switch (kind) {
    case CipherKind::kAes128:
      return "aes128";
    case CipherKind::kAes256:
      return "aes256";
    case CipherKind::kToy16:
      return "toy16";
    case CipherKind::kToy24:
      return "toy24";
    case CipherKind::kToy32:
      return "toy32";
  }
  return "unknown";
}

CipherKind ParseCipherKind(std::string_view name) {
  for (CipherKind k : {CipherKind::kAes128, CipherKind::kAes256,
                       CipherKind::kToy16, CipherKind::kToy24,
                       CipherKind::kToy32}) {
    if (CipherName(k) == name) return k;
  }
  throw FormatError("unknown cipher \"" + std::string(name) +
                    "\" (expected aes128, aes256, toy16, toy24 or toy32)");
}

std::size_t KeyBytes(CipherKind kind) {
  switch (kind) {
    case CipherKind::kAes128:
      return 16;
    case CipherKind::kAes256:
      return 32;
    default:
      return 8;
  }
}

std::size_t BlockBytes(CipherKind kind) {
  switch (kind) {
    case CipherKind::kToy16:
      return 2;
    case CipherKind::kToy24:
      return 3;
    case CipherKind::kToy32:
      return 4;
    default:
      return 16;
  }
}

bool IsToy(CipherKind kind) {
  return kind != CipherKind::kAes128 && kind != CipherKind::kAes256;
}

Block EncryptBlock(const BlockCipher& cipher, const Block& p) {
  if (p.size() != cipher.block_bytes()) {
    throw ContractError("encrypt_block: " + std::to_string(p.bits()) +
                        "-bit block for " + cipher.name());
  }
  Block out = p;
  cipher.EncryptInPlace(out.bytes());
  return out;
}

Block DecryptBlock(const BlockCipher& cipher, const Block& c) {
  if (c.size() != cipher.block_bytes()) {
    throw ContractError("decrypt_block: " + std::to_string(c.bits()) +
                        "-bit block for " + cipher.name());
  }
  Block out = c;
  cipher.DecryptInPlace(out.bytes());
  return out;
}

std::unique_ptr<BlockCipher> MakeCipher(CipherKind kind,
                                        std::span<const std::uint8_t> key) {
  if (key.size() != KeyBytes(kind)) {
    throw ContractError(std::string(CipherName(kind)) + " needs " +
                        std::to_string(KeyBytes(kind)) + " key bytes, got " +
                        std::to_string(key.size()));
  }
  if (!IsToy(kind)) return std::make_unique<Aes>(key);
  std::uint64_t seed = 0;
  for (std::uint8_t b : key) seed = (seed << 8) | b;
  return std::make_unique<ToyFeistel>(seed, BlockBytes(kind) * 8);
}

}  // namespace xtskit
