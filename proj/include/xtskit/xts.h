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

// XTS sector encryption without ciphertext stealing.
//
// For sector N with blocks P_{N,0..J-1}:
//
//   T_{N,0} = E_{K_T}(encode(N))
//   T_{N,j} = T_{N,j-1} * alpha                in GF(2^n)
//   C_{N,j} = E_K(P_{N,j} ^ T_{N,j}) ^ T_{N,j}
//
// Block indexation starts at j = 0. encode(N) writes N big-endian into the
// last 8 bytes of an n-bit block (all of it for narrower toy blocks), so
// sector 1 encodes as 00..0001.

#ifndef XTSKIT_XTS_H_
#define XTSKIT_XTS_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "xtskit/block.h"
#include "xtskit/cipher.h"
#include "xtskit/gf.h"

namespace xtskit {

// Hard cap on blocks per sector (data unit).
inline constexpr std::uint64_t kMaxBlocksPerSector = std::uint64_t{1} << 20;

struct Geometry {
  std::uint64_t sector_size_bytes = 4096;
  std::uint64_t sector_count = 1;
  std::size_t block_bytes = 16;

  // J. Throws SizeError unless the sector size is a positive multiple of
  // the block size.
  std::uint64_t BlocksPerSector() const;
  // S * J. Throws SizeError if it does not fit in 64 bits.
  std::uint64_t TotalBlocks() const;
  std::uint64_t TotalBytes() const;
  // BlocksPerSector() plus sector_count >= 1 and J <= 2^20.
  void Validate() const;

  friend bool operator==(const Geometry&, const Geometry&) = default;
};

// The pair (K, K_T). Equal halves are representable; audit flags them.
struct XtsKey {
  std::vector<std::uint8_t> data_key;
  std::vector<std::uint8_t> tweak_key;

  bool SharesKeys() const { return data_key == tweak_key; }
  friend bool operator==(const XtsKey&, const XtsKey&) = default;
};

Block EncodeSectorNumber(std::uint64_t sector, std::size_t block_bytes = 16);
// Inverse of EncodeSectorNumber; nullopt when the leading bytes are not
// zero (the value does not fit a 64-bit sector number).
std::optional<std::uint64_t> DecodeSectorNumber(const Block& b);

// T_{N,0} .. T_{N,J-1} for an arbitrary n-bit tweak input.
std::vector<Block> TweakSchedule(const BlockCipher& tweak_cipher,
                                 const Block& sector_input, std::size_t count,
                                 const gf::FieldSpec& field);
std::vector<Block> TweakSchedule(const BlockCipher& tweak_cipher,
                                 std::uint64_t sector, std::size_t count,
                                 const gf::FieldSpec& field);

// A keyed XTS instance. Immutable; safe to share across threads.
class XtsCipher {
 public:
  XtsCipher(CipherKind kind, const XtsKey& key);
  XtsCipher(std::unique_ptr<BlockCipher> data_cipher,
            std::unique_ptr<BlockCipher> tweak_cipher);

  const BlockCipher& data_cipher() const { return *data_; }
  const BlockCipher& tweak_cipher() const { return *tweak_; }
  const gf::FieldSpec& field() const { return field_; }
  std::size_t block_bytes() const { return data_->block_bytes(); }

  // `in` and `out` are one whole sector each and may alias.
  void EncryptSector(std::uint64_t sector, std::span<const std::uint8_t> in,
                     std::span<std::uint8_t> out) const;
  void DecryptSector(std::uint64_t sector, std::span<const std::uint8_t> in,
                     std::span<std::uint8_t> out) const;

  std::vector<std::uint8_t> EncryptSector(
      std::uint64_t sector, std::span<const std::uint8_t> plaintext) const;
  std::vector<std::uint8_t> DecryptSector(
      std::uint64_t sector, std::span<const std::uint8_t> ciphertext) const;

  // Single block at (sector_input, j), where sector_input is the raw
  // n-bit value fed to E_{K_T}.
  Block EncryptBlockAt(const Block& sector_input, std::uint64_t j,
                       const Block& p) const;
  Block DecryptBlockAt(const Block& sector_input, std::uint64_t j,
                       const Block& c) const;
  Block TweakAt(const Block& sector_input, std::uint64_t j) const;

 private:
  template <bool kEncrypt>
  void Process(std::uint64_t sector, std::span<const std::uint8_t> in,
               std::span<std::uint8_t> out) const;

  std::unique_ptr<BlockCipher> data_;
  std::unique_ptr<BlockCipher> tweak_;
  gf::FieldSpec field_;
};

}  // namespace xtskit

#endif  // XTSKIT_XTS_H_
