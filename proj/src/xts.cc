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

#include "xtskit/xts.h"

#include <algorithm>
#include <string>

#include "xtskit/error.h"

namespace xtskit {

std::uint64_t Geometry::BlocksPerSector() const {
  if (block_bytes == 0 || sector_size_bytes == 0 ||
      sector_size_bytes % block_bytes != 0) {
    throw SizeError("sector size " + std::to_string(sector_size_bytes) +
                    " is not a positive multiple of the " +
                    std::to_string(block_bytes) + "-byte cipher block");
  }
  return sector_size_bytes / block_bytes;
}

std::uint64_t Geometry::TotalBlocks() const {
  const unsigned __int128 total =
      static_cast<unsigned __int128>(BlocksPerSector()) * sector_count;
  if (total >> 64) throw SizeError("device has 2^64 or more blocks");
  return static_cast<std::uint64_t>(total);
}

std::uint64_t Geometry::TotalBytes() const {
  const unsigned __int128 total =
      static_cast<unsigned __int128>(sector_size_bytes) * sector_count;
  if (total >> 64) throw SizeError("device has 2^64 or more bytes");
  return static_cast<std::uint64_t>(total);
}

void Geometry::Validate() const {
  const std::uint64_t j = BlocksPerSector();
  if (sector_count == 0) throw SizeError("device has no sectors");
  if (j > kMaxBlocksPerSector) {
    throw SizeError("sector holds " + std::to_string(j) +
                    " blocks; at most 2^20 blocks per sector are allowed");
  }
  TotalBlocks();
}

Block EncodeSectorNumber(std::uint64_t sector, std::size_t block_bytes) {
  Block b(block_bytes);
  const std::size_t used = std::min<std::size_t>(8, block_bytes);
  if (used < 8 && (sector >> (8 * used)) != 0) {
    throw SizeError("sector " + std::to_string(sector) + " does not fit a " +
                    std::to_string(block_bytes * 8) + "-bit block");
  }
  for (std::size_t i = 0; i < used; ++i) {
    b[block_bytes - 1 - i] = static_cast<std::uint8_t>(sector >> (8 * i));
  }
  return b;
}

std::optional<std::uint64_t> DecodeSectorNumber(const Block& b) {
  const std::size_t used = std::min<std::size_t>(8, b.size());
  for (std::size_t i = 0; i + used < b.size(); ++i) {
    if (b[i] != 0) return std::nullopt;
  }
  std::uint64_t sector = 0;
  for (std::size_t i = b.size() - used; i < b.size(); ++i) {
    sector = (sector << 8) | b[i];
  }
  return sector;
}

std::vector<Block> TweakSchedule(const BlockCipher& tweak_cipher,
                                 const Block& sector_input, std::size_t count,
                                 const gf::FieldSpec& field) {
  std::vector<Block> tweaks;
  if (count == 0) return tweaks;
  tweaks.reserve(count);
  tweaks.push_back(EncryptBlock(tweak_cipher, sector_input));
  for (std::size_t j = 1; j < count; ++j) {
    tweaks.push_back(gf::MulAlpha(tweaks.back(), field));
  }
  return tweaks;
}

std::vector<Block> TweakSchedule(const BlockCipher& tweak_cipher,
                                 std::uint64_t sector, std::size_t count,
                                 const gf::FieldSpec& field) {
  return TweakSchedule(tweak_cipher,
                       EncodeSectorNumber(sector, tweak_cipher.block_bytes()),
                       count, field);
}

XtsCipher::XtsCipher(CipherKind kind, const XtsKey& key)
    : XtsCipher(MakeCipher(kind, key.data_key),
                MakeCipher(kind, key.tweak_key)) {}

XtsCipher::XtsCipher(std::unique_ptr<BlockCipher> data_cipher,
                     std::unique_ptr<BlockCipher> tweak_cipher)
    : data_(std::move(data_cipher)), tweak_(std::move(tweak_cipher)) {
  if (!data_ || !tweak_) throw ContractError("XtsCipher needs two ciphers");
  if (data_->block_bytes() != tweak_->block_bytes()) {
    throw ContractError("data and tweak ciphers differ in block width");
  }
  field_ = gf::FieldSpec::ForWidth(data_->block_bits());
}

template <bool kEncrypt>
void XtsCipher::Process(std::uint64_t sector,
                        std::span<const std::uint8_t> in,
                        std::span<std::uint8_t> out) const {
  const std::size_t bs = block_bytes();
  if (in.size() != out.size()) {
    throw ContractError("sector input and output differ in length");
  }
  if (in.empty() || in.size() % bs != 0) {
    throw SizeError("sector of " + std::to_string(in.size()) +
                    " bytes is not a positive multiple of " +
                    std::to_string(bs) + "-byte blocks");
  }
  if (in.size() / bs > kMaxBlocksPerSector) {
    throw SizeError("sector holds " + std::to_string(in.size() / bs) +
                    " blocks; at most 2^20 blocks per sector are allowed");
  }
  if (in.data() != out.data()) std::copy(in.begin(), in.end(), out.begin());

  Block tweak = EncodeSectorNumber(sector, bs);
  tweak_->EncryptInPlace(tweak.bytes());
  const std::span<std::uint8_t> t = tweak.bytes();

  for (std::size_t off = 0; off < out.size(); off += bs) {
    const std::span<std::uint8_t> blk = out.subspan(off, bs);
    XorInto(blk, t);
    if constexpr (kEncrypt) {
      data_->EncryptInPlace(blk);
    } else {
      data_->DecryptInPlace(blk);
    }
    XorInto(blk, t);
    gf::MulAlphaInPlace(t, field_);
  }
}

void XtsCipher::EncryptSector(std::uint64_t sector,
                              std::span<const std::uint8_t> in,
                              std::span<std::uint8_t> out) const {
  Process<true>(sector, in, out);
}

void XtsCipher::DecryptSector(std::uint64_t sector,
                              std::span<const std::uint8_t> in,
                              std::span<std::uint8_t> out) const {
  Process<false>(sector, in, out);
}

std::vector<std::uint8_t> XtsCipher::EncryptSector(
    std::uint64_t sector, std::span<const std::uint8_t> plaintext) const {
  std::vector<std::uint8_t> out(plaintext.size());
  Process<true>(sector, plaintext, out);
  return out;
}

std::vector<std::uint8_t> XtsCipher::DecryptSector(
    std::uint64_t sector, std::span<const std::uint8_t> ciphertext) const {
  std::vector<std::uint8_t> out(ciphertext.size());
  Process<false>(sector, ciphertext, out);
  return out;
}

Block XtsCipher::TweakAt(const Block& sector_input, std::uint64_t j) const {
  return gf::AlphaPow(EncryptBlock(*tweak_, sector_input), j, field_);
}

Block XtsCipher::EncryptBlockAt(const Block& sector_input, std::uint64_t j,
                                const Block& p) const {
  const Block t = TweakAt(sector_input, j);
  return EncryptBlock(*data_, p ^ t) ^ t;
}

Block XtsCipher::DecryptBlockAt(const Block& sector_input, std::uint64_t j,
                                const Block& c) const {
  const Block t = TweakAt(sector_input, j);
  return DecryptBlock(*data_, c ^ t) ^ t;
}

}  // namespace xtskit
