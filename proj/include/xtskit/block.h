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

#ifndef XTSKIT_BLOCK_H_
#define XTSKIT_BLOCK_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace xtskit {

// One n-bit cipher block, 2 to 16 bytes wide. The same bytes are read as
// an element of GF(2^n): byte 0 holds the low-order coefficients
// a_7..a_0, byte n/8-1 holds a_{n-1}..a_{n-8}.
//
// Bytes past size() are kept zero, so defaulted comparison is exact.
class Block {
 public:
  static constexpr std::size_t kMaxBytes = 16;

  Block() = default;
  // All-zero block of `size_bytes` bytes.
  explicit Block(std::size_t size_bytes);

  static Block FromBytes(std::span<const std::uint8_t> bytes);
  // Lowercase or uppercase hex, byte 0 first, optional "0x" prefix.
  static Block FromHex(std::string_view hex);

  std::size_t size() const { return size_; }
  std::size_t bits() const { return std::size_t{size_} * 8; }

  std::uint8_t* data() { return bytes_.data(); }
  const std::uint8_t* data() const { return bytes_.data(); }
  std::span<std::uint8_t> bytes() { return {bytes_.data(), size_}; }
  std::span<const std::uint8_t> bytes() const { return {bytes_.data(), size_}; }

  std::uint8_t& operator[](std::size_t i) { return bytes_[i]; }
  std::uint8_t operator[](std::size_t i) const { return bytes_[i]; }

  bool IsZero() const;

  // Lowercase hex, byte 0 first, no prefix.
  std::string ToHex() const;

  Block& operator^=(const Block& other);
  friend Block operator^(Block a, const Block& b) { return a ^= b; }

  friend bool operator==(const Block&, const Block&) = default;

 private:
  std::array<std::uint8_t, kMaxBytes> bytes_{};
  std::uint8_t size_ = 0;
};

// Hex codec shared by blocks, keys and transcripts.
std::string ToHex(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> FromHex(std::string_view hex);

// dst ^= src over min-length; callers pass equal lengths.
inline void XorInto(std::span<std::uint8_t> dst,
                    std::span<const std::uint8_t> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

}  // namespace xtskit

template <>
struct std::hash<xtskit::Block> {
  std::size_t operator()(const xtskit::Block& b) const noexcept {
    // FNV-1a
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint8_t byte : b.bytes()) {
      h ^= byte;
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h ^ b.size());
  }
};

#endif  // XTSKIT_BLOCK_H_
