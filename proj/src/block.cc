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

#include "xtskit/block.h"

#include <algorithm>

#include "xtskit/error.h"

namespace xtskit {

namespace {

int HexNibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string ToHex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0x0f]);
  }
  return out;
}

std::vector<std::uint8_t> FromHex(std::string_view hex) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.size() % 2 != 0) {
    throw FormatError("hex string has odd length " +
                      std::to_string(hex.size()));
  }
  std::vector<std::uint8_t> out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int hi = HexNibble(hex[2 * i]);
    const int lo = HexNibble(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) {
      throw FormatError("invalid hex digit in \"" + std::string(hex) + "\"");
    }
    out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return out;
}

Block::Block(std::size_t size_bytes) {
  if (size_bytes == 0 || size_bytes > kMaxBytes) {
    throw ContractError("block size " + std::to_string(size_bytes) +
                        " outside 1.." + std::to_string(kMaxBytes));
  }
  size_ = static_cast<std::uint8_t>(size_bytes);
}

Block Block::FromBytes(std::span<const std::uint8_t> bytes) {
  Block b(bytes.size());
  std::copy(bytes.begin(), bytes.end(), b.bytes_.begin());
  return b;
}

Block Block::FromHex(std::string_view hex) {
  const std::vector<std::uint8_t> raw = xtskit::FromHex(hex);
  if (raw.empty() || raw.size() > kMaxBytes) {
    throw FormatError("block hex must encode 1.." + std::to_string(kMaxBytes) +
                      " bytes, got " + std::to_string(raw.size()));
  }
  return FromBytes(raw);
}

bool Block::IsZero() const {
  return std::all_of(bytes_.begin(), bytes_.begin() + size_,
                     [](std::uint8_t b) { return b == 0; });
}

std::string Block::ToHex() const { return xtskit::ToHex(bytes()); }

Block& Block::operator^=(const Block& other) {
  if (other.size_ != size_) {
    throw ContractError("xor of blocks with different widths");
  }
  for (std::size_t i = 0; i < size_; ++i) bytes_[i] ^= other.bytes_[i];
  return *this;
}

}  // namespace xtskit
