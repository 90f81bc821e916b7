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

#ifndef XTSKIT_DEVICE_H_
#define XTSKIT_DEVICE_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "xtskit/cipher.h"
#include "xtskit/keyscope.h"
#include "xtskit/xts.h"

namespace xtskit {

enum class Direction { kEncrypt, kDecrypt };

struct ProcessOptions {
  // Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned jobs = 1;
  // Streaming chunk size in bytes, rounded down to whole sectors (at least
  // one sector).
  std::size_t chunk_bytes = std::size_t{16} << 20;
};

// Whole-image encryption/decryption with per-sector keys from a keyring.
// Sectors are independent, so the output does not depend on `jobs`.
class DeviceCrypter {
 public:
  // Throws PlanInfeasibleError if the keyring holds fewer keys than the
  // policy needs for `geometry`.
  DeviceCrypter(const Geometry& geometry, const Keyring& keyring,
                CipherKind kind);

  const Geometry& geometry() const { return geometry_; }
  const ScopePlan& plan() const { return plan_; }
  std::uint64_t KeyIndexFor(std::uint64_t sector) const;

  // Transforms sectors [first, first + n) held contiguously in `data`.
  void ProcessSectors(std::uint64_t first, std::span<std::uint8_t> data,
                      Direction direction, unsigned jobs) const;

  std::vector<std::uint8_t> Process(std::span<const std::uint8_t> image,
                                    Direction direction,
                                    const ProcessOptions& options = {}) const;
  // Streams exactly sector_count sectors from `in` to `out`.
  void Process(std::istream& in, std::ostream& out, Direction direction,
               const ProcessOptions& options = {}) const;

 private:
  Geometry geometry_;
  ScopePlan plan_;
  std::vector<XtsCipher> ciphers_;
};

inline std::vector<std::uint8_t> ProcessDevice(
    std::span<const std::uint8_t> image, const Geometry& geometry,
    const Keyring& keyring, CipherKind kind, Direction direction,
    const ProcessOptions& options = {}) {
  return DeviceCrypter(geometry, keyring, kind)
      .Process(image, direction, options);
}

}  // namespace xtskit

#endif  // XTSKIT_DEVICE_H_
