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

#include "xtskit/device.h"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>

#include "xtskit/error.h"

namespace xtskit {

DeviceCrypter::DeviceCrypter(const Geometry& geometry, const Keyring& keyring,
                             CipherKind kind)
    : geometry_(geometry) {
  if (geometry_.block_bytes != BlockBytes(kind)) {
    throw ContractError("geometry block size does not match " +
                        std::string(CipherName(kind)));
  }
  geometry_.Validate();
  plan_ = PlanScopes(geometry_, keyring.policy);
  if (keyring.keys.size() < plan_.keys_needed) {
    throw PlanInfeasibleError(
        "keyring holds " + std::to_string(keyring.keys.size()) +
        " keys but the " + std::string(ScopeKindName(keyring.policy.kind)) +
        " policy needs " + std::to_string(plan_.keys_needed) + " for " +
        std::to_string(geometry_.sector_count) + " sectors");
  }
  ciphers_.reserve(plan_.keys_needed);
  for (std::uint64_t i = 0; i < plan_.keys_needed; ++i) {
    const XtsKey& key = keyring.keys[i];
    if (key.data_key.size() != KeyBytes(kind) ||
        key.tweak_key.size() != KeyBytes(kind)) {
      throw FormatError("key " + std::to_string(i) + " is not a " +
                        std::string(CipherName(kind)) + " key");
    }
    ciphers_.emplace_back(kind, key);
  }
}

std::uint64_t DeviceCrypter::KeyIndexFor(std::uint64_t sector) const {
  return KeyIndex(plan_.policy, sector, geometry_);
}

void DeviceCrypter::ProcessSectors(std::uint64_t first,
                                   std::span<std::uint8_t> data,
                                   Direction direction, unsigned jobs) const {
  const std::size_t ss = geometry_.sector_size_bytes;
  if (data.size() % ss != 0) {
    throw SizeError("buffer is not a whole number of sectors");
  }
  const std::uint64_t count = data.size() / ss;
  if (first + count > geometry_.sector_count) {
    throw SizeError("sector range runs past the end of the device");
  }

  const auto run = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const std::uint64_t n = first + i;
      const XtsCipher& xts = ciphers_[KeyIndexFor(n)];
      const std::span<std::uint8_t> sector = data.subspan(i * ss, ss);
      if (direction == Direction::kEncrypt) {
        xts.EncryptSector(n, sector, sector);
      } else {
        xts.DecryptSector(n, sector, sector);
      }
    }
  };

  const std::uint64_t workers =
      std::min<std::uint64_t>(std::max(1u, jobs), count);
  if (workers <= 1) {
    run(0, count);
    return;
  }

  std::exception_ptr failure;
  std::mutex failure_mu;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t begin = count * w / workers;
      const std::uint64_t end = count * (w + 1) / workers;
      pool.emplace_back([&, begin, end] {
        try {
          run(begin, end);
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

std::vector<std::uint8_t> DeviceCrypter::Process(
    std::span<const std::uint8_t> image, Direction direction,
    const ProcessOptions& options) const {
  if (image.size() != geometry_.TotalBytes()) {
    throw SizeError("image of " + std::to_string(image.size()) +
                    " bytes does not match " +
                    std::to_string(geometry_.sector_count) + " sectors of " +
                    std::to_string(geometry_.sector_size_bytes) + " bytes");
  }
  std::vector<std::uint8_t> out(image.begin(), image.end());
  const unsigned jobs =
      options.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency())
                        : options.jobs;
  ProcessSectors(0, out, direction, jobs);
  return out;
}

void DeviceCrypter::Process(std::istream& in, std::ostream& out,
                            Direction direction,
                            const ProcessOptions& options) const {
  const std::uint64_t ss = geometry_.sector_size_bytes;
  const std::uint64_t per_chunk =
      std::max<std::uint64_t>(1, options.chunk_bytes / ss);
  const unsigned jobs =
      options.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency())
                        : options.jobs;

  std::vector<std::uint8_t> buf;
  for (std::uint64_t first = 0; first < geometry_.sector_count;) {
    const std::uint64_t n =
        std::min(per_chunk, geometry_.sector_count - first);
    buf.resize(n * ss);
    in.read(reinterpret_cast<char*>(buf.data()),
            static_cast<std::streamsize>(buf.size()));
    if (static_cast<std::uint64_t>(in.gcount()) != buf.size()) {
      throw SizeError("image ended inside sector " +
                      std::to_string(first + in.gcount() / ss) + " of " +
                      std::to_string(geometry_.sector_count));
    }
    ProcessSectors(first, buf, direction, jobs);
    out.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<std::streamsize>(buf.size()));
    if (!out) throw IoError("write failed");
    first += n;
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw SizeError("image is longer than " +
                    std::to_string(geometry_.sector_count) + " sectors");
  }
}

}  // namespace xtskit
