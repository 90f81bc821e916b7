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

#ifndef XTSKIT_UNITS_H_
#define XTSKIT_UNITS_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace xtskit {

// "4096", "4KiB", "4 KiB", "16MiB", "1TiB", "2^12". Power-of-two IEC
// suffixes only (B, KiB, MiB, GiB, TiB, PiB, EiB); SI suffixes such as KB
// or MB are rejected with a FormatError.
std::uint64_t ParseSize(std::string_view text);

// Plain integer or "2^k".
std::uint64_t ParseCount(std::string_view text);

// Largest exact IEC unit: 4096 -> "4 KiB", 1536 -> "1536 B".
std::string FormatSize(std::uint64_t bytes);

}  // namespace xtskit

#endif  // XTSKIT_UNITS_H_
