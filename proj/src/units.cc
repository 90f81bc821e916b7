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

#include "xtskit/units.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <utility>

#include "xtskit/error.h"

namespace xtskit {

namespace {

constexpr std::array<std::pair<std::string_view, int>, 7> kIec = {{
    {"B", 0}, {"KiB", 10}, {"MiB", 20}, {"GiB", 30},
    {"TiB", 40}, {"PiB", 50}, {"EiB", 60},
}};

constexpr std::array<std::string_view, 14> kSi = {
    "K", "M", "G", "T", "P", "E", "k",
    "KB", "MB", "GB", "TB", "PB", "EB", "kB",
};

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::uint64_t ParseUnsigned(std::string_view digits, std::string_view whole) {
  std::uint64_t v = 0;
  const auto [end, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec != std::errc() || end != digits.data() + digits.size() ||
      digits.empty()) {
    throw FormatError("not a number: \"" + std::string(whole) + "\"");
  }
  return v;
}

std::uint64_t Shift(std::uint64_t v, int log2, std::string_view whole) {
  if (log2 >= 64 || (log2 > 0 && (v >> (64 - log2)) != 0)) {
    throw FormatError("size out of range: \"" + std::string(whole) + "\"");
  }
  return v << log2;
}

}  // namespace

std::uint64_t ParseCount(std::string_view text) {
  const std::string_view s = Trim(text);
  if (s.starts_with("2^")) {
    const std::uint64_t e = ParseUnsigned(s.substr(2), text);
    return Shift(1, static_cast<int>(std::min<std::uint64_t>(e, 64)), text);
  }
  return ParseUnsigned(s, text);
}

std::uint64_t ParseSize(std::string_view text) {
  const std::string_view s = Trim(text);
  std::size_t split = 0;
  if (s.starts_with("2^")) {
    split = 2;
    while (split < s.size() && std::isdigit(static_cast<unsigned char>(s[split]))) {
      ++split;
    }
  } else {
    while (split < s.size() && std::isdigit(static_cast<unsigned char>(s[split]))) {
      ++split;
    }
  }
  const std::uint64_t number = ParseCount(s.substr(0, split));
  const std::string_view suffix = Trim(s.substr(split));
  if (suffix.empty()) return number;

  for (const auto& [name, log2] : kIec) {
    if (suffix == name) return Shift(number, log2, text);
  }
  for (std::string_view si : kSi) {
    if (suffix == si) {
      throw FormatError(
          "size suffix \"" + std::string(suffix) +
          "\" is ambiguous; sizes use powers of two with IEC prefixes "
          "(KiB = 2^10, MiB = 2^20, TiB = 2^40 bytes)");
    }
  }
  throw FormatError("unknown size suffix \"" + std::string(suffix) + "\"");
}

std::string FormatSize(std::uint64_t bytes) {
  for (auto it = kIec.rbegin(); it != kIec.rend(); ++it) {
    const int log2 = it->second;
    if (log2 == 0) break;
    if (bytes != 0 && bytes % (std::uint64_t{1} << log2) == 0) {
      return std::to_string(bytes >> log2) + " " + std::string(it->first);
    }
  }
  return std::to_string(bytes) + " B";
}

}  // namespace xtskit
