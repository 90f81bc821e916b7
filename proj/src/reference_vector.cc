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

#include "xtskit/reference_vector.h"

#include <algorithm>
#include <sstream>

#include "xtskit/xts.h"

namespace xtskit {

const ExpectedTable& ReferenceExpected() {
  static const ExpectedTable kTable = {{
      {"T_0", "6752ca5febca0f3fc8dc9dfc2a916295"},
      {"T_1", "49a494bfd6951f7e90b93bf95522c52a"},
      {"E_K(P_0^T_0)", "13f084e65a7ca361f74957c9b11c7710"},
      {"E_K(P_1^T_1)", "2cada9d22ad34bf19a226c2c824f0364"},
      {"C_0", "74a24eb9b1b6ac5e3f95ca359b8d1585"},
      {"C_1", "65093d6dfc46548f0a9b57d5d76dc64e"},
  }};
  return kTable;
}

bool ReferenceReport::AllMatch() const {
  return std::all_of(lines.begin(), lines.end(),
                     [](const ReferenceLine& l) { return l.matches; });
}

std::string ReferenceReport::ToText() const {
  std::ostringstream os;
  for (const ReferenceLine& l : lines) {
    os << "  " << l.name;
    for (std::size_t pad = l.name.size(); pad < 14; ++pad) os << ' ';
    os << "= " << l.actual;
    if (!l.expected.empty()) {
      os << (l.matches ? "  ok" : "  MISMATCH (expected " + l.expected + ")");
    }
    os << "\n";
  }
  return os.str();
}

ReferenceReport RunReferenceVector(const ExpectedTable& expected) {
  const std::uint64_t sector = 1;
  const std::vector<std::uint8_t> k(16, 0x11);
  const std::vector<std::uint8_t> kt(16, 0x22);
  const Block p0 = Block::FromHex("44444444444444444444444444444444");
  const Block p1 = Block::FromHex("88888888888888888888888888888888");

  const XtsCipher xts(CipherKind::kAes128, XtsKey{k, kt});
  const std::vector<Block> tweaks =
      TweakSchedule(xts.tweak_cipher(), sector, 2, xts.field());
  const Block in0 = p0 ^ tweaks[0];
  const Block in1 = p1 ^ tweaks[1];
  const Block e0 = EncryptBlock(xts.data_cipher(), in0);
  const Block e1 = EncryptBlock(xts.data_cipher(), in1);

  std::vector<std::uint8_t> plaintext(p0.bytes().begin(), p0.bytes().end());
  plaintext.insert(plaintext.end(), p1.bytes().begin(), p1.bytes().end());
  const std::vector<std::uint8_t> c = xts.EncryptSector(sector, plaintext);
  const std::span<const std::uint8_t> cs(c);

  ReferenceReport r;
  const auto show = [&](std::string name, std::string actual) {
    r.lines.push_back({std::move(name), std::move(actual), "", true});
  };
  std::size_t next = 0;
  const auto check = [&](std::string actual) {
    const ExpectedValue& e = expected[next++];
    r.lines.push_back({e.name, actual, e.hex, actual == e.hex});
  };

  show("N", EncodeSectorNumber(sector).ToHex());
  show("K", ToHex(k));
  show("K_T", ToHex(kt));
  show("P_0", p0.ToHex());
  show("P_1", p1.ToHex());
  check(tweaks[0].ToHex());
  check(tweaks[1].ToHex());
  show("P_0^T_0", in0.ToHex());
  show("P_1^T_1", in1.ToHex());
  check(e0.ToHex());
  check(e1.ToHex());
  check(ToHex(cs.first(16)));
  check(ToHex(cs.subspan(16, 16)));
  return r;
}

}  // namespace xtskit
