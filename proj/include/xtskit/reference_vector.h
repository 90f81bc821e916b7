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

// Known-answer vector: AES-XTS-128, one sector of two blocks.
//
//   N    = 00000000000000000000000000000001
//   K    = 11111111111111111111111111111111
//   K_T  = 22222222222222222222222222222222
//   P_0  = 44444444444444444444444444444444
//   P_1  = 88888888888888888888888888888888

#ifndef XTSKIT_REFERENCE_VECTOR_H_
#define XTSKIT_REFERENCE_VECTOR_H_

#include <array>
#include <string>
#include <vector>

namespace xtskit {

struct ExpectedValue {
  std::string name;
  std::string hex;
};

using ExpectedTable = std::array<ExpectedValue, 6>;

// T_0, T_1, E_K(P_0 ^ T_0), E_K(P_1 ^ T_1), C_0, C_1.
const ExpectedTable& ReferenceExpected();

struct ReferenceLine {
  std::string name;
  std::string actual;
  std::string expected;  // empty for lines that are only printed
  bool matches = true;
};

struct ReferenceReport {
  std::vector<ReferenceLine> lines;
  bool AllMatch() const;
  std::string ToText() const;
};

// Recomputes the vector through the xts, gf and cipher modules and checks
// each asserted line against `expected`.
ReferenceReport RunReferenceVector(
    const ExpectedTable& expected = ReferenceExpected());

}  // namespace xtskit

#endif  // XTSKIT_REFERENCE_VECTOR_H_
