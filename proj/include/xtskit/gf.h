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

// Arithmetic in GF(2^n) = GF(2)[x] / (x^n + r(x)) on Block values.
//
// Only what tweak generation needs is fast (MulAlpha). Mul is a plain
// shift-and-xor product with bit-by-bit reduction and exists as the
// reference the fast path is tested against. Nothing here is constant
// time.

#ifndef XTSKIT_GF_H_
#define XTSKIT_GF_H_

#include <cstddef>
#include <cstdint>
#include <span>

#include "xtskit/block.h"

namespace xtskit::gf {

struct FieldSpec {
  std::size_t width_bits = 128;
  // r(x) as an n-bit element; the modulus is x^n + r(x).
  Block reduction;

  std::size_t width_bytes() const { return width_bits / 8; }

  // x^128 + x^7 + x^2 + x + 1 (reduction byte 0 = 0x87).
  static FieldSpec Standard();
  // Default moduli for the toy widths 16, 24 and 32:
  //   16: x^16 + x^5 + x^3 + x + 1
  //   24: x^24 + x^4 + x^3 + x + 1
  //   32: x^32 + x^7 + x^3 + x^2 + 1
  // 128 returns Standard().
  static FieldSpec ForWidth(std::size_t width_bits);
  // Modulus x^n + r with r given as an integer (n <= 64 bits of r used).
  static FieldSpec FromReduction(std::size_t width_bits, std::uint64_t r);
};

// The polynomial 1.
Block One(const FieldSpec& spec);
// The polynomial x, i.e. alpha.
Block Alpha(const FieldSpec& spec);

// b * alpha: one-bit left shift carrying from byte 0 toward the last byte,
// folding the reduction into the block when the top bit falls out.
Block MulAlpha(const Block& b, const FieldSpec& spec);

// In-place variant for the tweak chain; `b` must be width_bytes() long.
void MulAlphaInPlace(std::span<std::uint8_t> b, const FieldSpec& spec);

// b * alpha^j.
Block AlphaPow(const Block& b, std::uint64_t j, const FieldSpec& spec);

// School-book carry-less product followed by reduction mod x^n + r.
Block Mul(const Block& a, const Block& b, const FieldSpec& spec);

// True iff x^n + r has no factor of degree 1..n/2. Widths up to 32 are
// checked by trial division over every candidate divisor; wider fields
// (up to 128) use Rabin's test. Throws UnsupportedError otherwise.
bool VerifyIrreducible(const FieldSpec& spec);

namespace detail {
// Exposed for cross-checking the two irreducibility routes in tests.
bool IrreducibleByTrialDivision(const FieldSpec& spec);
bool IrreducibleByRabin(const FieldSpec& spec);
}  // namespace detail

}  // namespace xtskit::gf

#endif  // XTSKIT_GF_H_
