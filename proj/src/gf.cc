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

#include "xtskit/gf.h"

#include <bit>
#include <string>
#include <vector>

#include "xtskit/error.h"

namespace xtskit::gf {

namespace {

void CheckWidth(const Block& b, const FieldSpec& spec, const char* what) {
  if (b.size() != spec.width_bytes()) {
    throw ContractError(std::string(what) + ": block of " +
                        std::to_string(b.bits()) + " bits in a " +
                        std::to_string(spec.width_bits) + "-bit field");
  }
}

bool GetBit(std::span<const std::uint8_t> v, std::size_t i) {
  return (v[i / 8] >> (i % 8)) & 1;
}

void FlipBit(std::span<std::uint8_t> v, std::size_t i) {
  v[i / 8] ^= static_cast<std::uint8_t>(1u << (i % 8));
}

// Dense GF(2)[x] polynomial, bit i = coefficient of x^i. Only used by the
// irreducibility checks, where degrees reach n + 1 = 129.
class Poly {
 public:
  Poly() = default;

  static Poly FromBlock(const Block& b) {
    Poly p;
    for (std::size_t i = 0; i < b.bits(); ++i) {
      if (GetBit(b.bytes(), i)) p.Flip(i);
    }
    return p;
  }

  // x^n + r
  static Poly Modulus(const FieldSpec& spec) {
    Poly p = FromBlock(spec.reduction);
    p.Flip(spec.width_bits);
    return p;
  }

  int Degree() const {
    for (std::size_t w = words_.size(); w-- > 0;) {
      if (words_[w] != 0) {
        return static_cast<int>(w * 64 + 63 - std::countl_zero(words_[w]));
      }
    }
    return -1;
  }

  bool IsOne() const { return Degree() == 0; }

  void Flip(std::size_t i) {
    if (i / 64 >= words_.size()) words_.resize(i / 64 + 1, 0);
    words_[i / 64] ^= std::uint64_t{1} << (i % 64);
  }

  // *this ^= other * x^shift
  void XorShifted(const Poly& other, std::size_t shift) {
    const int d = other.Degree();
    for (int i = 0; i <= d; ++i) {
      if ((other.words_[i / 64] >> (i % 64)) & 1) Flip(i + shift);
    }
  }

  Poly Mod(const Poly& divisor) const {
    Poly r = *this;
    const int dd = divisor.Degree();
    for (int d = r.Degree(); d >= dd; d = r.Degree()) {
      r.XorShifted(divisor, static_cast<std::size_t>(d - dd));
    }
    return r;
  }

 private:
  std::vector<std::uint64_t> words_;
};

Poly Gcd(Poly a, Poly b) {
  while (b.Degree() >= 0) {
    Poly r = a.Mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::size_t> PrimeFactors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void CheckSpec(const FieldSpec& spec) {
  if (spec.width_bits == 0 || spec.width_bits % 8 != 0 ||
      spec.width_bits > Block::kMaxBytes * 8) {
    throw UnsupportedError("unsupported field width " +
                           std::to_string(spec.width_bits));
  }
  CheckWidth(spec.reduction, spec, "reduction");
}

}  // namespace

FieldSpec FieldSpec::Standard() { return FromReduction(128, 0x87); }

FieldSpec FieldSpec::ForWidth(std::size_t width_bits) {
  switch (width_bits) {
    case 16:
      return FromReduction(16, 0x2b);
    case 24:
      return FromReduction(24, 0x1b);
    case 32:
      return FromReduction(32, 0x8d);
    case 128:
      return Standard();
    default:
      throw UnsupportedError("no default modulus for width " +
                             std::to_string(width_bits));
  }
}

FieldSpec FieldSpec::FromReduction(std::size_t width_bits, std::uint64_t r) {
  if (width_bits == 0 || width_bits % 8 != 0 ||
      width_bits > Block::kMaxBytes * 8) {
    throw UnsupportedError("unsupported field width " +
                           std::to_string(width_bits));
  }
  if (width_bits < 64 && (r >> width_bits) != 0) {
    throw ContractError("reduction does not fit below x^" +
                        std::to_string(width_bits));
  }
  FieldSpec spec;
  spec.width_bits = width_bits;
  spec.reduction = Block(width_bits / 8);
  for (std::size_t i = 0; i < spec.reduction.size() && i < 8; ++i) {
    spec.reduction[i] = static_cast<std::uint8_t>(r >> (8 * i));
  }
  return spec;
}

Block One(const FieldSpec& spec) {
  Block b(spec.width_bytes());
  b[0] = 1;
  return b;
}

Block Alpha(const FieldSpec& spec) {
  Block b(spec.width_bytes());
  b[0] = 2;
  return b;
}

void MulAlphaInPlace(std::span<std::uint8_t> b, const FieldSpec& spec) {
  if (b.size() != spec.width_bytes()) {
    throw ContractError("mul_alpha: block of " + std::to_string(b.size()) +
                        " bytes in a " + std::to_string(spec.width_bits) +
                        "-bit field");
  }
  std::uint8_t carry = 0;
  for (std::uint8_t& byte : b) {
    const std::uint8_t next = byte >> 7;
    byte = static_cast<std::uint8_t>((byte << 1) | carry);
    carry = next;
  }
  if (carry) XorInto(b, spec.reduction.bytes());
}

Block MulAlpha(const Block& b, const FieldSpec& spec) {
  CheckWidth(b, spec, "mul_alpha");
  Block out = b;
  MulAlphaInPlace(out.bytes(), spec);
  return out;
}

Block AlphaPow(const Block& b, std::uint64_t j, const FieldSpec& spec) {
  CheckWidth(b, spec, "alpha_pow");
  if (j <= 2 * spec.width_bits) {
    Block out = b;
    for (std::uint64_t i = 0; i < j; ++i) MulAlphaInPlace(out.bytes(), spec);
    return out;
  }
  // Square-and-multiply on alpha for large exponents.
  Block power = One(spec);
  Block base = Alpha(spec);
  for (std::uint64_t e = j; e != 0; e >>= 1) {
    if (e & 1) power = Mul(power, base, spec);
    base = Mul(base, base, spec);
  }
  return Mul(b, power, spec);
}

Block Mul(const Block& a, const Block& b, const FieldSpec& spec) {
  CheckWidth(a, spec, "mul");
  CheckWidth(b, spec, "mul");
  const std::size_t n = spec.width_bits;

  std::vector<std::uint8_t> product(2 * spec.width_bytes(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!GetBit(a.bytes(), i)) continue;
    for (std::size_t k = 0; k < n; ++k) {
      if (GetBit(b.bytes(), k)) FlipBit(product, i + k);
    }
  }

  // x^d = x^(d-n) * r(x) for d >= n, highest degree first.
  for (std::size_t d = 2 * n - 1; d >= n; --d) {
    if (!GetBit(product, d)) continue;
    FlipBit(product, d);
    for (std::size_t k = 0; k < n; ++k) {
      if (GetBit(spec.reduction.bytes(), k)) FlipBit(product, d - n + k);
    }
  }

  return Block::FromBytes(
      std::span<const std::uint8_t>(product).first(spec.width_bytes()));
}

namespace detail {

bool IrreducibleByTrialDivision(const FieldSpec& spec) {
  CheckSpec(spec);
  const std::size_t n = spec.width_bits;
  if (n > 32) {
    throw UnsupportedError("trial division needs width <= 32, got " +
                           std::to_string(n));
  }
  std::uint64_t f = std::uint64_t{1} << n;
  for (std::size_t i = 0; i < spec.reduction.size(); ++i) {
    f |= std::uint64_t{spec.reduction[i]} << (8 * i);
  }

  const auto mod = [](std::uint64_t a, std::uint64_t g) {
    const int dg = std::bit_width(g) - 1;
    for (int da = std::bit_width(a) - 1; a != 0 && da >= dg;
         da = std::bit_width(a) - 1) {
      a ^= g << (da - dg);
    }
    return a;
  };

  for (std::size_t d = 1; d <= n / 2; ++d) {
    for (std::uint64_t g = std::uint64_t{1} << d; g < (std::uint64_t{2} << d);
         ++g) {
      if (mod(f, g) == 0) return false;
    }
  }
  return true;
}

bool IrreducibleByRabin(const FieldSpec& spec) {
  CheckSpec(spec);
  const std::size_t n = spec.width_bits;
  const Poly f = Poly::Modulus(spec);
  const Block x = Alpha(spec);

  // x^(2^k) mod f by repeated squaring inside the quotient ring.
  const auto frobenius = [&](std::size_t k) {
    Block s = x;
    for (std::size_t i = 0; i < k; ++i) s = Mul(s, s, spec);
    return s;
  };

  if (frobenius(n) != x) return false;
  for (std::size_t p : PrimeFactors(n)) {
    const Block h = frobenius(n / p) ^ x;
    if (h.IsZero()) return false;
    if (!Gcd(f, Poly::FromBlock(h)).IsOne()) return false;
  }
  return true;
}

}  // namespace detail

bool VerifyIrreducible(const FieldSpec& spec) {
  CheckSpec(spec);
  if (spec.width_bits <= 32) return detail::IrreducibleByTrialDivision(spec);
  return detail::IrreducibleByRabin(spec);
}

}  // namespace xtskit::gf
