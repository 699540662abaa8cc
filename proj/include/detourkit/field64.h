// Copyright 2026 The detourkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Arithmetic in GF(2^64) = GF(2)[x] / (x^64 + x^4 + x^3 + x + 1).
//
// Elements are 64-bit words; bit i is the coefficient of x^i. Addition is
// XOR. Multiplication is a carryless product followed by reduction. Two
// multiply paths exist: a portable windowed shift-XOR routine and, on x86-64
// CPUs with PCLMULQDQ, a hardware path. Both produce identical bits.

#ifndef DETOURKIT_FIELD64_H_
#define DETOURKIT_FIELD64_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace detourkit {

// Low 64 bits of the modulus: x^4 + x^3 + x + 1.
inline constexpr uint64_t kFieldModulusLow = 0x1B;

class FieldElem {
 public:
  constexpr FieldElem() = default;
  constexpr explicit FieldElem(uint64_t bits) : bits_(bits) {}

  static constexpr FieldElem Zero() { return FieldElem(0); }
  static constexpr FieldElem One() { return FieldElem(1); }

  constexpr uint64_t bits() const { return bits_; }
  constexpr bool is_zero() const { return bits_ == 0; }

  friend constexpr FieldElem operator+(FieldElem a, FieldElem b) {
    return FieldElem(a.bits_ ^ b.bits_);
  }
  // Subtraction coincides with addition in characteristic 2.
  friend constexpr FieldElem operator-(FieldElem a, FieldElem b) {
    return a + b;
  }
  friend FieldElem operator*(FieldElem a, FieldElem b);

  FieldElem& operator+=(FieldElem o) {
    bits_ ^= o.bits_;
    return *this;
  }
  FieldElem& operator*=(FieldElem o) { return *this = *this * o; }

  friend constexpr bool operator==(FieldElem, FieldElem) = default;
  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;

 private:
  uint64_t bits_ = 0;
};

constexpr FieldElem Add(FieldElem a, FieldElem b) { return a + b; }
FieldElem Mul(FieldElem a, FieldElem b);

// Portable multiply; the canonical implementation.
FieldElem MulPortable(FieldElem a, FieldElem b);

// True when the running CPU supports the carryless-multiply instruction.
bool HardwareMulAvailable();
// Hardware multiply. Falls back to MulPortable when unavailable.
FieldElem MulHardware(FieldElem a, FieldElem b);

FieldElem Square(FieldElem a);
FieldElem Pow(FieldElem a, uint64_t exponent);
// a^(2^64 - 2). Throws std::domain_error for zero.
FieldElem Inverse(FieldElem a);

// Uniform element from a 64-bit generator (e.g. std::mt19937_64).
template <class Rng>
FieldElem SampleUniform(Rng& rng) {
  static_assert(sizeof(decltype(rng())) == 8, "needs a 64-bit generator");
  return FieldElem(static_cast<uint64_t>(rng()));
}

// 16 lowercase hex digits, most significant coefficient first.
std::string ToHex(FieldElem a);
std::optional<FieldElem> FromHex(std::string_view hex);

inline FieldElem operator*(FieldElem a, FieldElem b) { return Mul(a, b); }

}  // namespace detourkit

#endif  // DETOURKIT_FIELD64_H_
