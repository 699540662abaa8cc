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

#include "detourkit/field64.h"

#include <cstdio>
#include <stdexcept>

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define DETOURKIT_HAVE_CLMUL 1
#include <immintrin.h>
#endif

namespace detourkit {
namespace {

struct Wide {
  uint64_t hi;
  uint64_t lo;
};

// Carryless 64x64 -> 128 product using a 4-bit window over `b`.
Wide ClmulPortable(uint64_t a, uint64_t b) {
  // table[i] = a * i for the 16 polynomials i of degree < 4 (up to 67 bits).
  Wide table[16];
  table[0] = {0, 0};
  table[1] = {0, a};
  for (int i = 2; i < 16; i += 2) {
    const Wide half = table[i / 2];
    table[i] = {(half.hi << 1) | (half.lo >> 63), half.lo << 1};
    table[i + 1] = {table[i].hi, table[i].lo ^ a};
  }
  Wide acc{0, 0};
  for (int shift = 60; shift >= 0; shift -= 4) {
    acc.hi = (acc.hi << 4) | (acc.lo >> 60);
    acc.lo <<= 4;
    const Wide& t = table[(b >> shift) & 0xF];
    acc.hi ^= t.hi;
    acc.lo ^= t.lo;
  }
  return acc;
}

// Reduces hi * x^64 + lo using x^64 = x^4 + x^3 + x + 1.
uint64_t Reduce(uint64_t hi, uint64_t lo) {
  // hi * (x^4 + x^3 + x + 1) spills at most 4 bits past x^63.
  const uint64_t spill = (hi >> 60) ^ (hi >> 61) ^ (hi >> 63);
  const uint64_t folded = hi ^ (hi << 1) ^ (hi << 3) ^ (hi << 4);
  const uint64_t spill_folded = spill ^ (spill << 1) ^ (spill << 3) ^ (spill << 4);
  return lo ^ folded ^ spill_folded;
}

#ifdef DETOURKIT_HAVE_CLMUL
__attribute__((target("pclmul,sse2"))) uint64_t MulClmul(uint64_t a,
                                                          uint64_t b) {
  const __m128i va = _mm_cvtsi64_si128(static_cast<long long>(a));
  const __m128i vb = _mm_cvtsi64_si128(static_cast<long long>(b));
  const __m128i prod = _mm_clmulepi64_si128(va, vb, 0x00);
  const uint64_t lo = static_cast<uint64_t>(_mm_cvtsi128_si64(prod));
  const uint64_t hi =
      static_cast<uint64_t>(_mm_cvtsi128_si64(_mm_unpackhi_epi64(prod, prod)));
  return Reduce(hi, lo);
}

bool DetectClmul() { return __builtin_cpu_supports("pclmul"); }
#else
bool DetectClmul() { return false; }
#endif

const bool kHasClmul = DetectClmul();

}  // namespace

FieldElem MulPortable(FieldElem a, FieldElem b) {
  const Wide p = ClmulPortable(a.bits(), b.bits());
  return FieldElem(Reduce(p.hi, p.lo));
}

bool HardwareMulAvailable() { return kHasClmul; }

FieldElem MulHardware(FieldElem a, FieldElem b) {
#ifdef DETOURKIT_HAVE_CLMUL
  if (kHasClmul) return FieldElem(MulClmul(a.bits(), b.bits()));
#endif
  return MulPortable(a, b);
}

FieldElem Mul(FieldElem a, FieldElem b) {
#ifdef DETOURKIT_HAVE_CLMUL
  if (kHasClmul) return FieldElem(MulClmul(a.bits(), b.bits()));
#endif
  return MulPortable(a, b);
}

FieldElem Square(FieldElem a) { return Mul(a, a); }

FieldElem Pow(FieldElem a, uint64_t exponent) {
  FieldElem result = FieldElem::One();
  FieldElem base = a;
  while (exponent != 0) {
    if (exponent & 1) result = Mul(result, base);
    base = Square(base);
    exponent >>= 1;
  }
  return result;
}

FieldElem Inverse(FieldElem a) {
  if (a.is_zero()) throw std::domain_error("zero has no inverse in GF(2^64)");
  return Pow(a, ~uint64_t{0} - 1);  // 2^64 - 2
}

std::string ToHex(FieldElem a) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(a.bits()));
  return std::string(buf, 16);
}

std::optional<FieldElem> FromHex(std::string_view hex) {
  if (hex.size() != 16) return std::nullopt;
  uint64_t bits = 0;
  for (char c : hex) {
    int digit;
    if (c >= '0' && c <= '9') {
      digit = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      digit = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      digit = c - 'A' + 10;
    } else {
      return std::nullopt;
    }
    bits = (bits << 4) | static_cast<uint64_t>(digit);
  }
  return FieldElem(bits);
}

}  // namespace detourkit
