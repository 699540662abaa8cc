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

#ifndef DETOURKIT_RNG_H_
#define DETOURKIT_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace detourkit {

using Rng = std::mt19937_64;

inline constexpr uint64_t kDefaultSeed = 0x5eed'de70'0c17'2026ULL;

// SplitMix64 finalizer.
constexpr uint64_t Mix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic child seed for a keyed sub-computation. Independent of call
// order, so results do not depend on scheduling.
inline uint64_t DeriveSeed(uint64_t master, std::initializer_list<uint64_t> key) {
  uint64_t h = Mix64(master);
  for (uint64_t k : key) h = Mix64(h ^ Mix64(k));
  return h;
}

}  // namespace detourkit

#endif  // DETOURKIT_RNG_H_
