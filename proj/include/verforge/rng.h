// Copyright 2026 The ver-forge Authors.
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

#ifndef VERFORGE_RNG_H_
#define VERFORGE_RNG_H_

#include <cstdint>
#include <limits>
#include <random>

namespace verforge {

// Seeded generator whose outputs are identical on every platform: the engine
// sequence is fixed by the standard and bounded draws avoid the
// implementation-defined std distributions.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }

  // Uniform on [lo, hi] by rejection sampling.
  uint64_t UniformInt(uint64_t lo, uint64_t hi) {
    const uint64_t span = hi - lo;
    if (span == std::numeric_limits<uint64_t>::max()) return lo + Next();
    const uint64_t range = span + 1;
    const uint64_t max = std::numeric_limits<uint64_t>::max();
    const uint64_t rem = (max % range + 1) % range;
    while (true) {
      uint64_t x = Next();
      if (x <= max - rem) return lo + x % range;
    }
  }

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer; derives independent per-item seeds from a base seed.
inline uint64_t DeriveSeed(uint64_t base, uint64_t stream) {
  uint64_t z = base + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace verforge

#endif  // VERFORGE_RNG_H_
