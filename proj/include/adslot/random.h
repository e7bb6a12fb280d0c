// Copyright 2026 The adslot Authors.
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

// Portable random draws on top of std::mt19937_64. The standard
// distributions are implementation-defined; these are not, so seeded output
// is the same under every standard library.

#ifndef ADSLOT_RANDOM_H_
#define ADSLOT_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace adslot {

// Uniform integer in [0, bound) by rejection sampling. Requires bound > 0.
inline uint64_t UniformIndex(std::mt19937_64& rng, uint64_t bound) {
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

// Uniform double in the open interval (0, 1).
inline double UniformOpen(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

inline double UniformRange(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * UniformOpen(rng);
}

// Fisher-Yates over the first `count` positions: afterwards they hold a
// uniformly random ordered sample of the vector.
template <typename T>
void PartialShuffle(std::vector<T>& items, size_t count, std::mt19937_64& rng) {
  for (size_t i = 0; i < count && i + 1 < items.size(); ++i) {
    const size_t j = i + UniformIndex(rng, items.size() - i);
    std::swap(items[i], items[j]);
  }
}

}  // namespace adslot

#endif  // ADSLOT_RANDOM_H_
