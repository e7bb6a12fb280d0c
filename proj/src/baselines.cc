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

#include "adslot/baselines.h"

#include <fmt/format.h>

#include <random>
#include <utility>
#include <vector>

#include "adslot/error.h"
#include "adslot/random.h"

namespace adslot {

int TrivialMidpointSlot(const ProgramSpec& program) {
  const int n = program.scene_count();
  // Scene ceil(N/2)+1 is preceded by slot ceil(N/2).
  return (n + 1) / 2;
}

Schedule TrivialSchedule(const ProgramSpec& program,
                         const AdInventory& inventory, int k, uint64_t seed) {
  if (k < 0 || k % 2 != 0) {
    throw Error(ErrorCode::kInfeasibleK,
                fmt::format("K={} must be even for polarity balance", k));
  }
  std::vector<int> high;
  std::vector<int> low;
  for (int j = 0; j < inventory.size(); ++j) {
    (inventory.ad(j).polarity() == Polarity::kHigh ? high : low).push_back(j);
  }
  if (static_cast<int>(high.size()) < k / 2 ||
      static_cast<int>(low.size()) < k / 2) {
    throw Error(ErrorCode::kInfeasibleInventory,
                fmt::format("K={} needs {} HV and {} LV ads; inventory has {} "
                            "HV and {} LV",
                            k, k / 2, k / 2, high.size(), low.size()));
  }

  std::mt19937_64 rng(seed);
  std::vector<int> picked;
  for (std::vector<int>* pool : {&high, &low}) {
    PartialShuffle(*pool, k / 2, rng);
    picked.insert(picked.end(), pool->begin(), pool->begin() + k / 2);
  }
  PartialShuffle(picked, picked.size(), rng);

  const int midpoint = TrivialMidpointSlot(program);
  Schedule schedule;
  for (int i = 0; i < k; ++i) {
    const bool head = i < k / 2;
    schedule.entries.push_back({head ? kHeadSlot : midpoint,
                                head ? i : i - k / 2,
                                inventory.ad(picked[i]).id});
  }
  return schedule;
}

}  // namespace adslot
