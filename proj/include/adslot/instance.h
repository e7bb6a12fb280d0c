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

// Seeded synthetic instances for tests and benchmarks.

#ifndef ADSLOT_INSTANCE_H_
#define ADSLOT_INSTANCE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "adslot/core.h"
#include "adslot/relevance.h"

namespace adslot {

struct Instance {
  ProgramSpec program;
  AdInventory inventory;
  RelevanceMatrix rel;
};

struct RandomInstanceOptions {
  // HV ads get valences in (0.5, 1), LV ads in (0, 0.5). The first
  // ceil(P/2) ads are HV unless `high_ads` is set.
  int high_ads = -1;
  double rel_min = -1.0;
  double rel_max = 1.0;
};

// `slot_count` + 1 scenes with uniform valences, `num_ads` ads, uniform
// relevance. Ids are s01.., a01...
Instance RandomInstance(int num_ads, int slot_count, uint64_t seed,
                        const RandomInstanceOptions& options = {});

// Non-negative random keyframe features (like post-ReLU activations) for
// each id.
std::vector<KeyframeFeatures> RandomFeatures(
    const std::vector<std::string>& ids, int frames, int dimension,
    uint64_t seed);

}  // namespace adslot

#endif  // ADSLOT_INSTANCE_H_
