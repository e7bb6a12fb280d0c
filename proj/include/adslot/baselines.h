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

#ifndef ADSLOT_BASELINES_H_
#define ADSLOT_BASELINES_H_

#include <cstdint>

#include "adslot/core.h"

namespace adslot {

// Head slot used by baseline schedules: before the first scene.
inline constexpr int kHeadSlot = 0;

// Slot holding the second ad group of TrivialSchedule(): right before scene
// ceil(N/2) + 1, which is scene 7 of a 12-scene program.
int TrivialMidpointSlot(const ProgramSpec& program);

// Picks k/2 HV and k/2 LV ads uniformly at random, shuffles them, then puts
// the first k/2 at the program head and the rest at TrivialMidpointSlot().
// Rank gives the playback order inside a slot. Randomness comes from
// std::mt19937_64 seeded with `seed`, with bounded draws by rejection
// sampling, so a seed reproduces the same schedule on every platform.
// Throws kInfeasibleInventory or kInfeasibleK.
Schedule TrivialSchedule(const ProgramSpec& program,
                         const AdInventory& inventory, int k, uint64_t seed);

}  // namespace adslot

#endif  // ADSLOT_BASELINES_H_
