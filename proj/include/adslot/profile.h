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

// Valence profile of a program with ads embedded, on a 0-100 scale.

#ifndef ADSLOT_PROFILE_H_
#define ADSLOT_PROFILE_H_

#include <string>
#include <vector>

#include "adslot/core.h"

namespace adslot {

enum class PointKind { kScene, kAd };

struct ProfilePoint {
  int position = 0;  // 1-based presentation order
  PointKind kind = PointKind::kScene;
  std::string entity_id;
  double valence_0_100 = 0.0;

  friend bool operator==(const ProfilePoint&, const ProfilePoint&) = default;
};

struct VpsProfile {
  std::vector<ProfilePoint> points;
};

// Scenes in program order with each slot's ads (by rank) right after the
// scene the slot follows; head-slot ads come before scene 1. Throws
// kUnknownAdId for ads missing from the inventory.
VpsProfile BuildProfile(const Schedule& schedule, const ProgramSpec& program,
                        const AdInventory& inventory);

// Sum of absolute valence jumps between consecutive points, 0-100 scale.
// Throws kTooShort with fewer than two points.
double TotalVariation(const VpsProfile& profile);

}  // namespace adslot

#endif  // ADSLOT_PROFILE_H_
