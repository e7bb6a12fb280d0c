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

#include "adslot/profile.h"

#include <fmt/format.h>

#include <cmath>

#include "adslot/error.h"

namespace adslot {

VpsProfile BuildProfile(const Schedule& schedule, const ProgramSpec& program,
                        const AdInventory& inventory) {
  const int n = program.scene_count();
  // Ads after scene s live in bucket s; bucket 0 is the program head.
  std::vector<std::vector<const ScheduleEntry*>> buckets(n + 1);
  const Schedule sorted = schedule.Sorted();
  for (const ScheduleEntry& e : sorted.entries) {
    if (!inventory.IndexOf(e.ad_id)) {
      throw Error(ErrorCode::kUnknownAdId,
                  fmt::format("ad '{}' is not in the inventory", e.ad_id));
    }
    if (e.slot < 0 || e.slot > n) {
      throw Error(ErrorCode::kInvalidArgument,
                  fmt::format("slot {} outside [0, {}]", e.slot, n));
    }
    buckets[e.slot].push_back(&e);
  }

  VpsProfile profile;
  auto append_ads = [&](int bucket) {
    for (const ScheduleEntry* e : buckets[bucket]) {
      const Ad& ad = inventory.ad(*inventory.IndexOf(e->ad_id));
      profile.points.push_back({static_cast<int>(profile.points.size()) + 1,
                                PointKind::kAd, ad.id,
                                100.0 * ad.valence.value()});
    }
  };
  append_ads(0);
  for (int s = 1; s <= n; ++s) {
    const Scene& scene = program.scenes()[s - 1];
    profile.points.push_back({static_cast<int>(profile.points.size()) + 1,
                              PointKind::kScene, scene.id,
                              100.0 * scene.valence.value()});
    append_ads(s);
  }
  return profile;
}

double TotalVariation(const VpsProfile& profile) {
  if (profile.points.size() < 2) {
    throw Error(ErrorCode::kTooShort,
                fmt::format("total variation needs 2 points, got {}",
                            profile.points.size()));
  }
  double total = 0.0;
  for (size_t i = 1; i < profile.points.size(); ++i) {
    total += std::abs(profile.points[i].valence_0_100 -
                      profile.points[i - 1].valence_0_100);
  }
  return total;
}

}  // namespace adslot
