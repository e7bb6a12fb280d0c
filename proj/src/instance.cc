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

#include "adslot/instance.h"

#include <fmt/format.h>

#include <random>

#include "adslot/random.h"

namespace adslot {

Instance RandomInstance(int num_ads, int slot_count, uint64_t seed,
                        const RandomInstanceOptions& options) {
  std::mt19937_64 rng(seed);
  std::vector<Scene> scenes;
  for (int i = 0; i <= slot_count; ++i) {
    scenes.push_back({fmt::format("s{:02}", i + 1), Valence(UniformOpen(rng))});
  }
  const int high = options.high_ads >= 0 ? options.high_ads : (num_ads + 1) / 2;
  std::vector<Ad> ads;
  for (int j = 0; j < num_ads; ++j) {
    // (0.5, 1) for HV; (0, 0.5) for LV.
    const double u = UniformOpen(rng);
    const double v = j < high ? 0.5 + 0.5 * u : 0.5 * (1.0 - u);
    ads.push_back({fmt::format("a{:02}", j + 1), Valence(v)});
  }
  std::vector<double> rel(scenes.size() * num_ads);
  for (double& r : rel) r = UniformRange(rng, options.rel_min, options.rel_max);
  const int rows = static_cast<int>(scenes.size());
  return Instance{ProgramSpec(std::move(scenes)), AdInventory(std::move(ads)),
                  RelevanceMatrix(rows, num_ads, std::move(rel))};
}

std::vector<KeyframeFeatures> RandomFeatures(
    const std::vector<std::string>& ids, int frames, int dimension,
    uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<KeyframeFeatures> result;
  for (const std::string& id : ids) {
    std::vector<FeatureVector> rows(frames, FeatureVector(dimension));
    for (FeatureVector& row : rows) {
      for (double& x : row) {
        // Roughly half the activations are zero.
        const double u = UniformRange(rng, -1.0, 1.0);
        x = u > 0.0 ? u : 0.0;
      }
      row[UniformIndex(rng, dimension)] += 0.01;
    }
    result.emplace_back(id, std::move(rows));
  }
  return result;
}

}  // namespace adslot
