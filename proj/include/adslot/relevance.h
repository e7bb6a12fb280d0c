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

// Scene/ad content relevance from precomputed keyframe feature vectors.

#ifndef ADSLOT_RELEVANCE_H_
#define ADSLOT_RELEVANCE_H_

#include <span>
#include <string>
#include <vector>

#include "adslot/core.h"

namespace adslot {

using FeatureVector = std::vector<double>;

// Keyframe features of one scene or ad: F frames of dimension D each.
class KeyframeFeatures {
 public:
  // Requires F >= 1, a common D >= 1 and no all-zero frame.
  KeyframeFeatures(std::string entity_id, std::vector<FeatureVector> frames);

  const std::string& entity_id() const { return entity_id_; }
  const std::vector<FeatureVector>& frames() const { return frames_; }
  int frame_count() const { return static_cast<int>(frames_.size()); }
  int dimension() const { return static_cast<int>(frames_.front().size()); }

 private:
  std::string entity_id_;
  std::vector<FeatureVector> frames_;
};

enum class Pairing {
  // Frame k of the scene against frame k of the ad: F pairs.
  kAligned,
  // Every scene frame against every ad frame: F*F pairs.
  kAllPairs,
};

// dot(u, v) / (|u| |v|), clamped into [-1, 1] against rounding.
// Throws kDimensionMismatch or kZeroNormVector.
double CosineSimilarity(std::span<const double> u, std::span<const double> v);

// Mean cosine similarity over frame pairs. Throws kFrameCountMismatch when the
// frame counts differ.
double PairRelevance(const KeyframeFeatures& scene, const KeyframeFeatures& ad,
                     Pairing pairing = Pairing::kAligned);

// Entry (i, j) is PairRelevance(scene i, ad j). Features are matched to the
// program and inventory by id; a missing id throws kMissingEntity. Work is
// split across `threads` workers without affecting the result.
RelevanceMatrix BuildRelevanceMatrix(
    const ProgramSpec& program, const AdInventory& inventory,
    const std::vector<KeyframeFeatures>& scene_features,
    const std::vector<KeyframeFeatures>& ad_features,
    Pairing pairing = Pairing::kAligned, int threads = 1);

}  // namespace adslot

#endif  // ADSLOT_RELEVANCE_H_
