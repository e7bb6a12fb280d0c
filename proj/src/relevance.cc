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

#include "adslot/relevance.h"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>
#include <unordered_map>
#include <utility>

#include "adslot/error.h"

namespace adslot {

KeyframeFeatures::KeyframeFeatures(std::string entity_id,
                                   std::vector<FeatureVector> frames)
    : entity_id_(std::move(entity_id)), frames_(std::move(frames)) {
  if (frames_.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("'{}' has no keyframes", entity_id_));
  }
  const size_t dim = frames_.front().size();
  if (dim == 0) {
    throw Error(ErrorCode::kDimensionMismatch,
                fmt::format("'{}' has zero-dimensional features", entity_id_));
  }
  for (size_t f = 0; f < frames_.size(); ++f) {
    if (frames_[f].size() != dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  fmt::format("'{}' frame {} has dimension {}, expected {}",
                              entity_id_, f, frames_[f].size(), dim));
    }
    if (std::all_of(frames_[f].begin(), frames_[f].end(),
                    [](double x) { return x == 0.0; })) {
      throw Error(ErrorCode::kZeroNormVector,
                  fmt::format("'{}' frame {} is all zeros", entity_id_, f));
    }
  }
}

double CosineSimilarity(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                fmt::format("cosine of vectors with dimensions {} and {}",
                            u.size(), v.size()));
  }
  double dot = 0.0;
  double uu = 0.0;
  double vv = 0.0;
  for (size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    uu += u[i] * u[i];
    vv += v[i] * v[i];
  }
  if (uu == 0.0 || vv == 0.0) {
    throw Error(ErrorCode::kZeroNormVector, "cosine of a zero-norm vector");
  }
  return std::clamp(dot / (std::sqrt(uu) * std::sqrt(vv)), -1.0, 1.0);
}

double PairRelevance(const KeyframeFeatures& scene, const KeyframeFeatures& ad,
                     Pairing pairing) {
  if (scene.frame_count() != ad.frame_count()) {
    throw Error(
        ErrorCode::kFrameCountMismatch,
        fmt::format("'{}' has {} frames, '{}' has {}", scene.entity_id(),
                    scene.frame_count(), ad.entity_id(), ad.frame_count()));
  }
  const int f = scene.frame_count();
  double sum = 0.0;
  if (pairing == Pairing::kAligned) {
    for (int k = 0; k < f; ++k) {
      sum += CosineSimilarity(scene.frames()[k], ad.frames()[k]);
    }
    return sum / f;
  }
  for (int a = 0; a < f; ++a) {
    for (int b = 0; b < f; ++b) {
      sum += CosineSimilarity(scene.frames()[a], ad.frames()[b]);
    }
  }
  return sum / (static_cast<double>(f) * f);
}

namespace {

std::vector<const KeyframeFeatures*> MatchById(
    const std::vector<KeyframeFeatures>& features,
    const std::vector<std::string>& ids, const char* kind) {
  std::unordered_map<std::string, const KeyframeFeatures*> by_id;
  for (const KeyframeFeatures& f : features) by_id.emplace(f.entity_id(), &f);
  std::vector<const KeyframeFeatures*> matched;
  matched.reserve(ids.size());
  for (const std::string& id : ids) {
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      throw Error(ErrorCode::kMissingEntity,
                  fmt::format("no keyframe features for {} '{}'", kind, id));
    }
    matched.push_back(it->second);
  }
  return matched;
}

}  // namespace

RelevanceMatrix BuildRelevanceMatrix(
    const ProgramSpec& program, const AdInventory& inventory,
    const std::vector<KeyframeFeatures>& scene_features,
    const std::vector<KeyframeFeatures>& ad_features, Pairing pairing,
    int threads) {
  std::vector<std::string> scene_ids;
  for (const Scene& s : program.scenes()) scene_ids.push_back(s.id);
  std::vector<std::string> ad_ids;
  for (const Ad& a : inventory.ads()) ad_ids.push_back(a.id);
  const auto scenes = MatchById(scene_features, scene_ids, "scene");
  const auto ads = MatchById(ad_features, ad_ids, "ad");

  const int rows = program.scene_count();
  const int cols = inventory.size();
  std::vector<double> values(static_cast<size_t>(rows) * cols);

  // Each worker owns a strided set of cells, so the output does not depend
  // on scheduling.
  const int workers = std::clamp(threads, 1, std::max(1, rows * cols));
  std::vector<std::exception_ptr> failures(workers);
  auto work = [&](int w) {
    try {
      for (int cell = w; cell < rows * cols; cell += workers) {
        values[cell] =
            PairRelevance(*scenes[cell / cols], *ads[cell % cols], pairing);
      }
    } catch (...) {
      failures[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (std::thread& t : pool) t.join();
  }
  for (const std::exception_ptr& e : failures) {
    if (e) std::rethrow_exception(e);
  }
  return RelevanceMatrix(rows, cols, std::move(values));
}

}  // namespace adslot
