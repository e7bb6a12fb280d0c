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

#include "adslot/core.h"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>
#include <utility>

#include "adslot/error.h"

namespace adslot {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kValenceOutOfRange:
      return "ValenceOutOfRange";
    case ErrorCode::kDuplicateId:
      return "DuplicateId";
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kInfeasibleSchedule:
      return "InfeasibleSchedule";
    case ErrorCode::kZeroNormVector:
      return "ZeroNormVector";
    case ErrorCode::kFrameCountMismatch:
      return "FrameCountMismatch";
    case ErrorCode::kMissingEntity:
      return "MissingEntity";
    case ErrorCode::kInfeasibleInventory:
      return "InfeasibleInventory";
    case ErrorCode::kInfeasibleK:
      return "InfeasibleK";
    case ErrorCode::kInstanceTooLarge:
      return "InstanceTooLarge";
    case ErrorCode::kUnknownAdId:
      return "UnknownAdId";
    case ErrorCode::kTooShort:
      return "TooShort";
    case ErrorCode::kInternal:
      return "Internal";
  }
  return "Unknown";
}

Valence::Valence(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw Error(ErrorCode::kValenceOutOfRange,
                fmt::format("valence {} outside [0, 1]", value));
  }
}

const char* PolarityName(Polarity polarity) {
  return polarity == Polarity::kHigh ? "HV" : "LV";
}

Polarity ClassifyPolarity(Valence valence) {
  return valence.value() > 0.5 ? Polarity::kHigh : Polarity::kLow;
}

ProgramSpec::ProgramSpec(std::vector<Scene> scenes)
    : ProgramSpec(scenes, static_cast<int>(scenes.size()) - 1) {}

ProgramSpec::ProgramSpec(std::vector<Scene> scenes, int slot_count)
    : scenes_(std::move(scenes)), slot_count_(slot_count) {
  if (scenes_.size() < 2) {
    throw Error(
        ErrorCode::kInvalidArgument,
        fmt::format("program needs at least 2 scenes, got {}", scenes_.size()));
  }
  if (slot_count_ < 1 || slot_count_ > scene_count()) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("slot count {} outside [1, {}]", slot_count_,
                            scene_count()));
  }
  std::unordered_set<std::string> seen;
  for (const Scene& scene : scenes_) {
    if (!seen.insert(scene.id).second) {
      throw Error(ErrorCode::kDuplicateId,
                  fmt::format("duplicate scene id '{}'", scene.id));
    }
  }
}

const Scene& ProgramSpec::SceneBeforeSlot(int slot) const {
  if (slot < 1 || slot > slot_count_) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("slot {} outside [1, {}]", slot, slot_count_));
  }
  return scenes_[slot - 1];
}

AdInventory::AdInventory(std::vector<Ad> ads) : ads_(std::move(ads)) {
  if (ads_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "ad inventory is empty");
  }
  for (int i = 0; i < size(); ++i) {
    if (!index_.emplace(ads_[i].id, i).second) {
      throw Error(ErrorCode::kDuplicateId,
                  fmt::format("duplicate ad id '{}'", ads_[i].id));
    }
  }
}

std::optional<int> AdInventory::IndexOf(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int AdInventory::CountPolarity(Polarity polarity) const {
  return static_cast<int>(std::count_if(
      ads_.begin(), ads_.end(),
      [polarity](const Ad& ad) { return ad.polarity() == polarity; }));
}

RewardParams::RewardParams(double alpha, double beta, int k)
    : alpha_(alpha), beta_(beta), k_(k) {
  if (!(alpha >= 0.0 && alpha <= 1.0 && beta >= 0.0 && beta <= 1.0)) {
    throw Error(
        ErrorCode::kInvalidArgument,
        fmt::format("alpha={} beta={} must lie in [0, 1]", alpha, beta));
  }
  if (std::abs(alpha + beta - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("alpha + beta must equal 1, got {}", alpha + beta));
  }
  if (k < 0 || k % 2 != 0) {
    throw Error(ErrorCode::kInfeasibleK,
                fmt::format("K={} violates the polarity balance constraint: "
                            "K must be even and non-negative so that K/2 HV "
                            "and K/2 LV ads can be embedded",
                            k));
  }
}

Schedule Schedule::Sorted() const {
  Schedule sorted = *this;
  std::sort(sorted.entries.begin(), sorted.entries.end(),
            [](const ScheduleEntry& a, const ScheduleEntry& b) {
              return std::tie(a.slot, a.rank, a.ad_id) <
                     std::tie(b.slot, b.rank, b.ad_id);
            });
  return sorted;
}

RelevanceMatrix::RelevanceMatrix(int rows, int cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (rows_ < 0 || cols_ < 0 ||
      values_.size() != static_cast<size_t>(rows_) * cols_) {
    throw Error(ErrorCode::kDimensionMismatch,
                fmt::format("relevance matrix {}x{} has {} values", rows_,
                            cols_, values_.size()));
  }
  for (size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!(v >= -1.0 - 1e-12 && v <= 1.0 + 1e-12)) {
      throw Error(
          ErrorCode::kInvalidArgument,
          fmt::format("relevance ({}, {}) = {} outside [-1, 1]",
                      i / std::max(cols_, 1), i % std::max(cols_, 1), v));
    }
  }
}

RelevanceMatrix RelevanceMatrix::Constant(int rows, int cols, double value) {
  return RelevanceMatrix(
      rows, cols, std::vector<double>(static_cast<size_t>(rows) * cols, value));
}

std::vector<SlotBlock> PartitionSlots(int slot_count, int k) {
  if (k < 0 || k > slot_count) {
    throw Error(
        ErrorCode::kInfeasibleK,
        fmt::format("cannot split {} slots into {} blocks", slot_count, k));
  }
  std::vector<SlotBlock> blocks;
  blocks.reserve(k);
  for (int b = 1; b <= k; ++b) {
    blocks.push_back({(b - 1) * slot_count / k + 1, b * slot_count / k});
  }
  return blocks;
}

const char* ConstraintName(Constraint constraint) {
  switch (constraint) {
    case Constraint::kNone:
      return "none";
    case Constraint::kUnknownAd:
      return "unknown_ad";
    case Constraint::kDistinctAds:
      return "distinct_ads";
    case Constraint::kSlotRange:
      return "slot_range";
    case Constraint::kRank:
      return "rank";
    case Constraint::kOneAdPerSlot:
      return "one_ad_per_slot";
    case Constraint::kAdCount:
      return "ad_count";
    case Constraint::kBlockUniformity:
      return "block_uniformity";
    case Constraint::kPolarityBalance:
      return "polarity_balance";
    case Constraint::kDistinctSlotRank:
      return "distinct_slot_rank";
  }
  return "unknown";
}

namespace {

ValidationResult Violation(Constraint constraint, std::vector<int> slots,
                           std::vector<std::string> ad_ids,
                           std::string message) {
  return {constraint, std::move(slots), std::move(ad_ids), std::move(message)};
}

}  // namespace

ValidationResult ValidateSchedule(const Schedule& schedule,
                                  const ProgramSpec& program,
                                  const AdInventory& inventory,
                                  const RewardParams& params,
                                  ScheduleMode mode) {
  const int m = program.slot_count();
  const int k = params.k();
  const bool strict = mode == ScheduleMode::kStrict;

  std::set<std::string> seen_ads;
  for (const ScheduleEntry& e : schedule.entries) {
    if (!inventory.IndexOf(e.ad_id)) {
      return Violation(Constraint::kUnknownAd, {e.slot}, {e.ad_id},
                       fmt::format("ad '{}' is not in the inventory", e.ad_id));
    }
    if (!seen_ads.insert(e.ad_id).second) {
      return Violation(Constraint::kDistinctAds, {e.slot}, {e.ad_id},
                       fmt::format("ad '{}' scheduled twice", e.ad_id));
    }
    const int min_slot = strict ? 1 : 0;
    if (e.slot < min_slot || e.slot > m) {
      return Violation(
          Constraint::kSlotRange, {e.slot}, {e.ad_id},
          fmt::format("slot {} outside [{}, {}]", e.slot, min_slot, m));
    }
    if (strict ? e.rank != 0 : e.rank < 0) {
      return Violation(
          Constraint::kRank, {e.slot}, {e.ad_id},
          fmt::format("rank {} invalid for ad '{}'", e.rank, e.ad_id));
    }
  }

  if (!strict) {
    std::set<std::pair<int, int>> seen_positions;
    for (const ScheduleEntry& e : schedule.entries) {
      if (!seen_positions.emplace(e.slot, e.rank).second) {
        return Violation(
            Constraint::kDistinctSlotRank, {e.slot}, {e.ad_id},
            fmt::format("(slot {}, rank {}) used twice", e.slot, e.rank));
      }
    }
    if (static_cast<int>(schedule.entries.size()) != k) {
      return Violation(Constraint::kAdCount, {}, {},
                       fmt::format("{} ads scheduled, expected {}",
                                   schedule.entries.size(), k));
    }
    return {};
  }

  // (a)
  std::vector<std::vector<std::string>> by_slot(m + 1);
  for (const ScheduleEntry& e : schedule.entries) {
    by_slot[e.slot].push_back(e.ad_id);
  }
  for (int slot = 1; slot <= m; ++slot) {
    if (by_slot[slot].size() > 1) {
      return Violation(
          Constraint::kOneAdPerSlot, {slot}, by_slot[slot],
          fmt::format("slot {} holds {} ads", slot, by_slot[slot].size()));
    }
  }
  // (b)
  if (static_cast<int>(schedule.entries.size()) != k) {
    return Violation(Constraint::kAdCount, {}, {},
                     fmt::format("{} ads scheduled, expected K={}",
                                 schedule.entries.size(), k));
  }
  // (c). After (a) and (b), K distinct slots exist, so K <= M.
  const std::vector<SlotBlock> blocks = PartitionSlots(m, k);
  for (size_t b = 0; b < blocks.size(); ++b) {
    std::vector<int> slots;
    std::vector<std::string> ads;
    for (int slot = blocks[b].first; slot <= blocks[b].last; ++slot) {
      if (!by_slot[slot].empty()) {
        slots.push_back(slot);
        ads.push_back(by_slot[slot].front());
      }
    }
    if (slots.size() != 1) {
      return Violation(
          Constraint::kBlockUniformity, std::move(slots), std::move(ads),
          fmt::format("block {} (slots {}-{}) holds {} ads, expected 1", b + 1,
                      blocks[b].first, blocks[b].last, ads.size()));
    }
  }
  // (d)
  int high = 0;
  std::vector<std::string> ids;
  for (const ScheduleEntry& e : schedule.entries) {
    ids.push_back(e.ad_id);
    if (inventory.ad(*inventory.IndexOf(e.ad_id)).polarity() ==
        Polarity::kHigh) {
      ++high;
    }
  }
  if (high * 2 != k) {
    return Violation(Constraint::kPolarityBalance, {}, std::move(ids),
                     fmt::format("{} HV and {} LV ads scheduled, expected {} "
                                 "of each",
                                 high, k - high, k / 2));
  }
  return {};
}

double Reward(const Schedule& schedule, const ProgramSpec& program,
              const AdInventory& inventory, const RelevanceMatrix& rel,
              const RewardParams& params) {
  if (rel.rows() != program.scene_count() || rel.cols() != inventory.size()) {
    throw Error(
        ErrorCode::kDimensionMismatch,
        fmt::format("relevance matrix is {}x{}, instance is {}x{}", rel.rows(),
                    rel.cols(), program.scene_count(), inventory.size()));
  }
  const ValidationResult check = ValidateSchedule(
      schedule, program, inventory, params, ScheduleMode::kStrict);
  if (!check.ok()) {
    throw Error(
        ErrorCode::kInfeasibleSchedule,
        fmt::format("{}: {}", ConstraintName(check.violated), check.message));
  }
  // Summed in slot order so the value does not depend on entry order.
  double positional = 0.0;
  double matching = 0.0;
  for (const ScheduleEntry& e : schedule.Sorted().entries) {
    const int ad = *inventory.IndexOf(e.ad_id);
    const double ad_val = inventory.ad(ad).valence.value();
    const double scene_val = program.SceneBeforeSlot(e.slot).valence.value();
    positional += e.slot * (1.0 - ad_val);
    matching += std::abs(scene_val - ad_val) * rel.at(e.slot - 1, ad);
  }
  return params.alpha() * positional + params.beta() * matching;
}

}  // namespace adslot
