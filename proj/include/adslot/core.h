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

// Domain model for placing ads inside a program video.
//
// A program is an ordered list of scenes. Ads are inserted at slots; slot i
// (1-indexed) sits immediately after scene i. A strict schedule picks K ads
// from an inventory and puts at most one ad in each slot, one ad in each of K
// contiguous near-equal slot blocks, with K/2 high-valence and K/2
// low-valence ads. The reward of a strict schedule is
//
//   alpha * sum_{(i,j)} i * (1 - val(ad j))
//     + beta * sum_{(i,j)} |val(scene i) - val(ad j)| * rel(scene i, ad j)
//
// summed over scheduled (slot i, ad j) pairs.

#ifndef ADSLOT_CORE_H_
#define ADSLOT_CORE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace adslot {

// Absolute tolerance used when comparing rewards.
inline constexpr double kRewardTolerance = 1e-9;

// A valence score normalized to [0, 1].
class Valence {
 public:
  // Throws Error(kValenceOutOfRange) outside [0, 1] or for NaN.
  explicit Valence(double value);

  double value() const { return value_; }

  friend bool operator==(Valence a, Valence b) { return a.value_ == b.value_; }

 private:
  double value_;
};

enum class Polarity { kHigh, kLow };

const char* PolarityName(Polarity polarity);

// HV iff value > 0.5; 0.5 itself is LV.
Polarity ClassifyPolarity(Valence valence);

struct Scene {
  std::string id;
  Valence valence;
};

struct Ad {
  std::string id;
  Valence valence;

  Polarity polarity() const { return ClassifyPolarity(valence); }
};

class ProgramSpec {
 public:
  // Slots at every scene transition: M = N - 1.
  explicit ProgramSpec(std::vector<Scene> scenes);
  // Requires N >= 2 and 1 <= slot_count <= N.
  ProgramSpec(std::vector<Scene> scenes, int slot_count);

  const std::vector<Scene>& scenes() const { return scenes_; }
  int scene_count() const { return static_cast<int>(scenes_.size()); }
  int slot_count() const { return slot_count_; }

  // The scene a slot follows. `slot` is 1-indexed.
  const Scene& SceneBeforeSlot(int slot) const;

 private:
  std::vector<Scene> scenes_;
  int slot_count_;
};

class AdInventory {
 public:
  // Requires at least one ad and distinct ids.
  explicit AdInventory(std::vector<Ad> ads);

  const std::vector<Ad>& ads() const { return ads_; }
  int size() const { return static_cast<int>(ads_.size()); }
  const Ad& ad(int index) const { return ads_[index]; }

  std::optional<int> IndexOf(const std::string& id) const;
  int CountPolarity(Polarity polarity) const;

 private:
  std::vector<Ad> ads_;
  std::unordered_map<std::string, int> index_;
};

class RewardParams {
 public:
  // alpha, beta in [0, 1] summing to 1 (within 1e-9). An odd or negative k
  // throws Error(kInfeasibleK): the schedule must hold as many HV as LV ads.
  RewardParams(double alpha, double beta, int k);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  int k() const { return k_; }

 private:
  double alpha_;
  double beta_;
  int k_;
};

struct ScheduleEntry {
  int slot = 0;
  int rank = 0;
  std::string ad_id;

  friend bool operator==(const ScheduleEntry&, const ScheduleEntry&) = default;
};

// Which ad sits where. Slot 0 denotes the program head and is only legal for
// baseline schedules.
struct Schedule {
  std::vector<ScheduleEntry> entries;

  // Entries ordered by (slot, rank).
  Schedule Sorted() const;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

// Dense scenes x ads similarity matrix, entries in [-1, 1].
class RelevanceMatrix {
 public:
  RelevanceMatrix(int rows, int cols, std::vector<double> values);
  static RelevanceMatrix Constant(int rows, int cols, double value);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  // 0-indexed scene and ad.
  double at(int scene, int ad) const { return values_[scene * cols_ + ad]; }
  const std::vector<double>& values() const { return values_; }

  friend bool operator==(const RelevanceMatrix&,
                         const RelevanceMatrix&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<double> values_;
};

// Inclusive 1-indexed slot range.
struct SlotBlock {
  int first;
  int last;

  int size() const { return last - first + 1; }
};

// Splits slots 1..slot_count into k contiguous blocks whose sizes differ by
// at most one. Block b (1-indexed) spans floor((b-1)M/k)+1 .. floor(bM/k).
// Requires 0 <= k <= slot_count.
std::vector<SlotBlock> PartitionSlots(int slot_count, int k);

enum class ScheduleMode { kStrict, kBaseline };

enum class Constraint {
  kNone,
  kUnknownAd,
  kDistinctAds,
  kSlotRange,
  kRank,
  kOneAdPerSlot,
  kAdCount,
  kBlockUniformity,
  kPolarityBalance,
  kDistinctSlotRank,
};

const char* ConstraintName(Constraint constraint);

struct ValidationResult {
  Constraint violated = Constraint::kNone;
  std::vector<int> slots;
  std::vector<std::string> ad_ids;
  std::string message;

  bool ok() const { return violated == Constraint::kNone; }
};

// Returns the first violated constraint. Strict mode checks, in order: ids
// resolve, ads distinct, slots in 1..M with rank 0, (a) at most one ad per
// slot, (b) exactly K entries, (c) one ad per block, (d) K/2 HV and K/2 LV.
// Baseline mode checks ids, distinct ads, slots in 0..M, distinct
// (slot, rank) pairs and exactly K entries.
ValidationResult ValidateSchedule(const Schedule& schedule,
                                  const ProgramSpec& program,
                                  const AdInventory& inventory,
                                  const RewardParams& params,
                                  ScheduleMode mode);

// The objective above. Throws Error(kDimensionMismatch) if `rel` is not
// N x P and Error(kInfeasibleSchedule) if the schedule fails strict
// validation.
double Reward(const Schedule& schedule, const ProgramSpec& program,
              const AdInventory& inventory, const RelevanceMatrix& rel,
              const RewardParams& params);

}  // namespace adslot

#endif  // ADSLOT_CORE_H_
