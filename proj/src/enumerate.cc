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

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "adslot/error.h"
#include "adslot/solvers.h"
#include "solver_internal.h"

namespace adslot {
namespace {

constexpr int64_t kSaturated = std::numeric_limits<int64_t>::max();

int64_t SaturatingMul(int64_t a, int64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

int64_t Binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  // Exact while the intermediate fits; products of r consecutive integers are
  // divisible by r!.
  int64_t result = 1;
  for (int i = 1; i <= r; ++i) {
    const int64_t factor = n - r + i;
    if (result > kSaturated / factor) return kSaturated;
    result = result * factor / i;
  }
  return result;
}

void CheckSubsetArgs(const AdInventory& inventory, int k) {
  if (k < 0 || k % 2 != 0) {
    throw Error(ErrorCode::kInfeasibleK,
                fmt::format("K={} must be even for polarity balance", k));
  }
  const int high = inventory.CountPolarity(Polarity::kHigh);
  const int low = inventory.CountPolarity(Polarity::kLow);
  if (high < k / 2 || low < k / 2) {
    throw Error(ErrorCode::kInfeasibleInventory,
                fmt::format("K={} needs {} HV and {} LV ads; inventory has {} "
                            "HV and {} LV",
                            k, k / 2, k / 2, high, low));
  }
}

}  // namespace

const char* SolverName(SolverKind kind) {
  switch (kind) {
    case SolverKind::kBruteForce:
      return "brute_force";
    case SolverKind::kBranchAndBound:
      return "branch_and_bound";
    case SolverKind::kLpRelax:
      return "lp_relax";
  }
  return "unknown";
}

void ForEachBalancedSubset(
    const AdInventory& inventory, int k,
    const std::function<bool(std::span<const int>)>& visit) {
  CheckSubsetArgs(inventory, k);
  const int p = inventory.size();
  std::vector<Polarity> polarity(p);
  for (int j = 0; j < p; ++j) polarity[j] = inventory.ad(j).polarity();

  std::vector<int> chosen;
  chosen.reserve(k);
  bool stop = false;
  // Include-before-skip recursion over increasing indices yields
  // lexicographic order.
  auto recurse = [&](auto&& self, int next, int high_left, int low_left) {
    if (stop) return;
    if (high_left == 0 && low_left == 0) {
      if (!visit(chosen)) stop = true;
      return;
    }
    for (int j = next; j < p && !stop; ++j) {
      int& left = polarity[j] == Polarity::kHigh ? high_left : low_left;
      if (left == 0) continue;
      --left;
      chosen.push_back(j);
      self(self, j + 1, high_left, low_left);
      chosen.pop_back();
      ++left;
    }
  };
  recurse(recurse, 0, k / 2, k / 2);
}

std::vector<std::vector<int>> EnumerateBalancedSubsets(
    const AdInventory& inventory, int k) {
  std::vector<std::vector<int>> subsets;
  ForEachBalancedSubset(inventory, k, [&](std::span<const int> s) {
    subsets.emplace_back(s.begin(), s.end());
    return true;
  });
  return subsets;
}

int64_t CountBalancedSubsets(const AdInventory& inventory, int k) {
  CheckSubsetArgs(inventory, k);
  return SaturatingMul(
      Binomial(inventory.CountPolarity(Polarity::kHigh), k / 2),
      Binomial(inventory.CountPolarity(Polarity::kLow), k / 2));
}

int64_t CountPlacements(int slot_count, int k) {
  int64_t count = 1;
  for (int i = 2; i <= k; ++i) count = SaturatingMul(count, i);
  for (const SlotBlock& block : PartitionSlots(slot_count, k)) {
    count = SaturatingMul(count, block.size());
  }
  return count;
}

void ForEachPlacement(std::span<const int> subset, int slot_count,
                      const std::function<bool(const Placement&)>& visit) {
  const int k = static_cast<int>(subset.size());
  const std::vector<SlotBlock> blocks = PartitionSlots(slot_count, k);
  std::vector<int> ads(subset.begin(), subset.end());
  std::sort(ads.begin(), ads.end());
  std::vector<int> slots(k);
  do {
    for (int b = 0; b < k; ++b) slots[b] = blocks[b].first;
    for (;;) {
      if (!visit(Placement{ads, slots})) return;
      // Odometer, last block fastest.
      int b = k - 1;
      while (b >= 0 && slots[b] == blocks[b].last) {
        slots[b] = blocks[b].first;
        --b;
      }
      if (b < 0) break;
      ++slots[b];
    }
  } while (std::next_permutation(ads.begin(), ads.end()));
}

std::vector<Schedule> EnumeratePlacements(std::span<const int> subset,
                                          const ProgramSpec& program,
                                          const AdInventory& inventory) {
  std::vector<Schedule> schedules;
  ForEachPlacement(subset, program.slot_count(), [&](const Placement& p) {
    schedules.push_back(internal::ToSchedule(inventory, p.ads, p.slots));
    return true;
  });
  return schedules;
}

namespace internal {

ContributionTable::ContributionTable(const ProgramSpec& program,
                                     const AdInventory& inventory,
                                     const RelevanceMatrix& rel,
                                     const RewardParams& params)
    : ads_(inventory.size()) {
  const int m = program.slot_count();
  values_.resize(static_cast<size_t>(m) * ads_);
  for (int slot = 1; slot <= m; ++slot) {
    const double scene_val = program.SceneBeforeSlot(slot).valence.value();
    for (int j = 0; j < ads_; ++j) {
      const double ad_val = inventory.ad(j).valence.value();
      values_[static_cast<size_t>(slot - 1) * ads_ + j] =
          params.alpha() * slot * (1.0 - ad_val) +
          params.beta() * std::abs(scene_val - ad_val) * rel.at(slot - 1, j);
    }
  }
}

void CheckInstance(const ProgramSpec& program, const AdInventory& inventory,
                   const RelevanceMatrix& rel, const RewardParams& params) {
  if (rel.rows() != program.scene_count() || rel.cols() != inventory.size()) {
    throw Error(
        ErrorCode::kDimensionMismatch,
        fmt::format("relevance matrix is {}x{}, instance is {}x{}", rel.rows(),
                    rel.cols(), program.scene_count(), inventory.size()));
  }
  if (params.k() > program.slot_count()) {
    throw Error(ErrorCode::kInfeasibleK,
                fmt::format("K={} exceeds the {} available slots", params.k(),
                            program.slot_count()));
  }
  CheckSubsetArgs(inventory, params.k());
}

Schedule ToSchedule(const AdInventory& inventory, std::span<const int> ads,
                    std::span<const int> slots) {
  Schedule schedule;
  schedule.entries.reserve(ads.size());
  for (size_t b = 0; b < ads.size(); ++b) {
    schedule.entries.push_back({slots[b], 0, inventory.ad(ads[b]).id});
  }
  return schedule.Sorted();
}

}  // namespace internal
}  // namespace adslot
