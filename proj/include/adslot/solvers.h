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

// Solvers that pick and place K ads to maximize Reward() over strict
// schedules.
//
// All three share the same search space: choose K/2 HV and K/2 LV ads, order
// them across the K slot blocks of PartitionSlots(), and pick one slot inside
// each block.

#ifndef ADSLOT_SOLVERS_H_
#define ADSLOT_SOLVERS_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "adslot/core.h"

namespace adslot {

enum class SolverKind { kBruteForce, kBranchAndBound, kLpRelax };

const char* SolverName(SolverKind kind);

struct SolveReport {
  Schedule schedule;
  double reward = 0.0;
  SolverKind solver = SolverKind::kBruteForce;
  // Brute force: scored (subset, placement) pairs. Branch and bound: search
  // nodes visited. LP: simplex pivots.
  int64_t candidates_evaluated = 0;
  // Branch and bound only.
  int64_t nodes_pruned = 0;
  // Objective of the continuous relaxation; LP only.
  std::optional<double> upper_bound;
  std::chrono::nanoseconds wall_time{0};
};

struct SolveOptions {
  // Workers used by brute force. The result does not depend on this.
  int threads = 1;
  // Brute force refuses instances with more candidates than this.
  int64_t candidate_cap = 100'000'000;
};

// Calls `visit` with every k-subset of ad indices holding exactly k/2 HV and
// k/2 LV ads, in lexicographic order of sorted indices. Stops early when
// `visit` returns false. Throws kInfeasibleInventory if either polarity has
// fewer than k/2 ads and kInfeasibleK for odd or negative k.
void ForEachBalancedSubset(
    const AdInventory& inventory, int k,
    const std::function<bool(std::span<const int>)>& visit);

std::vector<std::vector<int>> EnumerateBalancedSubsets(
    const AdInventory& inventory, int k);

// Number of subsets ForEachBalancedSubset() yields, saturating at INT64_MAX.
int64_t CountBalancedSubsets(const AdInventory& inventory, int k);

// One block-respecting assignment: block b holds ad `ads[b]` at slot
// `slots[b]`.
struct Placement {
  std::span<const int> ads;
  std::span<const int> slots;
};

// Calls `visit` for every ordering of `subset` across the |subset| blocks of
// 1..slot_count and every choice of one slot per block. Orderings come from
// std::next_permutation over the sorted subset; slot choices vary the last
// block fastest. Stops early when `visit` returns false.
void ForEachPlacement(std::span<const int> subset, int slot_count,
                      const std::function<bool(const Placement&)>& visit);

// Materialized ForEachPlacement() over ad ids, for inspection and tests.
std::vector<Schedule> EnumeratePlacements(std::span<const int> subset,
                                          const ProgramSpec& program,
                                          const AdInventory& inventory);

// k! times the product of block sizes, saturating at INT64_MAX.
int64_t CountPlacements(int slot_count, int k);

// Exhaustive search. Ties keep the first schedule in (subset, permutation,
// slot choice) order. Throws kInfeasibleK (k > M), kInfeasibleInventory,
// kInstanceTooLarge and kDimensionMismatch.
SolveReport SolveBruteForce(const ProgramSpec& program,
                            const AdInventory& inventory,
                            const RelevanceMatrix& rel,
                            const RewardParams& params,
                            const SolveOptions& options = {});

// Exact depth-first branch and bound over blocks. Throws as SolveBruteForce
// except for kInstanceTooLarge.
SolveReport SolveBranchAndBound(const ProgramSpec& program,
                                const AdInventory& inventory,
                                const RelevanceMatrix& rel,
                                const RewardParams& params,
                                const SolveOptions& options = {});

// Solves the continuous relaxation, then rounds block by block. The returned
// schedule is feasible but not necessarily optimal; `upper_bound` bounds the
// optimum from above.
SolveReport SolveLpRelax(const ProgramSpec& program,
                         const AdInventory& inventory,
                         const RelevanceMatrix& rel, const RewardParams& params,
                         const SolveOptions& options = {});

SolveReport Solve(SolverKind kind, const ProgramSpec& program,
                  const AdInventory& inventory, const RelevanceMatrix& rel,
                  const RewardParams& params, const SolveOptions& options = {});

}  // namespace adslot

#endif  // ADSLOT_SOLVERS_H_
