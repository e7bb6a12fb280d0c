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
#include <limits>
#include <thread>
#include <tuple>

#include "adslot/error.h"
#include "adslot/solvers.h"
#include "solver_internal.h"

namespace adslot {
namespace {

struct Incumbent {
  double score = -std::numeric_limits<double>::infinity();
  int64_t subset_index = -1;
  int64_t placement_index = -1;
  std::vector<int> ads;
  std::vector<int> slots;
  int64_t scored = 0;

  // Higher score wins; equal scores go to the earlier enumeration index.
  bool BeatenBy(const Incumbent& other) const {
    if (other.subset_index < 0) return false;
    if (subset_index < 0) return true;
    if (other.score != score) return other.score > score;
    return std::tie(other.subset_index, other.placement_index) <
           std::tie(subset_index, placement_index);
  }
};

}  // namespace

SolveReport SolveBruteForce(const ProgramSpec& program,
                            const AdInventory& inventory,
                            const RelevanceMatrix& rel,
                            const RewardParams& params,
                            const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  internal::CheckInstance(program, inventory, rel, params);
  const int k = params.k();
  const int m = program.slot_count();

  const int64_t subsets = CountBalancedSubsets(inventory, k);
  const int64_t placements = CountPlacements(m, k);
  const int64_t total =
      placements > 0 &&
              subsets > std::numeric_limits<int64_t>::max() / placements
          ? std::numeric_limits<int64_t>::max()
          : subsets * placements;
  if (total > options.candidate_cap) {
    throw Error(ErrorCode::kInstanceTooLarge,
                fmt::format("brute force would score {} candidates ({} subsets "
                            "x {} placements), above the cap of {}; use "
                            "branch and bound instead",
                            total, subsets, placements, options.candidate_cap));
  }

  const internal::ContributionTable table(program, inventory, rel, params);
  const int workers = static_cast<int>(
      std::clamp<int64_t>(options.threads, 1, std::max<int64_t>(subsets, 1)));
  std::vector<Incumbent> best(workers);

  auto work = [&](int w) {
    Incumbent& mine = best[w];
    int64_t subset_index = -1;
    ForEachBalancedSubset(inventory, k, [&](std::span<const int> subset) {
      ++subset_index;
      if (subset_index % workers != w) return true;
      int64_t placement_index = -1;
      ForEachPlacement(subset, m, [&](const Placement& p) {
        ++placement_index;
        ++mine.scored;
        double score = 0.0;
        for (size_t b = 0; b < p.ads.size(); ++b) {
          score += table.at(p.slots[b], p.ads[b]);
        }
        if (mine.subset_index < 0 || score > mine.score) {
          mine.score = score;
          mine.subset_index = subset_index;
          mine.placement_index = placement_index;
          mine.ads.assign(p.ads.begin(), p.ads.end());
          mine.slots.assign(p.slots.begin(), p.slots.end());
        }
        return true;
      });
      return true;
    });
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (std::thread& t : pool) t.join();
  }

  Incumbent winner;
  int64_t scored = 0;
  for (const Incumbent& candidate : best) {
    scored += candidate.scored;
    if (winner.BeatenBy(candidate)) winner = candidate;
  }
  if (winner.subset_index < 0) {
    throw Error(ErrorCode::kInternal, "brute force found no candidate");
  }

  SolveReport report;
  report.solver = SolverKind::kBruteForce;
  report.schedule = internal::ToSchedule(inventory, winner.ads, winner.slots);
  report.reward = Reward(report.schedule, program, inventory, rel, params);
  report.candidates_evaluated = scored;
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace adslot
