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

#include "adslot/error.h"
#include "adslot/simplex.h"
#include "adslot/solvers.h"
#include "solver_internal.h"

namespace adslot {
namespace {

// Fractional masses closer than this count as equal during rounding.
constexpr double kMassTieTolerance = 1e-9;

// Variable y(slot, ad) lives at (slot - 1) * P + ad.
lp::LinearProgram BuildRelaxation(const internal::ContributionTable& table,
                                  const AdInventory& inventory, int slot_count,
                                  int k) {
  const int p = inventory.size();
  auto var = [p](int slot, int ad) { return (slot - 1) * p + ad; };

  lp::LinearProgram model;
  model.num_vars = slot_count * p;
  model.objective.resize(model.num_vars);
  for (int slot = 1; slot <= slot_count; ++slot) {
    for (int j = 0; j < p; ++j)
      model.objective[var(slot, j)] = table.at(slot, j);
  }

  // At most one ad per slot.
  for (int slot = 1; slot <= slot_count; ++slot) {
    lp::Row row{{}, lp::Sense::kLessEqual, 1.0};
    for (int j = 0; j < p; ++j) row.terms.emplace_back(var(slot, j), 1.0);
    model.rows.push_back(std::move(row));
  }
  // Each ad used at most once.
  for (int j = 0; j < p; ++j) {
    lp::Row row{{}, lp::Sense::kLessEqual, 1.0};
    for (int slot = 1; slot <= slot_count; ++slot) {
      row.terms.emplace_back(var(slot, j), 1.0);
    }
    model.rows.push_back(std::move(row));
  }
  // Exactly one ad per block.
  for (const SlotBlock& block : PartitionSlots(slot_count, k)) {
    lp::Row row{{}, lp::Sense::kEqual, 1.0};
    for (int slot = block.first; slot <= block.last; ++slot) {
      for (int j = 0; j < p; ++j) row.terms.emplace_back(var(slot, j), 1.0);
    }
    model.rows.push_back(std::move(row));
  }
  // K/2 of each polarity, K in total.
  lp::Row high{{}, lp::Sense::kEqual, k / 2.0};
  lp::Row low{{}, lp::Sense::kEqual, k / 2.0};
  lp::Row total{{}, lp::Sense::kEqual, static_cast<double>(k)};
  for (int slot = 1; slot <= slot_count; ++slot) {
    for (int j = 0; j < p; ++j) {
      lp::Row& side =
          inventory.ad(j).polarity() == Polarity::kHigh ? high : low;
      side.terms.emplace_back(var(slot, j), 1.0);
      total.terms.emplace_back(var(slot, j), 1.0);
    }
  }
  model.rows.push_back(std::move(high));
  model.rows.push_back(std::move(low));
  model.rows.push_back(std::move(total));
  return model;
}

}  // namespace

SolveReport SolveLpRelax(const ProgramSpec& program,
                         const AdInventory& inventory,
                         const RelevanceMatrix& rel, const RewardParams& params,
                         const SolveOptions& /*options*/) {
  const auto start = std::chrono::steady_clock::now();
  internal::CheckInstance(program, inventory, rel, params);
  const int m = program.slot_count();
  const int p = inventory.size();
  const int k = params.k();
  const internal::ContributionTable table(program, inventory, rel, params);

  const lp::Solution relaxed =
      lp::Maximize(BuildRelaxation(table, inventory, m, k));
  if (relaxed.status != lp::Status::kOptimal) {
    throw Error(ErrorCode::kInternal,
                fmt::format("relaxation not solved to optimality (status {})",
                            static_cast<int>(relaxed.status)));
  }

  // Rounding: walk blocks in order; in each, take the unused ad-slot pair of
  // largest fractional mass among ads whose polarity still has room. Ties go
  // to the larger contribution, then the smaller slot, then the smaller ad.
  std::vector<char> used(p, 0);
  int high_left = k / 2;
  int low_left = k / 2;
  std::vector<int> ads;
  std::vector<int> slots;
  for (const SlotBlock& block : PartitionSlots(m, k)) {
    int best_slot = -1;
    int best_ad = -1;
    double best_mass = 0.0;
    double best_value = 0.0;
    for (int slot = block.first; slot <= block.last; ++slot) {
      for (int j = 0; j < p; ++j) {
        if (used[j]) continue;
        const bool is_high = inventory.ad(j).polarity() == Polarity::kHigh;
        if ((is_high ? high_left : low_left) == 0) continue;
        const double mass = relaxed.x[(slot - 1) * p + j];
        const double value = table.at(slot, j);
        const bool better =
            best_ad < 0 || mass > best_mass + kMassTieTolerance ||
            (mass >= best_mass - kMassTieTolerance && value > best_value);
        if (better) {
          best_slot = slot;
          best_ad = j;
          best_mass = mass;
          best_value = value;
        }
      }
    }
    if (best_ad < 0) {
      throw Error(ErrorCode::kInternal, "rounding ran out of eligible ads");
    }
    used[best_ad] = 1;
    --(inventory.ad(best_ad).polarity() == Polarity::kHigh ? high_left
                                                           : low_left);
    ads.push_back(best_ad);
    slots.push_back(best_slot);
  }

  SolveReport report;
  report.solver = SolverKind::kLpRelax;
  report.schedule = internal::ToSchedule(inventory, ads, slots);
  report.reward = Reward(report.schedule, program, inventory, rel, params);
  report.upper_bound = relaxed.objective;
  report.candidates_evaluated = relaxed.pivots;
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

SolveReport Solve(SolverKind kind, const ProgramSpec& program,
                  const AdInventory& inventory, const RelevanceMatrix& rel,
                  const RewardParams& params, const SolveOptions& options) {
  switch (kind) {
    case SolverKind::kBruteForce:
      return SolveBruteForce(program, inventory, rel, params, options);
    case SolverKind::kBranchAndBound:
      return SolveBranchAndBound(program, inventory, rel, params, options);
    case SolverKind::kLpRelax:
      return SolveLpRelax(program, inventory, rel, params, options);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown solver");
}

}  // namespace adslot
