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

#ifndef ADSLOT_SRC_SOLVER_INTERNAL_H_
#define ADSLOT_SRC_SOLVER_INTERNAL_H_

#include <span>
#include <vector>

#include "adslot/core.h"

namespace adslot::internal {

// Per-entry reward contribution of putting ad j in slot i:
// alpha * i * (1 - val_j) + beta * |val(scene i) - val_j| * rel(i, j).
class ContributionTable {
 public:
  ContributionTable(const ProgramSpec& program, const AdInventory& inventory,
                    const RelevanceMatrix& rel, const RewardParams& params);

  // `slot` is 1-indexed, `ad` 0-indexed.
  double at(int slot, int ad) const {
    return values_[static_cast<size_t>(slot - 1) * ads_ + ad];
  }

 private:
  int ads_;
  std::vector<double> values_;
};

// Rejects K > M, an inventory short of either polarity, and a relevance
// matrix of the wrong shape.
void CheckInstance(const ProgramSpec& program, const AdInventory& inventory,
                   const RelevanceMatrix& rel, const RewardParams& params);

Schedule ToSchedule(const AdInventory& inventory, std::span<const int> ads,
                    std::span<const int> slots);

}  // namespace adslot::internal

#endif  // ADSLOT_SRC_SOLVER_INTERNAL_H_
