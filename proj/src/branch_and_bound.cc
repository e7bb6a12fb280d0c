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

#include <algorithm>
#include <limits>
#include <tuple>

#include "adslot/error.h"
#include "adslot/solvers.h"
#include "solver_internal.h"

namespace adslot {
namespace {

struct Candidate {
  int slot;
  int ad;
  double value;
};

// Depth-first search that fixes one (slot, ad) pair per block, starting from
// the last block. Later slots carry the largest positional weight, so fixing
// them first finds a strong incumbent early.
//
// The bound at a node is the value fixed so far plus, for every open block,
// the best single entry among ads that are unused and whose polarity still
// has room. Different open blocks may claim the same ad in the bound, so it
// never underestimates the best completion.
class BlockSearch {
 public:
  BlockSearch(const internal::ContributionTable& table,
              const std::vector<SlotBlock>& blocks,
              const AdInventory& inventory)
      : used_(inventory.size(), 0) {
    is_high_.resize(inventory.size());
    for (int j = 0; j < inventory.size(); ++j) {
      is_high_[j] = inventory.ad(j).polarity() == Polarity::kHigh;
    }
    // Per block, one candidate per ad at its best slot (ties to the smaller
    // slot): any other slot for that ad is dominated. Candidates run in
    // descending value, ties by (slot, ad).
    candidates_.resize(blocks.size());
    for (size_t b = 0; b < blocks.size(); ++b) {
      const SlotBlock& block = blocks[blocks.size() - 1 - b];
      for (int j = 0; j < inventory.size(); ++j) {
        Candidate best{block.first, j, table.at(block.first, j)};
        for (int slot = block.first + 1; slot <= block.last; ++slot) {
          if (table.at(slot, j) > best.value)
            best = {slot, j, table.at(slot, j)};
        }
        candidates_[b].push_back(best);
      }
      std::sort(candidates_[b].begin(), candidates_[b].end(),
                [](const Candidate& x, const Candidate& y) {
                  if (x.value != y.value) return x.value > y.value;
                  return std::tie(x.slot, x.ad) < std::tie(y.slot, y.ad);
                });
    }
    path_.resize(blocks.size());
  }

  void Run(int k) {
    high_left_ = k / 2;
    low_left_ = k / 2;
    Visit(0, 0.0);
  }

  bool found() const { return found_; }
  const std::vector<Candidate>& best() const { return best_path_; }
  int64_t nodes() const { return nodes_; }
  int64_t pruned() const { return pruned_; }

 private:
  bool Eligible(int ad) const {
    if (used_[ad]) return false;
    return is_high_[ad] ? high_left_ > 0 : low_left_ > 0;
  }

  double OpenBlocksBound(size_t from) const {
    double bound = 0.0;
    for (size_t b = from; b < candidates_.size(); ++b) {
      for (const Candidate& c : candidates_[b]) {
        if (Eligible(c.ad)) {
          bound += c.value;
          break;
        }
      }
    }
    return bound;
  }

  void Visit(size_t block, double value) {
    ++nodes_;
    if (block == candidates_.size()) {
      if (!found_ || value > incumbent_) {
        found_ = true;
        incumbent_ = value;
        best_path_ = path_;
      }
      return;
    }
    if (found_ && value + OpenBlocksBound(block) <= incumbent_) {
      ++pruned_;
      return;
    }
    for (const Candidate& c : candidates_[block]) {
      if (!Eligible(c.ad)) continue;
      int& left = is_high_[c.ad] ? high_left_ : low_left_;
      used_[c.ad] = 1;
      --left;
      path_[block] = c;
      Visit(block + 1, value + c.value);
      ++left;
      used_[c.ad] = 0;
    }
  }

  std::vector<std::vector<Candidate>> candidates_;
  std::vector<char> is_high_;
  std::vector<char> used_;
  std::vector<Candidate> path_;
  std::vector<Candidate> best_path_;
  int high_left_ = 0;
  int low_left_ = 0;
  bool found_ = false;
  double incumbent_ = -std::numeric_limits<double>::infinity();
  int64_t nodes_ = 0;
  int64_t pruned_ = 0;
};

}  // namespace

SolveReport SolveBranchAndBound(const ProgramSpec& program,
                                const AdInventory& inventory,
                                const RelevanceMatrix& rel,
                                const RewardParams& params,
                                const SolveOptions& /*options*/) {
  const auto start = std::chrono::steady_clock::now();
  internal::CheckInstance(program, inventory, rel, params);
  const internal::ContributionTable table(program, inventory, rel, params);
  const std::vector<SlotBlock> blocks =
      PartitionSlots(program.slot_count(), params.k());

  BlockSearch search(table, blocks, inventory);
  search.Run(params.k());
  if (!search.found()) {
    throw Error(ErrorCode::kInternal, "branch and bound found no schedule");
  }

  std::vector<int> ads;
  std::vector<int> slots;
  for (const Candidate& c : search.best()) {
    ads.push_back(c.ad);
    slots.push_back(c.slot);
  }
  SolveReport report;
  report.solver = SolverKind::kBranchAndBound;
  report.schedule = internal::ToSchedule(inventory, ads, slots);
  report.reward = Reward(report.schedule, program, inventory, rel, params);
  report.candidates_evaluated = search.nodes();
  report.nodes_pruned = search.pruned();
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace adslot
