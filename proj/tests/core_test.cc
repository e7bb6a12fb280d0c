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

#include <gtest/gtest.h>

#include <random>

#include "adslot/error.h"
#include "adslot/instance.h"
#include "adslot/random.h"
#include "test_util.h"

namespace adslot {
namespace {

using ::adslot::testing::DenseReward;
using ::adslot::testing::MakeInventory;
using ::adslot::testing::MakeProgram;
using ::adslot::testing::MakeSchedule;
using ::adslot::testing::TinyInstance;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no adslot::Error thrown";
  return ErrorCode::kInternal;
}

TEST(ClassifyPolarityTest, ThresholdIsStrict) {
  EXPECT_EQ(ClassifyPolarity(Valence(0.9)), Polarity::kHigh);
  EXPECT_EQ(ClassifyPolarity(Valence(0.5)), Polarity::kLow);
  EXPECT_EQ(ClassifyPolarity(Valence(0.0)), Polarity::kLow);
  EXPECT_EQ(ClassifyPolarity(Valence(std::nextafter(0.5, 1.0))),
            Polarity::kHigh);
}

TEST(ValenceTest, RejectsOutOfRange) {
  EXPECT_EQ(CodeOf([] { Valence(1.2); }), ErrorCode::kValenceOutOfRange);
  EXPECT_EQ(CodeOf([] { Valence(-0.01); }), ErrorCode::kValenceOutOfRange);
  EXPECT_EQ(CodeOf([] { Valence(std::nan("")); }),
            ErrorCode::kValenceOutOfRange);
  EXPECT_NO_THROW(Valence(1.0));
}

TEST(ProgramSpecTest, SlotsFollowScenes) {
  const ProgramSpec program = MakeProgram({0.9, 0.1, 0.8});
  EXPECT_EQ(program.scene_count(), 3);
  EXPECT_EQ(program.slot_count(), 2);
  EXPECT_EQ(program.SceneBeforeSlot(1).id, "s1");
  EXPECT_EQ(program.SceneBeforeSlot(2).id, "s2");
  EXPECT_THROW(program.SceneBeforeSlot(3), Error);
}

TEST(ProgramSpecTest, Errors) {
  EXPECT_EQ(CodeOf([] { MakeProgram({0.3}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(
      CodeOf([] { ProgramSpec({{"x", Valence(0.1)}, {"x", Valence(0.2)}}); }),
      ErrorCode::kDuplicateId);
  EXPECT_EQ(CodeOf([] {
              ProgramSpec({{"a", Valence(0.1)}, {"b", Valence(0.2)}}, 0);
            }),
            ErrorCode::kInvalidArgument);
}

TEST(AdInventoryTest, LookupAndErrors) {
  const AdInventory inv = MakeInventory({0.8, 0.2, 0.5});
  EXPECT_EQ(inv.IndexOf("ad2"), 1);
  EXPECT_FALSE(inv.IndexOf("nope").has_value());
  EXPECT_EQ(inv.CountPolarity(Polarity::kHigh), 1);
  EXPECT_EQ(inv.CountPolarity(Polarity::kLow), 2);
  EXPECT_EQ(CodeOf([] { AdInventory({}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(
      CodeOf([] { AdInventory({{"a", Valence(0.1)}, {"a", Valence(0.9)}}); }),
      ErrorCode::kDuplicateId);
}

TEST(RewardParamsTest, Validation) {
  EXPECT_NO_THROW(RewardParams(0.5, 0.5, 8));
  EXPECT_NO_THROW(RewardParams(0.0, 1.0, 0));
  EXPECT_NO_THROW(RewardParams(0.3, 0.7 + 5e-10, 2));
  EXPECT_EQ(CodeOf([] { RewardParams(0.5, 0.6, 2); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { RewardParams(1.5, -0.5, 2); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { RewardParams(0.5, 0.5, 3); }), ErrorCode::kInfeasibleK);
  EXPECT_EQ(CodeOf([] { RewardParams(0.5, 0.5, -2); }),
            ErrorCode::kInfeasibleK);
}

TEST(PartitionSlotsTest, ElevenSlotsEightBlocks) {
  const auto blocks = PartitionSlots(11, 8);
  const std::vector<std::pair<int, int>> expected = {
      {1, 1}, {2, 2}, {3, 4}, {5, 5}, {6, 6}, {7, 8}, {9, 9}, {10, 11}};
  ASSERT_EQ(blocks.size(), expected.size());
  for (size_t b = 0; b < blocks.size(); ++b) {
    EXPECT_EQ(blocks[b].first, expected[b].first) << b;
    EXPECT_EQ(blocks[b].last, expected[b].second) << b;
  }
}

TEST(PartitionSlotsTest, CoversAllSlotsWithNearEqualSizes) {
  for (int m = 1; m <= 15; ++m) {
    for (int k = 1; k <= m; ++k) {
      const auto blocks = PartitionSlots(m, k);
      ASSERT_EQ(static_cast<int>(blocks.size()), k);
      int next = 1;
      int smallest = m;
      int largest = 0;
      for (const SlotBlock& b : blocks) {
        EXPECT_EQ(b.first, next);
        next = b.last + 1;
        smallest = std::min(smallest, b.size());
        largest = std::max(largest, b.size());
      }
      EXPECT_EQ(next, m + 1);
      EXPECT_LE(largest - smallest, 1) << m << " " << k;
    }
  }
  EXPECT_TRUE(PartitionSlots(5, 0).empty());
  EXPECT_THROW(PartitionSlots(3, 4), Error);
}

TEST(RewardTest, EmptySchedule) {
  TinyInstance t;
  EXPECT_EQ(
      Reward({}, t.program, t.inventory, t.rel, RewardParams(0.5, 0.5, 0)),
      0.0);
}

TEST(RewardTest, HandComputedTinyInstance) {
  // Contributions a*i*(1-v) + b*|dv|*rel with a = b = 0.5:
  //   ad2@1: 0.4 + 0.35, ad1@2: 0.2 + 0.35 -> 1.3
  //   ad1@1: 0.1 + 0.05, ad2@2: 0.8 + 0.05 -> 1.0
  TinyInstance t;
  const RewardParams params(0.5, 0.5, 2);
  const Schedule best = MakeSchedule({{1, "ad2"}, {2, "ad1"}});
  const Schedule other = MakeSchedule({{1, "ad1"}, {2, "ad2"}});
  EXPECT_NEAR(Reward(best, t.program, t.inventory, t.rel, params), 1.3, 1e-12);
  EXPECT_NEAR(Reward(other, t.program, t.inventory, t.rel, params), 1.0, 1e-12);
  EXPECT_NEAR(DenseReward(best, t.program, t.inventory, t.rel, 0.5, 0.5), 1.3,
              1e-12);
}

TEST(RewardTest, FullValenceAdAddsNothingToPositionalTerm) {
  // One HV ad of valence 1 with one LV ad of valence 0.2 (K must be even).
  // Moving the valence-1 ad changes nothing but the LV ad's own slot weight.
  const ProgramSpec program = MakeProgram({0.3, 0.6, 0.9});
  const AdInventory inventory = MakeInventory({1.0, 0.2});
  const RelevanceMatrix rel = RelevanceMatrix::Constant(3, 2, 0.7);
  const RewardParams params(1.0, 0.0, 2);
  EXPECT_DOUBLE_EQ(Reward(MakeSchedule({{1, "ad1"}, {2, "ad2"}}), program,
                          inventory, rel, params),
                   2 * 0.8);
  EXPECT_DOUBLE_EQ(Reward(MakeSchedule({{2, "ad1"}, {1, "ad2"}}), program,
                          inventory, rel, params),
                   1 * 0.8);
}

TEST(RewardTest, Errors) {
  TinyInstance t;
  const RewardParams params(0.5, 0.5, 2);
  const Schedule ok = MakeSchedule({{1, "ad2"}, {2, "ad1"}});
  EXPECT_EQ(CodeOf([&] {
              Reward(ok, t.program, t.inventory,
                     RelevanceMatrix::Constant(2, 2, 1.0), params);
            }),
            ErrorCode::kDimensionMismatch);
  EXPECT_EQ(CodeOf([&] {
              Reward(MakeSchedule({{1, "ad2"}, {1, "ad1"}}), t.program,
                     t.inventory, t.rel, params);
            }),
            ErrorCode::kInfeasibleSchedule);
}

TEST(ValidateScheduleTest, MinimalFeasible) {
  TinyInstance t;
  const auto r = ValidateSchedule(
      MakeSchedule({{1, "ad1"}, {2, "ad2"}}), t.program, t.inventory,
      RewardParams(0.5, 0.5, 2), ScheduleMode::kStrict);
  EXPECT_TRUE(r.ok()) << r.message;
}

TEST(ValidateScheduleTest, BothHighValenceFailsBalance) {
  const ProgramSpec program = MakeProgram({0.5, 0.5, 0.5});
  const AdInventory inventory = MakeInventory({0.8, 0.9});
  const auto r = ValidateSchedule(MakeSchedule({{1, "ad1"}, {2, "ad2"}}),
                                  program, inventory, RewardParams(0.5, 0.5, 2),
                                  ScheduleMode::kStrict);
  EXPECT_EQ(r.violated, Constraint::kPolarityBalance);
}

TEST(ValidateScheduleTest, BothAdsInFirstBlockFailsUniformity) {
  // M = 4, K = 2: blocks {1,2} and {3,4}.
  const ProgramSpec program = MakeProgram({0.5, 0.5, 0.5, 0.5, 0.5});
  const AdInventory inventory = MakeInventory({0.8, 0.2});
  const auto r = ValidateSchedule(MakeSchedule({{1, "ad1"}, {2, "ad2"}}),
                                  program, inventory, RewardParams(0.5, 0.5, 2),
                                  ScheduleMode::kStrict);
  EXPECT_EQ(r.violated, Constraint::kBlockUniformity);
  EXPECT_EQ(r.slots, (std::vector<int>{1, 2}));
  EXPECT_EQ(r.ad_ids, (std::vector<std::string>{"ad1", "ad2"}));
}

TEST(ValidateScheduleTest, ConstraintOrder) {
  const ProgramSpec program = MakeProgram({0.5, 0.5, 0.5, 0.5, 0.5});
  const AdInventory inventory = MakeInventory({0.8, 0.2, 0.9, 0.1});
  const RewardParams params(0.5, 0.5, 2);
  auto check = [&](const Schedule& s) {
    return ValidateSchedule(s, program, inventory, params,
                            ScheduleMode::kStrict)
        .violated;
  };
  EXPECT_EQ(check(MakeSchedule({{1, "ad1"}, {1, "ad2"}})),
            Constraint::kOneAdPerSlot);
  EXPECT_EQ(check(MakeSchedule({{1, "ad1"}})), Constraint::kAdCount);
  EXPECT_EQ(check(MakeSchedule({{1, "ad1"}, {3, "ad2"}, {4, "ad4"}})),
            Constraint::kAdCount);
  EXPECT_EQ(check(MakeSchedule({{1, "zzz"}, {3, "ad2"}})),
            Constraint::kUnknownAd);
  EXPECT_EQ(check(MakeSchedule({{1, "ad1"}, {3, "ad1"}})),
            Constraint::kDistinctAds);
  EXPECT_EQ(check(MakeSchedule({{0, "ad1"}, {3, "ad2"}})),
            Constraint::kSlotRange);
  EXPECT_EQ(check(MakeSchedule({{2, "ad1"}, {5, "ad2"}})),
            Constraint::kSlotRange);
  Schedule ranked = MakeSchedule({{1, "ad1"}, {3, "ad2"}});
  ranked.entries[0].rank = 1;
  EXPECT_EQ(check(ranked), Constraint::kRank);
  EXPECT_EQ(check(MakeSchedule({{2, "ad1"}, {4, "ad2"}})), Constraint::kNone);
}

TEST(ValidateScheduleTest, BaselineMode) {
  const ProgramSpec program = MakeProgram({0.5, 0.5, 0.5, 0.5});
  const AdInventory inventory = MakeInventory({0.8, 0.2, 0.9, 0.1});
  const RewardParams params(0.5, 0.5, 4);
  Schedule s;
  s.entries = {{0, 0, "ad1"}, {0, 1, "ad2"}, {2, 0, "ad3"}, {2, 1, "ad4"}};
  EXPECT_TRUE(
      ValidateSchedule(s, program, inventory, params, ScheduleMode::kBaseline)
          .ok());
  // The same schedule is not strict.
  EXPECT_FALSE(
      ValidateSchedule(s, program, inventory, params, ScheduleMode::kStrict)
          .ok());
  s.entries[1].rank = 0;
  EXPECT_EQ(
      ValidateSchedule(s, program, inventory, params, ScheduleMode::kBaseline)
          .violated,
      Constraint::kDistinctSlotRank);
  s.entries[1] = {4, 0, "ad2"};
  EXPECT_EQ(
      ValidateSchedule(s, program, inventory, params, ScheduleMode::kBaseline)
          .violated,
      Constraint::kSlotRange);
  s.entries.pop_back();
  s.entries[1] = {1, 0, "ad2"};
  EXPECT_EQ(
      ValidateSchedule(s, program, inventory, params, ScheduleMode::kBaseline)
          .violated,
      Constraint::kAdCount);
}

// Random strict schedule over a random instance.
struct RandomCase {
  Instance inst;
  RewardParams params;
  Schedule schedule;
};

RandomCase MakeRandomCase(uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int m = 2 + static_cast<int>(UniformIndex(rng, 8));
  const int p = 2 + static_cast<int>(UniformIndex(rng, 9));
  Instance inst = RandomInstance(p, m, seed * 7919 + 1);
  int k = 2 * static_cast<int>(UniformIndex(rng, std::min(m, p) / 2 + 1));
  k = std::min({k, 2 * inst.inventory.CountPolarity(Polarity::kHigh),
                2 * inst.inventory.CountPolarity(Polarity::kLow)});
  const double alpha = UniformOpen(rng);
  RewardParams params(alpha, 1.0 - alpha, k);

  std::vector<int> high;
  std::vector<int> low;
  for (int j = 0; j < p; ++j) {
    (inst.inventory.ad(j).polarity() == Polarity::kHigh ? high : low)
        .push_back(j);
  }
  PartialShuffle(high, high.size(), rng);
  PartialShuffle(low, low.size(), rng);
  std::vector<int> chosen(high.begin(), high.begin() + k / 2);
  chosen.insert(chosen.end(), low.begin(), low.begin() + k / 2);
  PartialShuffle(chosen, chosen.size(), rng);
  Schedule schedule;
  const auto blocks = PartitionSlots(m, k);
  for (int b = 0; b < k; ++b) {
    const int slot =
        blocks[b].first + static_cast<int>(UniformIndex(rng, blocks[b].size()));
    schedule.entries.push_back({slot, 0, inst.inventory.ad(chosen[b]).id});
  }
  return {std::move(inst), params, std::move(schedule)};
}

TEST(RewardPropertyTest, MatchesDenseOracle) {
  for (uint64_t seed = 1; seed <= 300; ++seed) {
    const RandomCase c = MakeRandomCase(seed);
    const auto& [program, inventory, rel] = c.inst;
    ASSERT_TRUE(ValidateSchedule(c.schedule, program, inventory, c.params,
                                 ScheduleMode::kStrict)
                    .ok());
    EXPECT_NEAR(Reward(c.schedule, program, inventory, rel, c.params),
                DenseReward(c.schedule, program, inventory, rel,
                            c.params.alpha(), c.params.beta()),
                1e-12)
        << seed;
  }
}

TEST(RewardPropertyTest, LinearInAlphaAndBeta) {
  for (uint64_t seed = 1; seed <= 300; ++seed) {
    const RandomCase c = MakeRandomCase(seed);
    const auto& [program, inventory, rel] = c.inst;
    const int k = c.params.k();
    const double mixed = Reward(c.schedule, program, inventory, rel, c.params);
    const double pos =
        Reward(c.schedule, program, inventory, rel, RewardParams(1, 0, k));
    const double match =
        Reward(c.schedule, program, inventory, rel, RewardParams(0, 1, k));
    EXPECT_NEAR(mixed, c.params.alpha() * pos + c.params.beta() * match, 1e-12)
        << seed;
  }
}

TEST(RewardPropertyTest, BetaZeroIgnoresRelevance) {
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    const RandomCase c = MakeRandomCase(seed);
    const auto& [program, inventory, rel] = c.inst;
    const RewardParams params(1.0, 0.0, c.params.k());
    const Instance other =
        RandomInstance(inventory.size(), program.slot_count(), seed + 100000);
    EXPECT_EQ(Reward(c.schedule, program, inventory, rel, params),
              Reward(c.schedule, program, inventory, other.rel, params));
  }
}

TEST(RewardPropertyTest, EntryOrderIrrelevant) {
  std::mt19937_64 rng(42);
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    const RandomCase c = MakeRandomCase(seed);
    const auto& [program, inventory, rel] = c.inst;
    Schedule shuffled = c.schedule;
    PartialShuffle(shuffled.entries, shuffled.entries.size(), rng);
    EXPECT_EQ(Reward(c.schedule, program, inventory, rel, c.params),
              Reward(shuffled, program, inventory, rel, c.params));
  }
}

TEST(RewardPropertyTest, SwapChangesPositionalTermPredictably) {
  for (uint64_t seed = 1; seed <= 300; ++seed) {
    const RandomCase c = MakeRandomCase(seed);
    if (c.schedule.entries.size() < 2) continue;
    const auto& [program, inventory, rel] = c.inst;
    const RewardParams pos_only(1.0, 0.0, c.params.k());
    Schedule swapped = c.schedule;
    auto& e1 = swapped.entries[0];
    auto& e2 = swapped.entries[1];
    const double v1 =
        inventory.ad(*inventory.IndexOf(e1.ad_id)).valence.value();
    const double v2 =
        inventory.ad(*inventory.IndexOf(e2.ad_id)).valence.value();
    const int i1 = e1.slot;
    const int i2 = e2.slot;
    std::swap(e1.ad_id, e2.ad_id);
    const double delta = Reward(swapped, program, inventory, rel, pos_only) -
                         Reward(c.schedule, program, inventory, rel, pos_only);
    // v1 and v2 are the valences of the ads that start in slots i1 and i2.
    EXPECT_NEAR(delta, (i2 - i1) * (v2 - v1), 1e-12) << seed;
  }
}

TEST(PolarityPropertyTest, PartitionsInventory) {
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    const Instance inst =
        RandomInstance(1 + static_cast<int>(seed % 20), 3, seed);
    EXPECT_EQ(inst.inventory.CountPolarity(Polarity::kHigh) +
                  inst.inventory.CountPolarity(Polarity::kLow),
              inst.inventory.size());
  }
}

}  // namespace
}  // namespace adslot
