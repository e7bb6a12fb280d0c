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

#include "adslot/app.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "adslot/instance.h"

namespace adslot {
namespace {

namespace fs = std::filesystem;

std::string Slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class RunTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ =
        fs::temp_directory_path() /
        ("adslot_app_test_" +
         std::string(
             ::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    std::ofstream(dir_ / "program.csv")
        << "# adslot.program v1\nid,valence\ns1,90\ns2,10\ns3,80\n";
    std::ofstream(dir_ / "inventory.csv")
        << "# adslot.inventory v1\nid,valence\nad1,80\nad2,20\n";
    std::ofstream(dir_ / "rel.csv") << "# adslot.rel v1\n1,1\n1,1\n1,1\n";
    config_.program_file = dir_ / "program.csv";
    config_.inventory_file = dir_ / "inventory.csv";
    config_.rel_file = dir_ / "rel.csv";
    config_.k = 2;
    config_.out_dir = dir_ / "out";
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
  RunConfig config_;
  std::ostringstream log_;
};

TEST_F(RunTest, BruteForceTinyInstance) {
  config_.solver = RunSolver::kBrute;
  ASSERT_EQ(adslot::Run(config_, log_), kExitOk) << log_.str();
  EXPECT_EQ(Slurp(config_.out_dir / "schedule.csv"),
            "# adslot.schedule v1\nslot,rank,ad_id\n1,0,ad2\n2,0,ad1\n");
  const auto report =
      nlohmann::json::parse(Slurp(config_.out_dir / "report.json"));
  EXPECT_NEAR(report["reward"].get<double>(), 1.3, 1e-12);
  EXPECT_EQ(report["solver"], "brute_force");
  EXPECT_TRUE(report.contains("total_variation"));
  EXPECT_TRUE(fs::exists(config_.out_dir / "profile.csv"));
}

TEST_F(RunTest, EverySolverWritesSameScheduleOnTinyInstance) {
  std::string first;
  for (RunSolver s :
       {RunSolver::kBrute, RunSolver::kBranchAndBound, RunSolver::kLp}) {
    config_.solver = s;
    ASSERT_EQ(adslot::Run(config_, log_), kExitOk) << log_.str();
    const std::string schedule = Slurp(config_.out_dir / "schedule.csv");
    if (first.empty()) first = schedule;
    EXPECT_EQ(schedule, first);
  }
}

TEST_F(RunTest, TrivialIsReproducible) {
  config_.solver = RunSolver::kTrivial;
  config_.seed = 7;
  ASSERT_EQ(adslot::Run(config_, log_), kExitOk) << log_.str();
  const std::string a = Slurp(config_.out_dir / "schedule.csv");
  const std::string ra = Slurp(config_.out_dir / "report.json");
  ASSERT_EQ(adslot::Run(config_, log_), kExitOk);
  EXPECT_EQ(Slurp(config_.out_dir / "schedule.csv"), a);
  const auto report = nlohmann::json::parse(ra);
  EXPECT_TRUE(report["reward"].is_null());
  EXPECT_EQ(report["seed"], 7);
}

TEST_F(RunTest, OddKIsInfeasible) {
  config_.k = 1;
  EXPECT_EQ(adslot::Run(config_, log_), kExitInfeasible);
  EXPECT_NE(log_.str().find("polarity balance"), std::string::npos)
      << log_.str();
}

TEST_F(RunTest, KAboveSlotsIsInfeasible) {
  config_.k = 4;
  std::ofstream(dir_ / "inventory.csv")
      << "# adslot.inventory v1\nid,valence\nad1,80\nad2,20\nad3,90\nad4,5\n";
  std::ofstream(dir_ / "rel.csv")
      << "# adslot.rel v1\n1,1,1,1\n1,1,1,1\n1,1,1,1\n";
  EXPECT_EQ(adslot::Run(config_, log_), kExitInfeasible);
}

TEST_F(RunTest, CapExceeded) {
  config_.solver = RunSolver::kBrute;
  config_.candidate_cap = 1;
  EXPECT_EQ(adslot::Run(config_, log_), kExitTooLarge);
}

TEST_F(RunTest, ConfigErrors) {
  RunConfig missing = config_;
  missing.program_file = dir_ / "nope.csv";
  EXPECT_EQ(adslot::Run(missing, log_), kExitConfig);

  RunConfig bad_weights = config_;
  bad_weights.alpha = 0.7;
  bad_weights.beta = 0.7;
  EXPECT_EQ(adslot::Run(bad_weights, log_), kExitConfig);

  RunConfig no_rel = config_;
  no_rel.rel_file.reset();
  EXPECT_EQ(adslot::Run(no_rel, log_), kExitConfig);

  // Relevance is not needed when beta is zero.
  no_rel.alpha = 1.0;
  no_rel.beta = 0.0;
  EXPECT_EQ(adslot::Run(no_rel, log_), kExitOk) << log_.str();
}

TEST_F(RunTest, FeatureDirectory) {
  const fs::path features = dir_ / "features";
  fs::create_directories(features);
  for (const char* id : {"s1", "s2", "s3", "ad1", "ad2"}) {
    std::ofstream(features / (std::string(id) + ".txt")) << "1 2 3\n4 5 6\n";
  }
  config_.rel_file.reset();
  config_.features_dir = features;
  config_.solver = RunSolver::kBranchAndBound;
  ASSERT_EQ(adslot::Run(config_, log_), kExitOk) << log_.str();
  // Identical features everywhere give rel = 1, the same as rel.csv.
  EXPECT_EQ(Slurp(config_.out_dir / "schedule.csv"),
            "# adslot.schedule v1\nslot,rank,ad_id\n1,0,ad2\n2,0,ad1\n");
}

TEST(BenchmarkTest, SmallCellAgrees) {
  const nlohmann::json table = RunBenchmark({{6, 4, 2}}, {});
  ASSERT_EQ(table.size(), 1u);
  EXPECT_EQ(table[0]["brute_status"], "ok");
  EXPECT_EQ(table[0]["rewards_agree"], true);
  EXPECT_EQ(table[0]["status"], "ok");
}

TEST(BenchmarkTest, LargeCellSkipsBruteForce) {
  const nlohmann::json table = RunBenchmark({{20, 11, 8}}, {});
  ASSERT_EQ(table.size(), 1u);
  EXPECT_EQ(table[0]["brute_status"], "skipped_cap");
  EXPECT_EQ(table[0]["status"], "ok");
  EXPECT_TRUE(table[0]["bnb_reward"].is_number());
}

TEST(BenchmarkTest, Grid) {
  EXPECT_TRUE(RunBenchmark({}, {}).empty());
  const auto grid = ParseBenchGrid("6:4:2,24:11:8");
  ASSERT_EQ(grid.size(), 2u);
  EXPECT_EQ(grid[1].num_ads, 24);
  EXPECT_EQ(grid[1].slot_count, 11);
  EXPECT_EQ(grid[1].k, 8);
  EXPECT_TRUE(ParseBenchGrid("").empty());
  EXPECT_THROW(ParseBenchGrid("6:4"), Error);
}

}  // namespace
}  // namespace adslot
