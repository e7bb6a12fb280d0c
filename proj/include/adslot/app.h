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

// End-to-end runs behind the command line tool.

#ifndef ADSLOT_APP_H_
#define ADSLOT_APP_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "adslot/error.h"
#include "adslot/io.h"
#include "adslot/relevance.h"

namespace adslot {

enum class RunSolver { kBrute, kBranchAndBound, kLp, kTrivial };

// Process exit codes of `adslot solve`.
enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 1,
  kExitInfeasible = 2,
  kExitTooLarge = 3,
  kExitInternal = 4,
};

ExitCode ExitCodeFor(ErrorCode code);

struct RunConfig {
  std::filesystem::path program_file;
  std::filesystem::path inventory_file;
  std::optional<std::filesystem::path> features_dir;
  std::optional<std::filesystem::path> rel_file;
  int k = 8;
  double alpha = 0.5;
  double beta = 0.5;
  RunSolver solver = RunSolver::kBranchAndBound;
  Pairing pairing = Pairing::kAligned;
  ValenceScale scale = ValenceScale::kHundred;
  uint64_t seed = 0;
  std::filesystem::path out_dir = ".";
  int64_t candidate_cap = 100'000'000;
  int threads = 1;
};

// Loads the inputs, builds or loads relevance, solves, and writes
// schedule.csv, report.json and profile.csv into `out_dir`. Diagnostics go to
// `log`. Never throws; failures map to ExitCode values.
int Run(const RunConfig& config, std::ostream& log);

struct BenchCell {
  int num_ads = 0;
  int slot_count = 0;
  int k = 0;
};

struct BenchOptions {
  uint64_t seed = 1;
  double alpha = 0.5;
  int64_t candidate_cap = 100'000'000;
  int threads = 1;
};

// One row per cell: a seeded random instance solved by branch and bound and,
// under the cap, by brute force. The table is a JSON array of objects.
nlohmann::json RunBenchmark(const std::vector<BenchCell>& grid,
                            const BenchOptions& options);

// Parses "P:M:K,P:M:K,...". An empty string is an empty grid.
std::vector<BenchCell> ParseBenchGrid(const std::string& text);

}  // namespace adslot

#endif  // ADSLOT_APP_H_
