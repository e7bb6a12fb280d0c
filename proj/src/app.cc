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

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "adslot/baselines.h"
#include "adslot/core.h"
#include "adslot/instance.h"
#include "adslot/profile.h"
#include "adslot/solvers.h"

namespace adslot {
namespace {

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) {
    throw Error(ErrorCode::kParseError,
                fmt::format("cannot write '{}'", path.string()));
  }
}

RelevanceMatrix ResolveRelevance(const RunConfig& config,
                                 const ProgramSpec& program,
                                 const AdInventory& inventory) {
  if (config.rel_file) {
    RelevanceMatrix rel = LoadRelevance(*config.rel_file);
    if (rel.rows() != program.scene_count() || rel.cols() != inventory.size()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  fmt::format("'{}' is {}x{}, expected {} scenes x {} ads",
                              config.rel_file->string(), rel.rows(), rel.cols(),
                              program.scene_count(), inventory.size()));
    }
    return rel;
  }
  if (config.features_dir) {
    std::vector<std::string> scene_ids;
    for (const Scene& s : program.scenes()) scene_ids.push_back(s.id);
    std::vector<std::string> ad_ids;
    for (const Ad& a : inventory.ads()) ad_ids.push_back(a.id);
    return BuildRelevanceMatrix(
        program, inventory,
        LoadFeatureDirectory(*config.features_dir, scene_ids),
        LoadFeatureDirectory(*config.features_dir, ad_ids), config.pairing,
        config.threads);
  }
  if (config.beta > 0.0 && config.solver != RunSolver::kTrivial) {
    throw Error(ErrorCode::kInvalidArgument,
                "beta > 0 needs relevance: pass --rel-file or --features");
  }
  // Relevance only enters through the beta term.
  return RelevanceMatrix::Constant(program.scene_count(), inventory.size(),
                                   0.0);
}

int RunOrThrow(const RunConfig& config, std::ostream& log) {
  const ProgramSpec program = LoadProgram(config.program_file, config.scale);
  const AdInventory inventory =
      LoadInventory(config.inventory_file, config.scale);
  const RewardParams params(config.alpha, config.beta, config.k);
  const RelevanceMatrix rel = ResolveRelevance(config, program, inventory);
  std::filesystem::create_directories(config.out_dir);

  nlohmann::json report_json;
  Schedule schedule;
  if (config.solver == RunSolver::kTrivial) {
    schedule = TrivialSchedule(program, inventory, config.k, config.seed);
    const ValidationResult check = ValidateSchedule(
        schedule, program, inventory, params, ScheduleMode::kBaseline);
    if (!check.ok()) {
      throw Error(ErrorCode::kInternal,
                  fmt::format("trivial schedule invalid: {}", check.message));
    }
    nlohmann::json entries = nlohmann::json::array();
    for (const ScheduleEntry& e : schedule.Sorted().entries) {
      entries.push_back(
          {{"slot", e.slot}, {"rank", e.rank}, {"ad_id", e.ad_id}});
    }
    report_json = {{"format", "adslot.report"},     {"version", 1},
                   {"solver", "trivial"},           {"alpha", params.alpha()},
                   {"beta", params.beta()},         {"k", params.k()},
                   {"seed", config.seed},           {"reward", nullptr},
                   {"schedule", std::move(entries)}};
  } else {
    SolveOptions options;
    options.threads = config.threads;
    options.candidate_cap = config.candidate_cap;
    const SolverKind kind =
        config.solver == RunSolver::kBrute ? SolverKind::kBruteForce
        : config.solver == RunSolver::kLp  ? SolverKind::kLpRelax
                                           : SolverKind::kBranchAndBound;
    const SolveReport report =
        Solve(kind, program, inventory, rel, params, options);
    const ValidationResult check = ValidateSchedule(
        report.schedule, program, inventory, params, ScheduleMode::kStrict);
    if (!check.ok()) {
      throw Error(ErrorCode::kInternal,
                  fmt::format("{} returned an infeasible schedule: {}",
                              SolverName(kind), check.message));
    }
    const double recomputed =
        Reward(report.schedule, program, inventory, rel, params);
    if (std::abs(recomputed - report.reward) > kRewardTolerance) {
      throw Error(ErrorCode::kInternal,
                  fmt::format("reported reward {} != recomputed {}",
                              report.reward, recomputed));
    }
    schedule = report.schedule;
    report_json = ReportToJson(report, params);
  }

  const VpsProfile profile = BuildProfile(schedule, program, inventory);
  report_json["total_variation"] = TotalVariation(profile);

  std::ostringstream schedule_text;
  WriteSchedule(schedule_text, schedule);
  std::ostringstream profile_text;
  WriteProfile(profile_text, profile);
  WriteFile(config.out_dir / "schedule.csv", schedule_text.str());
  WriteFile(config.out_dir / "profile.csv", profile_text.str());
  WriteFile(config.out_dir / "report.json", report_json.dump(2) + "\n");

  fmt::print(log, "solver={} k={} reward={} -> {}\n",
             report_json["solver"].get<std::string>(), config.k,
             report_json["reward"].dump(), config.out_dir.string());
  return kExitOk;
}

}  // namespace

ExitCode ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInfeasibleInventory:
    case ErrorCode::kInfeasibleK:
    case ErrorCode::kInfeasibleSchedule:
      return kExitInfeasible;
    case ErrorCode::kInstanceTooLarge:
      return kExitTooLarge;
    case ErrorCode::kInternal:
      return kExitInternal;
    default:
      return kExitConfig;
  }
}

int Run(const RunConfig& config, std::ostream& log) {
  try {
    return RunOrThrow(config, log);
  } catch (const Error& e) {
    fmt::print(log, "error [{}]: {}\n", ErrorCodeName(e.code()), e.what());
    return ExitCodeFor(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    fmt::print(log, "error: {}\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    fmt::print(log, "internal error: {}\n", e.what());
    return kExitInternal;
  }
}

std::vector<BenchCell> ParseBenchGrid(const std::string& text) {
  std::vector<BenchCell> grid;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    BenchCell cell;
    char c1 = 0;
    char c2 = 0;
    std::istringstream fields(item);
    if (!(fields >> cell.num_ads >> c1 >> cell.slot_count >> c2 >> cell.k) ||
        c1 != ':' || c2 != ':' || !fields.eof()) {
      throw Error(ErrorCode::kParseError,
                  fmt::format("bad grid cell '{}', expected P:M:K", item));
    }
    grid.push_back(cell);
  }
  return grid;
}

nlohmann::json RunBenchmark(const std::vector<BenchCell>& grid,
                            const BenchOptions& options) {
  nlohmann::json table = nlohmann::json::array();
  for (size_t c = 0; c < grid.size(); ++c) {
    const BenchCell& cell = grid[c];
    nlohmann::json row = {
        {"P", cell.num_ads}, {"M", cell.slot_count}, {"K", cell.k}};
    try {
      const Instance inst =
          RandomInstance(cell.num_ads, cell.slot_count, options.seed + c);
      const RewardParams params(options.alpha, 1.0 - options.alpha, cell.k);
      SolveOptions solve_options;
      solve_options.threads = options.threads;
      solve_options.candidate_cap = options.candidate_cap;

      const SolveReport bnb = SolveBranchAndBound(
          inst.program, inst.inventory, inst.rel, params, solve_options);
      row["bnb_reward"] = bnb.reward;
      row["bnb_nodes"] = bnb.candidates_evaluated;
      row["bnb_nodes_pruned"] = bnb.nodes_pruned;
      row["bnb_seconds"] = std::chrono::duration<double>(bnb.wall_time).count();
      try {
        const SolveReport brute = SolveBruteForce(
            inst.program, inst.inventory, inst.rel, params, solve_options);
        row["brute_status"] = "ok";
        row["brute_reward"] = brute.reward;
        row["brute_candidates"] = brute.candidates_evaluated;
        row["brute_seconds"] =
            std::chrono::duration<double>(brute.wall_time).count();
        row["rewards_agree"] =
            std::abs(brute.reward - bnb.reward) <= kRewardTolerance;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kInstanceTooLarge) throw;
        row["brute_status"] = "skipped_cap";
        row["rewards_agree"] = nullptr;
      }
      row["status"] = "ok";
    } catch (const Error& e) {
      row["status"] = std::string(ErrorCodeName(e.code()));
      row["message"] = e.what();
    }
    table.push_back(std::move(row));
  }
  return table;
}

}  // namespace adslot
