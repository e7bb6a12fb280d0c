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

// adslot: choose and place ads inside a program video.
//
//   adslot solve --program P --inventory I [--rel-file R | --features DIR]
//                [--solver brute|bnb|lp|trivial] [--k 8] [--alpha 0.5] ...
//   adslot bench --grid 6:4:2,20:11:8 [--out table.json]
//   adslot gen --ads 24 --slots 11 --out DIR

#include <fmt/format.h>

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>

#include "adslot/app.h"
#include "adslot/instance.h"
#include "adslot/io.h"

namespace {

int RunGen(int ads, int slots, uint64_t seed, const std::string& out_dir) {
  using adslot::ValenceScale;
  const adslot::Instance inst = adslot::RandomInstance(ads, slots, seed);
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path dir(out_dir);
  std::ofstream program(dir / "program.csv");
  adslot::WriteProgram(program, inst.program, ValenceScale::kHundred);
  std::ofstream inventory(dir / "inventory.csv");
  adslot::WriteInventory(inventory, inst.inventory, ValenceScale::kHundred);
  std::ofstream rel(dir / "rel.csv");
  adslot::WriteRelevance(rel, inst.rel);
  if (!program || !inventory || !rel) {
    fmt::print(stderr, "error: cannot write instance to '{}'\n", out_dir);
    return adslot::kExitConfig;
  }
  return adslot::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affect-aware ad selection and placement for program videos"};
  app.require_subcommand(1);

  adslot::RunConfig config;
  std::string program_file;
  std::string inventory_file;
  std::string features_dir;
  std::string rel_file;
  std::string out_dir = ".";
  std::optional<double> beta;

  const std::map<std::string, adslot::RunSolver> solvers{
      {"brute", adslot::RunSolver::kBrute},
      {"bnb", adslot::RunSolver::kBranchAndBound},
      {"lp", adslot::RunSolver::kLp},
      {"trivial", adslot::RunSolver::kTrivial}};
  const std::map<std::string, adslot::ValenceScale> scales{
      {"unit", adslot::ValenceScale::kUnit},
      {"hundred", adslot::ValenceScale::kHundred}};
  const std::map<std::string, adslot::Pairing> pairings{
      {"aligned", adslot::Pairing::kAligned},
      {"all_pairs", adslot::Pairing::kAllPairs}};

  CLI::App* solve = app.add_subcommand("solve", "Solve one instance");
  solve->add_option("--program", program_file, "Program scene file")
      ->required();
  solve->add_option("--inventory", inventory_file, "Ad inventory file")
      ->required();
  solve->add_option("--features", features_dir,
                    "Directory of <id>.txt keyframe feature files");
  solve->add_option("--rel-file", rel_file,
                    "Precomputed scenes x ads relevance matrix");
  solve->add_option("--k", config.k, "Number of ads to embed")
      ->capture_default_str();
  solve->add_option("--alpha", config.alpha, "Weight of tail placement")
      ->capture_default_str();
  solve->add_option("--beta", beta, "Weight of scene matching (1 - alpha)");
  solve->add_option("--solver", config.solver, "Solver")
      ->transform(CLI::CheckedTransformer(solvers, CLI::ignore_case))
      ->option_text("brute|bnb|lp|trivial [bnb]");
  solve->add_option("--scale", config.scale, "Valence scale of input files")
      ->transform(CLI::CheckedTransformer(scales, CLI::ignore_case))
      ->option_text("unit|hundred [hundred]");
  solve->add_option("--pairing", config.pairing, "Keyframe pairing")
      ->transform(CLI::CheckedTransformer(pairings, CLI::ignore_case))
      ->option_text("aligned|all_pairs [aligned]");
  solve->add_option("--seed", config.seed, "Seed for the trivial baseline")
      ->capture_default_str();
  solve
      ->add_option("--cap", config.candidate_cap,
                   "Maximum brute-force candidates")
      ->capture_default_str();
  solve->add_option("--threads", config.threads, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  solve->add_option("--out", out_dir, "Output directory")
      ->capture_default_str();

  std::string grid;
  std::string bench_out;
  adslot::BenchOptions bench_options;
  CLI::App* bench =
      app.add_subcommand("bench", "Compare brute force and branch and bound");
  bench->add_option("--grid", grid, "Cells as P:M:K,P:M:K,...");
  bench->add_option("--seed", bench_options.seed, "Instance seed")
      ->capture_default_str();
  bench->add_option("--alpha", bench_options.alpha, "Weight of tail placement")
      ->capture_default_str();
  bench
      ->add_option("--cap", bench_options.candidate_cap,
                   "Maximum brute-force candidates")
      ->capture_default_str();
  bench->add_option("--threads", bench_options.threads, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--out", bench_out,
                    "Write the table here (default stdout)");

  int gen_ads = 24;
  int gen_slots = 11;
  uint64_t gen_seed = 1;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "Write a random instance");
  gen->add_option("--ads", gen_ads, "Inventory size")->capture_default_str();
  gen->add_option("--slots", gen_slots, "Slots (scenes minus one)")
      ->capture_default_str();
  gen->add_option("--seed", gen_seed, "Instance seed")->capture_default_str();
  gen->add_option("--out", gen_out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : adslot::kExitConfig;
  }

  try {
    if (*solve) {
      config.program_file = program_file;
      config.inventory_file = inventory_file;
      if (!features_dir.empty()) config.features_dir = features_dir;
      if (!rel_file.empty()) config.rel_file = rel_file;
      config.out_dir = out_dir;
      config.beta = beta.value_or(1.0 - config.alpha);
      return adslot::Run(config, std::cerr);
    }
    if (*bench) {
      const auto cells = adslot::ParseBenchGrid(grid);
      const std::string table =
          adslot::RunBenchmark(cells, bench_options).dump(2) + "\n";
      if (bench_out.empty()) {
        std::cout << table;
      } else {
        std::ofstream out(bench_out);
        out << table;
        if (!out) return adslot::kExitConfig;
      }
      return adslot::kExitOk;
    }
    if (*gen) return RunGen(gen_ads, gen_slots, gen_seed, gen_out);
  } catch (const adslot::Error& e) {
    fmt::print(stderr, "error [{}]: {}\n", adslot::ErrorCodeName(e.code()),
               e.what());
    return adslot::ExitCodeFor(e.code());
  }
  return adslot::kExitOk;
}
