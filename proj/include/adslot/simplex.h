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

// Dense two-phase primal simplex for small linear programs:
//
//   maximize c'x  subject to  rows of (a'x <= b | a'x = b | a'x >= b),  x >= 0.

#ifndef ADSLOT_SIMPLEX_H_
#define ADSLOT_SIMPLEX_H_

#include <cstdint>
#include <utility>
#include <vector>

namespace adslot::lp {

enum class Sense { kLessEqual, kEqual, kGreaterEqual };

struct Row {
  std::vector<std::pair<int, double>> terms;  // (variable, coefficient)
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;
};

struct LinearProgram {
  int num_vars = 0;
  std::vector<double> objective;
  std::vector<Row> rows;
};

enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Solution {
  Status status = Status::kInfeasible;
  double objective = 0.0;
  std::vector<double> x;
  int64_t pivots = 0;
};

// Primal feasibility tolerance of returned solutions.
inline constexpr double kFeasibilityTolerance = 1e-7;

Solution Maximize(const LinearProgram& program);

}  // namespace adslot::lp

#endif  // ADSLOT_SIMPLEX_H_
