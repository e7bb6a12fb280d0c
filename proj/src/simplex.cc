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

#include "adslot/simplex.h"

#include <fmt/format.h>

#include <cmath>
#include <limits>

#include "adslot/error.h"

namespace adslot::lp {
namespace {

constexpr double kPivotEps = 1e-10;
constexpr double kCostEps = 1e-10;
// Consecutive degenerate pivots before switching to Bland's rule.
constexpr int kDegenerateStreak = 50;

class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows),
        cols_(cols),
        a_(static_cast<size_t>(rows) * cols, 0.0),
        b_(rows, 0.0),
        d_(cols, 0.0),
        basis_(rows, -1) {}

  double& a(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  double& b(int i) { return b_[i]; }
  double& d(int j) { return d_[j]; }
  double& z() { return z_; }
  int& basis(int i) { return basis_[i]; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void Pivot(int r, int e) {
    const double inv = 1.0 / a(r, e);
    for (int j = 0; j < cols_; ++j) a(r, j) *= inv;
    b(r) *= inv;
    a(r, e) = 1.0;
    for (int i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const double f = a(i, e);
      if (f == 0.0) continue;
      for (int j = 0; j < cols_; ++j) a(i, j) -= f * a(r, j);
      a(i, e) = 0.0;
      b(i) -= f * b(r);
      if (b(i) < 0.0 && b(i) > -kPivotEps) b(i) = 0.0;
    }
    const double f = d(e);
    if (f != 0.0) {
      for (int j = 0; j < cols_; ++j) d(j) -= f * a(r, j);
      d(e) = 0.0;
      z_ += f * b(r);
    }
    basis(r) = e;
    ++pivots_;
  }

  // Runs primal simplex on the current reduced costs. Columns at or beyond
  // `enter_limit` never enter the basis. Returns false if unbounded.
  bool Optimize(int enter_limit) {
    int degenerate = 0;
    for (;;) {
      const bool bland = degenerate >= kDegenerateStreak;
      int e = -1;
      double best = kCostEps;
      for (int j = 0; j < enter_limit; ++j) {
        if (d(j) > best) {
          e = j;
          if (bland) break;
          best = d(j);
        }
      }
      if (e < 0) return true;

      int r = -1;
      double ratio = std::numeric_limits<double>::infinity();
      for (int i = 0; i < rows_; ++i) {
        if (a(i, e) <= kPivotEps) continue;
        const double q = b(i) / a(i, e);
        if (q < ratio - 1e-12 ||
            (q <= ratio + 1e-12 && r >= 0 && basis(i) < basis(r))) {
          ratio = q;
          r = i;
        }
      }
      if (r < 0) return false;
      degenerate = b(r) <= kPivotEps ? degenerate + 1 : 0;
      Pivot(r, e);
    }
  }

  int64_t pivots() const { return pivots_; }

 private:
  int rows_;
  int cols_;
  std::vector<double> a_;
  std::vector<double> b_;
  std::vector<double> d_;
  std::vector<int> basis_;
  double z_ = 0.0;
  int64_t pivots_ = 0;
};

}  // namespace

Solution Maximize(const LinearProgram& program) {
  const int n = program.num_vars;
  const int m = static_cast<int>(program.rows.size());
  if (static_cast<int>(program.objective.size()) != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                fmt::format("objective has {} entries for {} variables",
                            program.objective.size(), n));
  }

  // Column layout: [original | slack/surplus | artificial].
  int num_slack = 0;
  int num_art = 0;
  for (const Row& row : program.rows) {
    if (row.sense != Sense::kEqual) ++num_slack;
    const bool flip = row.rhs < 0.0;
    const Sense s = row.sense;
    const bool needs_art = s == Sense::kEqual ||
                           (s == Sense::kLessEqual && flip) ||
                           (s == Sense::kGreaterEqual && !flip);
    if (needs_art) ++num_art;
  }
  const int art_begin = n + num_slack;
  Tableau t(m, art_begin + num_art);

  int slack = n;
  int art = art_begin;
  for (int i = 0; i < m; ++i) {
    const Row& row = program.rows[i];
    const double sign = row.rhs < 0.0 ? -1.0 : 1.0;
    for (const auto& [var, coef] : row.terms) {
      if (var < 0 || var >= n) {
        throw Error(ErrorCode::kDimensionMismatch,
                    fmt::format("row {} references variable {}", i, var));
      }
      t.a(i, var) += sign * coef;
    }
    t.b(i) = sign * row.rhs;
    Sense s = row.sense;
    if (sign < 0.0 && s != Sense::kEqual) {
      s = s == Sense::kLessEqual ? Sense::kGreaterEqual : Sense::kLessEqual;
    }
    if (s == Sense::kLessEqual) {
      t.a(i, slack) = 1.0;
      t.basis(i) = slack++;
    } else {
      if (s == Sense::kGreaterEqual) t.a(i, slack++) = -1.0;
      t.a(i, art) = 1.0;
      t.basis(i) = art++;
    }
  }

  // Phase 1: maximize -sum(artificials).
  for (int i = 0; i < m; ++i) {
    if (t.basis(i) < art_begin) continue;
    for (int j = 0; j < art_begin; ++j) t.d(j) += t.a(i, j);
    t.z() -= t.b(i);
  }
  Solution solution;
  t.Optimize(art_begin);
  if (t.z() < -kFeasibilityTolerance) {
    solution.status = Status::kInfeasible;
    solution.pivots = t.pivots();
    return solution;
  }
  // Drive zero-valued artificials out of the basis; rows where that is
  // impossible are redundant and stay inert.
  for (int i = 0; i < m; ++i) {
    if (t.basis(i) < art_begin) continue;
    for (int j = 0; j < art_begin; ++j) {
      if (std::abs(t.a(i, j)) > kPivotEps) {
        t.Pivot(i, j);
        break;
      }
    }
  }

  // Phase 2.
  for (int j = 0; j < t.cols(); ++j) {
    t.d(j) = j < n ? program.objective[j] : 0.0;
  }
  t.z() = 0.0;
  for (int i = 0; i < m; ++i) {
    const int bv = t.basis(i);
    const double cb = bv < n ? program.objective[bv] : 0.0;
    if (cb == 0.0) continue;
    for (int j = 0; j < t.cols(); ++j) t.d(j) -= cb * t.a(i, j);
    t.z() += cb * t.b(i);
  }
  for (int i = 0; i < m; ++i) t.d(t.basis(i)) = 0.0;
  const bool bounded = t.Optimize(art_begin);
  solution.pivots = t.pivots();
  if (!bounded) {
    solution.status = Status::kUnbounded;
    return solution;
  }

  solution.status = Status::kOptimal;
  solution.x.assign(n, 0.0);
  for (int i = 0; i < m; ++i) {
    if (t.basis(i) < n) solution.x[t.basis(i)] = t.b(i);
  }
  double objective = 0.0;
  for (int j = 0; j < n; ++j) objective += program.objective[j] * solution.x[j];
  solution.objective = objective;
  return solution;
}

}  // namespace adslot::lp
