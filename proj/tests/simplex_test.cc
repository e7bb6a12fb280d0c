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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "adslot/random.h"

namespace adslot::lp {
namespace {

Row MakeRow(std::vector<double> coefs, Sense sense, double rhs) {
  Row row;
  for (size_t i = 0; i < coefs.size(); ++i) {
    if (coefs[i] != 0.0) row.terms.emplace_back(static_cast<int>(i), coefs[i]);
  }
  row.sense = sense;
  row.rhs = rhs;
  return row;
}

TEST(SimplexTest, TextbookMaximum) {
  // max 3x + 2y  s.t. x + y <= 4, x + 3y <= 6, x <= 3  ->  (3, 1), 11.
  LinearProgram lp{2,
                   {3, 2},
                   {MakeRow({1, 1}, Sense::kLessEqual, 4),
                    MakeRow({1, 3}, Sense::kLessEqual, 6),
                    MakeRow({1, 0}, Sense::kLessEqual, 3)}};
  const Solution s = Maximize(lp);
  ASSERT_EQ(s.status, Status::kOptimal);
  EXPECT_NEAR(s.objective, 11.0, 1e-9);
  EXPECT_NEAR(s.x[0], 3.0, 1e-9);
  EXPECT_NEAR(s.x[1], 1.0, 1e-9);
}

TEST(SimplexTest, EqualityAndGreaterEqual) {
  // max x + 2y  s.t. x + y = 2, x >= 0.5  ->  (0.5, 1.5), 3.5.
  LinearProgram lp{2,
                   {1, 2},
                   {MakeRow({1, 1}, Sense::kEqual, 2),
                    MakeRow({1, 0}, Sense::kGreaterEqual, 0.5)}};
  const Solution s = Maximize(lp);
  ASSERT_EQ(s.status, Status::kOptimal);
  EXPECT_NEAR(s.objective, 3.5, 1e-9);
}

TEST(SimplexTest, NegativeRightHandSide) {
  // max x  s.t. y <= 3, x - y <= -1  ->  x = 2.
  LinearProgram lp{2,
                   {1, 0},
                   {MakeRow({0, 1}, Sense::kLessEqual, 3),
                    MakeRow({1, -1}, Sense::kLessEqual, -1)}};
  const Solution s = Maximize(lp);
  ASSERT_EQ(s.status, Status::kOptimal);
  EXPECT_NEAR(s.objective, 2.0, 1e-9);
}

TEST(SimplexTest, Infeasible) {
  LinearProgram lp{2,
                   {1, 1},
                   {MakeRow({1, 1}, Sense::kLessEqual, 1),
                    MakeRow({1, 1}, Sense::kGreaterEqual, 2)}};
  EXPECT_EQ(Maximize(lp).status, Status::kInfeasible);
}

TEST(SimplexTest, Unbounded) {
  LinearProgram lp{2, {1, 0}, {MakeRow({1, -1}, Sense::kLessEqual, 1)}};
  EXPECT_EQ(Maximize(lp).status, Status::kUnbounded);
}

TEST(SimplexTest, RedundantEqualities) {
  // The third row is the sum of the first two.
  LinearProgram lp{3,
                   {1, 2, 3},
                   {MakeRow({1, 1, 0}, Sense::kEqual, 1),
                    MakeRow({0, 0, 1}, Sense::kEqual, 1),
                    MakeRow({1, 1, 1}, Sense::kEqual, 2)}};
  const Solution s = Maximize(lp);
  ASSERT_EQ(s.status, Status::kOptimal);
  EXPECT_NEAR(s.objective, 5.0, 1e-9);
}

// Assignment polytopes have integral vertices, so the LP optimum equals the
// best permutation found by enumeration.
TEST(SimplexTest, AssignmentMatchesPermutationEnumeration) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 4;
    std::vector<double> cost(n * n);
    for (double& c : cost) c = UniformRange(rng, -1.0, 3.0);
    LinearProgram lp;
    lp.num_vars = n * n;
    lp.objective = cost;
    for (int i = 0; i < n; ++i) {
      Row r;
      Row c;
      r.sense = c.sense = Sense::kEqual;
      r.rhs = c.rhs = 1.0;
      for (int j = 0; j < n; ++j) {
        r.terms.emplace_back(i * n + j, 1.0);
        c.terms.emplace_back(j * n + i, 1.0);
      }
      lp.rows.push_back(r);
      lp.rows.push_back(c);
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double best = -1e300;
    do {
      double v = 0.0;
      for (int i = 0; i < n; ++i) v += cost[i * n + perm[i]];
      best = std::max(best, v);
    } while (std::next_permutation(perm.begin(), perm.end()));

    const Solution s = Maximize(lp);
    ASSERT_EQ(s.status, Status::kOptimal);
    EXPECT_NEAR(s.objective, best, 1e-9) << trial;
    for (double x : s.x) EXPECT_GE(x, -kFeasibilityTolerance);
  }
}

}  // namespace
}  // namespace adslot::lp
