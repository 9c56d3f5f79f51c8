// Copyright 2026 The reliattack Authors.
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

// Scores a five-node ring, attacks player 1 with a small budget, and audits
// the plan against the brute-force oracle.

#include <cstdio>

#include "reliattack/reliattack.hpp"

namespace ra = reliattack;

int main() {
  const ra::GameSpec game = ra::GameSpec::nc1(ra::Graph::cycle(5));
  const ra::ReliabilityProfile baseline({1.0, 0.9, 0.6, 0.7, 0.8});

  for (ra::Player j = 1; j <= 5; ++j)
    std::printf("Sh(%d) = %.6f\n", j, ra::shapley_closed(game, baseline, j));

  const ra::AttackProblem problem(game, 1, 0.5, ra::CostModel::uniform({1.0, 0.9, 0.6, 0.7, 0.8}, 1.0, 1.0));
  const ra::AttackPlan plan = ra::cycle_fractional_attack(problem);
  std::printf("\n%s: %.6f -> %.6f, unspent %.6f\n", plan.solver.c_str(), plan.shapley_before,
              plan.achieved, plan.unspent);
  for (ra::Player j = 2; j <= 5; ++j) std::printf("  p_%d = %.6f\n", j, plan.profile[j]);

  const ra::OracleResult audit = ra::fractional_oracle(problem);
  std::printf("oracle: %.6f (%ld grid points, stationary %s)\n", audit.plan.achieved,
              audit.grid_points, audit.stationary ? "yes" : "no");
  return 0;
}
