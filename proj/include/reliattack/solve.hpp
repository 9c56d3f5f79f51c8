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

#ifndef RELIATTACK_SOLVE_HPP
#define RELIATTACK_SOLVE_HPP

#include <string>

#include "reliattack/attacks.hpp"
#include "reliattack/oracle.hpp"

namespace reliattack {

struct SolveOptions {
  bool removal = false;
  bool large_d_cut = false;
  OracleConfig oracle;
  Limits limits;
};

/// Picks the exact solver that applies to the problem; falls back to the
/// oracle for fractional attacks on other topologies.
inline AttackPlan solve_attack(const AttackProblem& problem, const SolveOptions& opt = {}) {
  if (opt.removal) return removal_attack(problem, opt.limits);
  const GameSpec& spec = problem.spec;
  if (spec.is_credit()) {
    const CreditInstance& ci = *spec.credit();
    bool two_author = true;
    for (std::size_t k : ci.papers_of(problem.target))
      two_author = two_author && ci.papers()[k].authors.size() <= 2;
    if (two_author) return credit_knapsack_attack(problem);
  } else if (spec.is_centrality()) {
    const TopologyInfo topo = classify_topology(*spec.graph());
    const bool nc3 = spec.variant().index() == 2;
    if ((topo.kind == Topology::kComplete || topo.kind == Topology::kStar) &&
        (!nc3 || opt.large_d_cut)) {
      return greedy_fractional_attack(problem, {opt.large_d_cut});
    }
    if (topo.kind == Topology::kCycle && spec.variant().index() == 0 && spec.n() >= 5) {
      return cycle_fractional_attack(problem);
    }
  }
  AttackPlan plan = fractional_oracle(problem, opt.oracle, opt.limits).plan;
  plan.notes.push_back("no exact solver for this instance; result is the numerical oracle's");
  return plan;
}

}  // namespace reliattack

#endif  // RELIATTACK_SOLVE_HPP
