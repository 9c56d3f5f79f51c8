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

// Acceptance runner: one PASS/FAIL line per criterion. Exits nonzero if
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "support/cli_cases.hpp"
#include "support/instances.hpp"

namespace ra = reliattack;
using ra::AttackProblem;
using ra::CostModel;
using ra::GameSpec;
using ra::Graph;
using ra::PlayerSet;
using ra::ReliabilityProfile;
using ra::testing::Rng;
using ra::testing::uniform;
using ra::testing::uniform_int;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

// 1. Closed forms against permutation enumeration.
Verdict closed_forms() {
  Verdict v;
  Rng rng(101);
  struct Family {
    const char* variant;
    int k;
  };
  const Family families[] = {{"nc1", 1}, {"nc2", 1}, {"nc2", 2}, {"nc2", 3},
                             {"nc3", 1}, {"fc", 1},  {"fo", 1}};
  double worst = 0.0;
  int instances = 0;
  for (const Family& f : families) {
    for (int rep = 0; rep < 100; ++rep) {
      const int n = uniform_int(rng, 2, 8);
      const auto spec = ra::testing::random_game(rng, f.variant, n, f.k);
      const auto p = ra::testing::random_profile(rng, n);
      const auto def = ra::shapley_definitional(spec, p);
      for (ra::Player x = 1; x <= n; ++x) {
        const double err = std::abs(ra::shapley_closed(spec, p, x) - def[x]);
        worst = std::max(worst, err);
        if (err > 1e-9)
          v.fail(std::string(f.variant) + " k=" + std::to_string(f.k) + fmt(" error %.3g", err));
      }
      ++instances;
    }
  }
  if (v.pass) v.detail = std::to_string(instances) + " instances, max error " + fmt("%.2e", worst);
  return v;
}

// 2. Cycle quartic.
Verdict cycle_formula() {
  Verdict v;
  Rng rng(102);
  double worst = 0.0;
  for (int n : {5, 6}) {
    const auto spec = GameSpec::nc1(Graph::cycle(n));
    for (int rep = 0; rep < 50; ++rep) {
      const auto p = ra::testing::random_profile(rng, n);
      const double err = std::abs(ra::shapley_cycle_closed(p) - ra::shapley_definitional(spec, p)[1]);
      worst = std::max(worst, err);
      if (err > 1e-9) v.fail("C_" + std::to_string(n) + fmt(" error %.3g", err));
    }
  }
  const ReliabilityProfile point({1, 0.5, 0.5, 0.5, 0.5});
  const double closed = ra::shapley_cycle_closed(point);
  const double brute = ra::shapley_definitional(GameSpec::nc1(Graph::cycle(5)), point)[1];
  if (std::abs(closed - 1.75) > 1e-12 || std::abs(brute - 1.75) > 1e-9)
    v.fail(fmt("C_5 point gives %.12g (brute force %.12g), expected 1.75", closed, brute));
  if (v.pass) v.detail = "100 profiles, max error " + fmt("%.2e", worst) + ", C_5 point = 1.75";
  return v;
}

CostModel common_slope_costs(Rng& rng, int n, ra::Player target) {
  const double r = uniform(rng, 0.5, 2.0);
  const double l = uniform(rng, 0.5, 2.0);
  return CostModel::uniform(ra::testing::random_baseline(rng, n, target), l, r);
}

double saturation_budget(const CostModel& c, PlayerSet players) {
  double total = 0.0;
  for (ra::Player j : players) total += c.increase_slope(j) * (1.0 - c.p_star(j));
  return total;
}

// 3. Greedy against the oracle on complete graphs and stars.
Verdict greedy_optimality() {
  Verdict v;
  Rng rng(103);
  struct Setup {
    std::string name;
    Graph graph;
    ra::Player target;
  };
  std::vector<Setup> setups;
  for (int n = 4; n <= 6; ++n) {
    setups.push_back({"K_" + std::to_string(n), Graph::complete(n), 1});
    setups.push_back({"S_" + std::to_string(n) + " centre", Graph::star(n, 1), 1});
    setups.push_back({"S_" + std::to_string(n) + " leaf", Graph::star(n, 1), 2});
  }
  double worst = 0.0;
  int runs = 0;
  for (const Setup& s : setups) {
    for (int rep = 0; rep < 50; ++rep) {
      const CostModel costs = common_slope_costs(rng, s.graph.n(), s.target);
      const PlayerSet others = s.graph.players().without(s.target);
      const double budget = uniform(rng, 0.0, 1.1 * saturation_budget(costs, others));
      AttackProblem pr(GameSpec::nc1(s.graph), s.target, budget, costs);
      const double greedy = ra::greedy_fractional_attack(pr).achieved;
      const double oracle = ra::fractional_oracle(pr).plan.achieved;
      const double gap = std::abs(greedy - oracle);
      worst = std::max(worst, gap);
      if (gap > 1e-6) v.fail(s.name + fmt(" greedy %.9g oracle %.9g", greedy, oracle));
      ++runs;
    }
  }
  if (v.pass) v.detail = std::to_string(runs) + " draws, max gap " + fmt("%.2e", worst);
  return v;
}

// 4. Cycle best-of-four against the oracle, plus the crossover identity.
Verdict cycle_attack() {
  Verdict v;
  Rng rng(104);
  double worst = 0.0;
  int qr_wins = 0;
  auto check = [&](int n, const CostModel& costs, double budget, bool crossover) {
    AttackProblem pr(GameSpec::nc1(Graph::cycle(n)), 1, budget, costs);
    const auto best = ra::cycle_fractional_attack(pr);
    const double oracle = ra::fractional_oracle(pr).plan.achieved;
    const double gap = std::abs(best.achieved - oracle);
    worst = std::max(worst, gap);
    if (gap > 1e-6)
      v.fail("C_" + std::to_string(n) + fmt(" best-of-four %.9g oracle %.9g", best.achieved, oracle));
    const char winner = best.solver.back();
    if (winner == 'Q' || winner == 'R') {
      ++qr_wins;
      // Q and R reach a distance-two node before the second neighbour.
      const ra::Player second = best.targeting_order.size() > 1 ? best.targeting_order[1] : 0;
      const bool far = second == 3 || second == n - 1;
      if (second != 0 && !far) v.fail("Q/R winner targets a neighbour second");
    }
    if (crossover) {
      const ReliabilityProfile base = costs.baseline();
      const double lambda = ra::crossover_lambda_pq(base);
      const double p2 = base[2], p3 = base[3], pn1 = base[n - 1], pn = base[n];
      const double dp = ra::cumulative_decrease(ra::decrease_segments(ra::CycleOrder::kP, p2, p3, pn1, pn), lambda);
      const double dq = ra::cumulative_decrease(ra::decrease_segments(ra::CycleOrder::kQ, p2, p3, pn1, pn), lambda);
      if (std::abs(dp - dq) > 1e-9) v.fail(fmt("crossover mismatch %.3g vs %.3g", dp, dq));
    }
  };
  for (int n : {5, 6}) {
    for (int rep = 0; rep < 50; ++rep) {
      const double r = uniform(rng, 0.5, 2.0);
      std::vector<double> base = ra::testing::random_baseline(rng, n, 1);
      const bool region = rep % 5 == 0;
      if (region) {
        // p*_{n-1} - p*_n > 1/2 and p*_3 - p*_2 > 1/2.
        base[n - 1] = uniform(rng, 0.02, 0.3);
        base[n - 2] = uniform(rng, base[n - 1] + 0.55, 1.0);
        base[1] = uniform(rng, 0.02, 0.3);
        base[2] = uniform(rng, base[1] + 0.55, 1.0);
      }
      const CostModel costs = CostModel::uniform(base, 1.0, r);
      const double lambda = 1.5 - base[1] - base[n - 1];
      const double budget = region ? r * uniform(rng, std::max(0.0, lambda - 0.5), lambda + 0.3)
                                   : uniform(rng, 0.0, 1.1 * r * 4.0);
      check(n, costs, budget, region);
    }
  }
  // Worked instance inside I_{P,Q} and I_{S,R}.
  const auto before = qr_wins;
  check(5, CostModel::uniform({1, 0.1, 0.7, 0.8, 0.1}, 1, 1), 1.1, true);
  if (qr_wins == before) v.fail("worked instance is not won by Q or R");
  if (qr_wins == 0) v.fail("no Q or R winner among the generated instances");
  if (v.pass)
    v.detail = "101 draws, max gap " + fmt("%.2e", worst) + ", Q/R winners: " + std::to_string(qr_wins);
  return v;
}

// 5. Removal never lowers the target's value.
Verdict no_benefit() {
  Verdict v;
  Rng rng(105);
  std::string failures;
  for (const char* variant : {"nc1", "nc2", "nc3", "fc"}) {
    int failed = 0;
    std::string first;
    for (int rep = 0; rep < 20; ++rep) {
      const int n = uniform_int(rng, 3, 7);
      const int k = uniform_int(rng, 1, 3);
      const auto spec = ra::testing::random_game(rng, variant, n, k);
      const auto p = ra::testing::random_profile(rng, n, 0.05, 1.0);
      const ra::Player x = uniform_int(rng, 1, n);
      const auto verdict = ra::removal_no_benefit_exhaustive(spec, p, x);
      if (!verdict.passed) {
        ++failed;
        if (first.empty()) {
          const auto& c = *verdict.counterexample;
          first = " (n=" + std::to_string(n) + (std::string(variant) == "nc2" ? " k=" + std::to_string(k) : "") +
                  " x=" + std::to_string(x) + " remove " + c.removed.to_string() +
                  fmt(": %.6g -> %.6g)", c.before, c.after);
        }
      }
    }
    if (failed > 0) {
      v.pass = false;
      failures += std::string(failures.empty() ? "" : "; ") + variant + " " + std::to_string(failed) +
                  "/20 instances decrease" + first;
    }
  }
  v.detail = v.pass ? "80 instances, every removal subset checked" : failures;
  return v;
}

// 6. Knapsack attacks against the oracle; pairwise runs leave Sh(y) fixed.
Verdict knapsack() {
  Verdict v;
  Rng rng(106);
  double worst = 0.0, worst_pair = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const int n = uniform_int(rng, 3, 7);
    const auto ci = ra::testing::random_two_author_credit(rng, n, 1, uniform_int(rng, 1, 6));
    const auto spec = rep % 2 == 0 ? GameSpec::fc(ci) : GameSpec::fo(ci);
    const CostModel costs(ra::testing::random_baseline(rng, n, 1), ra::testing::random_slopes(rng, n, 0.3, 3.0),
                          ra::testing::random_slopes(rng, n, 0.3, 3.0), std::vector<double>(n, 0.0));
    const double budget = uniform(rng, 0.0, 3.0);
    AttackProblem pr(spec, 1, budget, costs);
    const double greedy = ra::credit_knapsack_attack(pr).achieved;
    const double oracle = ra::fractional_oracle(pr).plan.achieved;
    worst = std::max(worst, std::abs(greedy - oracle));
    if (std::abs(greedy - oracle) > 1e-9)
      v.fail(std::string(spec.name()) + fmt(" knapsack %.12g oracle %.12g", greedy, oracle));

    const ra::Player y = uniform_int(rng, 2, n);
    AttackProblem pair(spec, 1, budget, costs, ra::pairwise_exempt_set(spec, y));
    const auto plan = ra::credit_knapsack_attack(pair);
    const double drift = std::abs(ra::shapley_closed(spec, plan.profile, y) -
                                  ra::shapley_closed(spec, costs.baseline(), y));
    worst_pair = std::max(worst_pair, drift);
    if (drift > 1e-12) v.fail(fmt("pairwise drift %.3g", drift));
  }
  if (v.pass)
    v.detail = "50 instances, max gap " + fmt("%.2e", worst) + ", max pairwise drift " + fmt("%.2e", worst_pair);
  return v;
}

// 7. Max-coverage reduction.
Verdict reduction() {
  Verdict v;
  Rng rng(107);
  std::vector<ra::BmcInstance> instances;
  instances.push_back({{2, 1}, {{{1}, 1}, {{1, 2}, 2}}, 2, 3});
  for (int rep = 0; rep < 30; ++rep) {
    ra::BmcInstance bmc;
    const int elements = uniform_int(rng, 1, 10);
    for (int i = 0; i < elements; ++i) bmc.weights.push_back(uniform_int(rng, 1, 10));
    const int sets = uniform_int(rng, 1, 10);
    for (int j = 0; j < sets; ++j) {
      ra::BmcSet s;
      for (int e = 1; e <= elements; ++e)
        if (uniform(rng, 0, 1) < 0.35) s.members.push_back(e);
      s.cost = uniform_int(rng, 1, 6);
      bmc.sets.push_back(s);
    }
    bmc.budget = uniform_int(rng, 1, 12);
    bmc.threshold = uniform_int(rng, 1, 30);
    instances.push_back(bmc);
  }
  int yes = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto exact = ra::bmc_solve_exact(instances[i]);
    const auto removal = ra::bmc_decide_by_removal(ra::bmc_reduce(instances[i]));
    if (std::abs(removal.decrease - static_cast<double>(exact.coverage)) > 1e-9)
      v.fail("instance " + std::to_string(i) + fmt(": decrease %.12g coverage %.12g", removal.decrease,
                                                   static_cast<double>(exact.coverage)));
    if (removal.yes != exact.yes) v.fail("instance " + std::to_string(i) + ": answers differ");
    yes += exact.yes ? 1 : 0;
    if (i == 0 && !(exact.yes && std::abs(removal.decrease - 3.0) < 1e-9))
      v.fail("worked instance: expected YES with decrease 3");
  }
  if (v.pass)
    v.detail = std::to_string(instances.size()) + " instances (" + std::to_string(yes) +
               " YES), decrease = coverage on all; worked instance YES with decrease 3";
  return v;
}

// 8. Gradient against finite differences and sign constraints.
Verdict gradients() {
  Verdict v;
  Rng rng(108);
  double worst = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const int n = uniform_int(rng, 2, 7);
    const Graph g = ra::testing::random_graph(rng, n, 0.45);
    const auto spec = GameSpec::nc1(g);
    const auto p = ra::testing::random_profile(rng, n, 0.01, 0.99);
    const ra::Player x = uniform_int(rng, 1, n);
    const auto grad = ra::shapley_gradient_nc1(g, p, x);
    for (ra::Player j = 1; j <= n; ++j) {
      const double fd = ra::finite_difference(
          [&](const ReliabilityProfile& q) { return ra::shapley_closed(spec, q, x); }, p, j, 1e-6);
      worst = std::max(worst, std::abs(fd - grad[j]));
    }
  }
  if (worst > 1e-5) v.fail(fmt("finite-difference error %.3g", worst));
  for (int rep = 0; rep < 50; ++rep) {
    const int n = uniform_int(rng, 3, 8);
    const Graph g = ra::testing::random_graph(rng, n, 0.3);
    const auto p = ra::testing::random_profile(rng, n);
    const ra::Player x = uniform_int(rng, 1, n);
    const auto grad = ra::shapley_gradient_nc1(g, p, x);
    PlayerSet near;
    for (ra::Player z : g.closed_neighborhood(x)) near = near | g.closed_neighborhood(z);
    for (ra::Player j = 1; j <= n; ++j) {
      if (j == x) continue;
      if (near.contains(j) && grad[j] > 1e-15) v.fail(fmt("positive partial %.3g within distance 2", grad[j]));
      if (!near.contains(j) && grad[j] != 0.0) v.fail(fmt("nonzero partial %.3g beyond distance 2", grad[j]));
    }
  }
  for (int rep = 0; rep < 50; ++rep) {
    const int n = uniform_int(rng, 3, 7);
    const auto ci = ra::testing::random_credit(rng, n, uniform_int(rng, 1, 6), 4);
    const auto p = ra::testing::random_profile(rng, n, 0.01, 0.99);
    const ra::Player x = uniform_int(rng, 1, n);
    for (ra::Player l : ci.coauthors(x)) {
      auto slope = [&](const GameSpec& spec) {
        return ra::finite_difference(
            [&](const ReliabilityProfile& q) { return ra::shapley_closed(spec, q, x); }, p, l, 1e-6);
      };
      if (slope(GameSpec::fc(ci)) > 1e-9) v.fail("full-credit partial is positive");
      if (slope(GameSpec::fo(ci)) < -1e-9) v.fail("full-obligation partial is negative");
    }
  }
  if (v.pass) v.detail = "max finite-difference error " + fmt("%.2e", worst) + ", signs hold at 100 points";
  return v;
}

// 9. CLI determinism.
Verdict determinism() {
  Verdict v;
  int checked = 0;
  for (const auto& c : ra::testing::cli_cases()) {
    const auto a = ra::testing::run_cli(RELIATTACK_CLI, RELIATTACK_FIXTURES, c.args);
    const auto b = ra::testing::run_cli(RELIATTACK_CLI, RELIATTACK_FIXTURES, c.args);
    std::ifstream in(std::string(RELIATTACK_GOLDEN) + "/" + c.name + ".out", std::ios::binary);
    std::stringstream golden;
    golden << in.rdbuf();
    if (a.out != b.out) v.fail(c.name + ": output differs between runs");
    if (a.exit_code != c.exit_code) v.fail(c.name + ": unexpected exit code " + std::to_string(a.exit_code));
    if (a.out != golden.str()) v.fail(c.name + ": output differs from the golden file");
    ++checked;
  }
  if (v.pass) v.detail = std::to_string(checked) + " fixtures byte-identical across two runs and to golden files";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "closed-form correctness", closed_forms},
      {2, "cycle formula", cycle_formula},
      {3, "greedy optimality on complete graphs and stars", greedy_optimality},
      {4, "cycle best-of-four", cycle_attack},
      {5, "removal never helps", no_benefit},
      {6, "knapsack attacks", knapsack},
      {7, "max-coverage reduction", reduction},
      {8, "gradient checks", gradients},
      {9, "CLI determinism", determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict verdict;
    try {
      verdict = c.run();
    } catch (const std::exception& e) {
      verdict.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %d %s: %s (%.1fs)\n", verdict.pass ? "PASS" : "FAIL", c.id, c.name, verdict.detail.c_str(),
                secs);
    std::fflush(stdout);
    failed += verdict.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
