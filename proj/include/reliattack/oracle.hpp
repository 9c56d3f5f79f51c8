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

#ifndef RELIATTACK_ORACLE_HPP
#define RELIATTACK_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "reliattack/attacks.hpp"
#include "reliattack/error.hpp"
#include "reliattack/reliability.hpp"
#include "reliattack/shapley.hpp"

namespace reliattack {

enum class OracleObjective { kClosedForm, kDefinitional };

struct OracleConfig {
  double grid_resolution = 1.0 / 64.0;
  /// Smallest probability move tried by refinement and by the final
  /// stationarity check.
  double swap_step = 1e-3;
  long max_refinements = 10000;
  double tolerance = 1e-6;
  /// The grid is coarsened (resolution doubled, up to 1/4) until it has at
  /// most this many feasible points.
  long max_grid_points = 60000;
  int max_attackable = 6;
  /// Number of best grid points refined; the best refined one wins.
  int refine_starts = 12;
  OracleObjective objective = OracleObjective::kClosedForm;

  void validate() const {
    if (!(grid_resolution > 0.0 && grid_resolution <= 0.25))
      throw DomainError("grid_resolution must lie in (0, 1/4]");
    if (!(swap_step > 0.0)) throw DomainError("swap_step must be positive");
    if (max_refinements < 0) throw DomainError("max_refinements must be nonnegative");
    if (!(tolerance > 0.0)) throw DomainError("tolerance must be positive");
    if (max_grid_points < 1) throw DomainError("max_grid_points must be positive");
    if (max_attackable < 0) throw DomainError("max_attackable must be nonnegative");
    if (refine_starts < 1) throw DomainError("refine_starts must be at least 1");
  }
};

struct OracleResult {
  AttackPlan plan;
  double grid_resolution = 0.0;
  long grid_points = 0;
  double best_grid_value = 0.0;
  long refinements = 0;
  bool stationary = false;
  /// Largest decrease found by the final swap check (0 when stationary).
  double worst_swap_gain = 0.0;
};

/// Numeric partial derivative of f in coordinate j: central difference,
/// one-sided where p_j +- h leaves [0,1].
inline double finite_difference(const std::function<double(const ReliabilityProfile&)>& f,
                                const ReliabilityProfile& p, Player j, double h) {
  if (!(h > 0.0)) throw DomainError("finite difference step must be positive");
  const double lo = std::max(0.0, p[j] - h);
  const double hi = std::min(1.0, p[j] + h);
  if (!(hi > lo)) throw DomainError("finite difference step leaves no room in [0,1]");
  return (f(p.with(j, hi)) - f(p.with(j, lo))) / (hi - lo);
}

namespace detail {

/// Search state in signed-spend coordinates: e_j > 0 buys an increase of
/// e_j / R_j, e_j < 0 a decrease of |e_j| / L_j.
class SpendSpace {
 public:
  SpendSpace(const AttackProblem& problem, std::vector<Player> vars)
      : problem_(problem), vars_(std::move(vars)) {
    for (Player j : vars_) {
      const CostModel& c = problem.costs;
      lower_.push_back(-c.decrease_slope(j) * c.p_star(j));
      upper_.push_back(c.increase_slope(j) * (1.0 - c.p_star(j)));
    }
  }

  std::size_t size() const { return vars_.size(); }
  double budget() const { return problem_.budget; }

  double probability(std::size_t i, double e) const {
    const CostModel& c = problem_.costs;
    const Player j = vars_[i];
    const double p = e >= 0.0 ? c.p_star(j) + e / c.increase_slope(j)
                              : c.p_star(j) + e / c.decrease_slope(j);
    return std::clamp(p, 0.0, 1.0);
  }

  double spend_of(std::size_t i, double p) const {
    const CostModel& c = problem_.costs;
    const Player j = vars_[i];
    return p >= c.p_star(j) ? c.increase_slope(j) * (p - c.p_star(j))
                            : -c.decrease_slope(j) * (c.p_star(j) - p);
  }

  ReliabilityProfile profile(const std::vector<double>& e) const {
    ReliabilityProfile p = problem_.costs.baseline();
    for (std::size_t i = 0; i < size(); ++i) p.set(vars_[i], probability(i, e[i]));
    return p;
  }

  static double used(const std::vector<double>& e) {
    double total = 0.0;
    for (double v : e) total += std::abs(v);
    return total;
  }

  /// Largest a >= 0 keeping e + a*d inside the box and total spend within cap.
  double max_step(const std::vector<double>& e, const std::vector<int>& d, double cap) const {
    double a = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < size(); ++i) {
      if (d[i] > 0) a = std::min(a, upper_[i] - e[i]);
      if (d[i] < 0) a = std::min(a, e[i] - lower_[i]);
    }
    a = std::max(a, 0.0);
    // Spend is convex piecewise linear along the ray; walk its breakpoints.
    std::vector<double> breaks{0.0};
    for (std::size_t i = 0; i < size(); ++i) {
      if (d[i] != 0) {
        const double t = -e[i] / d[i];
        if (t > 0.0 && t < a) breaks.push_back(t);
      }
    }
    if (std::isfinite(a)) breaks.push_back(a);
    std::sort(breaks.begin(), breaks.end());
    auto spend_at = [&](double t) {
      double total = 0.0;
      for (std::size_t i = 0; i < size(); ++i) total += std::abs(e[i] + t * d[i]);
      return total;
    };
    for (std::size_t b = 1; b < breaks.size(); ++b) {
      const double t0 = breaks[b - 1], t1 = breaks[b];
      const double s0 = spend_at(t0), s1 = spend_at(t1);
      if (s1 <= cap) continue;
      if (s1 <= s0 + 1e-15 * s0) continue;  // spend-neutral up to rounding
      return std::max(t0, t0 + (cap - s0) * (t1 - t0) / (s1 - s0));
    }
    return std::isfinite(a) ? a : 0.0;
  }

  std::vector<Player> vars() const { return vars_; }

 private:
  const AttackProblem& problem_;
  std::vector<Player> vars_;
  std::vector<double> lower_, upper_;
};

/// Direction set: every single coordinate move and every pairwise swap.
inline std::vector<std::vector<int>> swap_directions(std::size_t m) {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < m; ++i) {
    for (int si : {1, -1}) {
      std::vector<int> d(m, 0);
      d[i] = si;
      out.push_back(d);
      for (std::size_t k = 0; k < m; ++k) {
        if (k == i) continue;
        for (int sk : {1, -1}) {
          std::vector<int> dd = d;
          dd[k] = sk;
          out.push_back(std::move(dd));
        }
      }
    }
  }
  return out;
}

}  // namespace detail

/// Budget-feasible grid search followed by improving-swap refinement. Used
/// to audit the attack solvers; shares none of their ordering logic.
inline OracleResult fractional_oracle(const AttackProblem& problem, const OracleConfig& cfg = {},
                                      const Limits& limits = {}) {
  cfg.validate();
  const std::vector<Player> vars = problem.attackable().to_vector();
  if (static_cast<int>(vars.size()) > cfg.max_attackable) {
    throw ResourceError("oracle over " + std::to_string(vars.size()) + " attackable players",
                        "max_attackable", cfg.max_attackable);
  }
  const CostModel& costs = problem.costs;
  const Player x = problem.target;
  auto objective = [&](const ReliabilityProfile& p) {
    if (cfg.objective == OracleObjective::kDefinitional)
      return shapley_definitional(problem.spec, p, limits)[x];
    return shapley_closed(problem.spec, p, x, limits);
  };

  detail::SpendSpace space(problem, vars);
  const std::size_t m = vars.size();
  // Relative slack only: a zero budget must admit no movement at all.
  const double budget_slack = problem.budget * (1.0 + 1e-12);

  // Grid over {i*r} and the baseline of each variable, pruned by budget.
  double r = cfg.grid_resolution;
  std::vector<std::vector<double>> levels;
  auto build_levels = [&](double step) {
    levels.assign(m, {});
    for (std::size_t i = 0; i < m; ++i) {
      const double base = costs.p_star(vars[i]);
      std::vector<double>& lv = levels[i];
      lv.push_back(base);
      const long count = std::lround(1.0 / step);
      for (long t = 0; t <= count; ++t) {
        const double v = std::min(1.0, t * step);
        if (std::abs(v - base) > 1e-15) lv.push_back(v);
      }
      // Cheapest values first so pruning cuts early.
      std::stable_sort(lv.begin(), lv.end(), [&](double a, double b) {
        return costs.cost(vars[i], a) < costs.cost(vars[i], b);
      });
    }
  };
  auto count_points = [&](long cap) {
    long count = 0;
    std::function<void(std::size_t, double)> dfs = [&](std::size_t i, double spent) {
      if (count > cap) return;
      if (i == m) {
        ++count;
        return;
      }
      for (double v : levels[i]) {
        const double c = spent + costs.cost(vars[i], v);
        if (c > budget_slack) break;
        dfs(i + 1, c);
      }
    };
    dfs(0, 0.0);
    return count;
  };
  build_levels(r);
  while (r < 0.25 && count_points(cfg.max_grid_points) > cfg.max_grid_points) {
    r = std::min(0.25, 2.0 * r);
    build_levels(r);
  }

  struct Start {
    double value;
    std::vector<double> e;
  };
  std::vector<Start> starts;
  long grid_points = 0;
  {
    std::vector<double> current(m, 0.0);
    ReliabilityProfile p = costs.baseline();
    std::function<void(std::size_t, double)> dfs = [&](std::size_t i, double spent) {
      if (i == m) {
        ++grid_points;
        const double value = objective(p);
        Start s{value, current};
        auto pos = std::upper_bound(starts.begin(), starts.end(), value,
                                    [](double v, const Start& st) { return v < st.value; });
        starts.insert(pos, std::move(s));
        if (static_cast<int>(starts.size()) > cfg.refine_starts) starts.pop_back();
        return;
      }
      for (double v : levels[i]) {
        const double c = spent + costs.cost(vars[i], v);
        if (c > budget_slack) break;
        p.set(vars[i], v);
        current[i] = space.spend_of(i, v);
        dfs(i + 1, c);
      }
      p.set(vars[i], costs.p_star(vars[i]));
      current[i] = 0.0;
    };
    dfs(0, 0.0);
  }

  // Grid starts may sit a rounding error above the slack; never let that
  // block a move, and never let the headroom grow during refinement.
  double cap = budget_slack;
  for (const Start& s : starts) cap = std::max(cap, detail::SpendSpace::used(s.e) * (1.0 + 1e-12));
  // Spend-neutral swaps at a saturated point round a few ulps either way.
  const double accept = cap * (1.0 + 1e-14);

  const auto directions = detail::swap_directions(m);
  double min_slope = std::numeric_limits<double>::infinity(), max_slope = 0.0;
  for (Player j : vars) {
    min_slope = std::min({min_slope, costs.decrease_slope(j), costs.increase_slope(j)});
    max_slope = std::max({max_slope, costs.decrease_slope(j), costs.increase_slope(j)});
  }

  long refinements = 0;
  auto refine = [&](std::vector<double> e, double f) {
    if (m == 0) return std::make_pair(e, f);
    const double delta_min = cfg.swap_step * min_slope;
    for (double delta = r * max_slope; delta >= delta_min * 0.999; delta *= 0.5) {
      while (refinements < cfg.max_refinements) {
        double best_f = f - 1e-14;
        std::vector<double> best_e;
        // Grid starts may carry rounding above the slack; never penalise a move for it.
        for (const auto& d : directions) {
          const double a_max = space.max_step(e, d, cap);
          if (a_max <= 0.0) continue;
          for (double a : {std::min(delta, a_max), a_max}) {
            std::vector<double> cand = e;
            for (std::size_t i = 0; i < m; ++i) cand[i] += a * d[i];
            if (detail::SpendSpace::used(cand) > accept) continue;
            const double fc = objective(space.profile(cand));
            if (fc < best_f) {
              best_f = fc;
              best_e = std::move(cand);
            }
          }
        }
        if (best_e.empty()) break;
        e = std::move(best_e);
        f = best_f;
        ++refinements;
      }
    }
    return std::make_pair(e, f);
  };

  std::vector<double> best_e(m, 0.0);
  double best_f = std::numeric_limits<double>::infinity();
  for (const Start& s : starts) {
    auto [e, f] = refine(s.e, s.value);
    if (f < best_f - 1e-15) {
      best_f = f;
      best_e = std::move(e);
    }
  }

  // Swap-stationarity certificate.
  double worst_gain = 0.0;
  for (const auto& d : directions) {
    const double a_max = space.max_step(best_e, d, cap);
    if (a_max <= 0.0) continue;
    for (double a : {std::min(cfg.swap_step * min_slope, a_max), a_max}) {
      std::vector<double> cand = best_e;
      for (std::size_t i = 0; i < m; ++i) cand[i] += a * d[i];
      if (detail::SpendSpace::used(cand) > accept) continue;
      worst_gain = std::max(worst_gain, best_f - objective(space.profile(cand)));
    }
  }

  OracleResult out;
  ReliabilityProfile profile = space.profile(best_e);
  out.plan.kind = PlanKind::kFractional;
  out.plan.shapley_before = objective(costs.baseline());
  out.plan.achieved = best_f;
  out.plan.total_cost = costs.cost(profile);
  out.plan.unspent = std::max(0.0, problem.budget - out.plan.total_cost);
  for (std::size_t i = 0; i < m; ++i)
    if (profile[vars[i]] != costs.p_star(vars[i])) out.plan.targeting_order.push_back(vars[i]);
  out.plan.profile = std::move(profile);
  out.plan.solver = "oracle";
  out.grid_resolution = r;
  out.grid_points = grid_points;
  out.best_grid_value = starts.empty() ? best_f : starts.front().value;
  out.refinements = refinements;
  out.worst_swap_gain = worst_gain;
  out.stationary = worst_gain <= cfg.tolerance;
  return out;
}

}  // namespace reliattack

#endif  // RELIATTACK_ORACLE_HPP
