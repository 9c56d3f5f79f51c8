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

#ifndef RELIATTACK_ATTACKS_HPP
#define RELIATTACK_ATTACKS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "reliattack/error.hpp"
#include "reliattack/games.hpp"
#include "reliattack/limits.hpp"
#include "reliattack/player_set.hpp"
#include "reliattack/reliability.hpp"
#include "reliattack/shapley.hpp"

namespace reliattack {

inline constexpr double kBudgetSlack = 1e-9;

/// Per-player manipulation costs. Moving p_j below its baseline costs
/// L_j per unit, above it R_j per unit; removing j costs c_j.
class CostModel {
 public:
  CostModel() = default;

  CostModel(std::vector<double> p_star, std::vector<double> decrease_slope,
            std::vector<double> increase_slope, std::vector<double> removal_cost)
      : p_star_(std::move(p_star)),
        l_(std::move(decrease_slope)),
        r_(std::move(increase_slope)),
        c_(std::move(removal_cost)) {
    const std::size_t n = p_star_.size();
    check_player_count(static_cast<int>(n));
    if (l_.size() != n || r_.size() != n || c_.size() != n) {
      throw DomainError("cost model vectors must all have length " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      const std::string who = "player " + std::to_string(i + 1);
      if (!(p_star_[i] > 0.0 && p_star_[i] <= 1.0))
        throw DomainError(who + ": baseline reliability must lie in (0,1]");
      if (!(l_[i] > 0.0) || !std::isfinite(l_[i]))
        throw DomainError(who + ": decrease slope L must be positive");
      if (!(r_[i] > 0.0) || !std::isfinite(r_[i]))
        throw DomainError(who + ": increase slope R must be positive");
      if (!(c_[i] >= 0.0) || !std::isfinite(c_[i]))
        throw DomainError(who + ": removal cost must be nonnegative");
    }
  }

  /// Common slopes for everyone; removal costs default to zero.
  static CostModel uniform(std::vector<double> p_star, double decrease_slope,
                           double increase_slope, std::vector<double> removal_cost = {}) {
    const std::size_t n = p_star.size();
    if (removal_cost.empty()) removal_cost.assign(n, 0.0);
    return CostModel(std::move(p_star), std::vector<double>(n, decrease_slope),
                     std::vector<double>(n, increase_slope), std::move(removal_cost));
  }

  int n() const { return static_cast<int>(p_star_.size()); }
  double p_star(Player j) const { return p_star_.at(index(j)); }
  double decrease_slope(Player j) const { return l_.at(index(j)); }
  double increase_slope(Player j) const { return r_.at(index(j)); }
  double removal_cost(Player j) const { return c_.at(index(j)); }

  ReliabilityProfile baseline() const { return ReliabilityProfile(p_star_); }

  /// u_j(p): piecewise linear with its only zero at the baseline.
  double cost(Player j, double p) const {
    const double base = p_star(j);
    if (p < base) return decrease_slope(j) * (base - p);
    if (p > base) return increase_slope(j) * (p - base);
    return 0.0;
  }

  double cost(const ReliabilityProfile& p) const {
    double total = 0.0;
    for (Player j = 1; j <= n(); ++j) total += cost(j, p[j]);
    return total;
  }

  double removal_cost(PlayerSet removed) const {
    double total = 0.0;
    for (Player j : removed) total += removal_cost(j);
    return total;
  }

 private:
  std::size_t index(Player j) const {
    if (j < 1 || j > n()) throw DomainError("player " + std::to_string(j) + " outside cost model");
    return static_cast<std::size_t>(j - 1);
  }

  std::vector<double> p_star_, l_, r_, c_;
};

/// Minimise Sh(target) with at most `budget` spent on players outside
/// `exempt`. The target is always exempt.
struct AttackProblem {
  GameSpec spec;
  Player target;
  double budget;
  CostModel costs;
  PlayerSet exempt;

  AttackProblem(GameSpec spec_in, Player target_in, double budget_in, CostModel costs_in,
                PlayerSet exempt_in = {})
      : spec(std::move(spec_in)),
        target(target_in),
        budget(budget_in),
        costs(std::move(costs_in)),
        exempt(exempt_in) {
    spec.check_player(target);
    spec.check_players(exempt);
    if (!(budget >= 0.0) || !std::isfinite(budget))
      throw DomainError("budget must be a finite nonnegative number");
    if (costs.n() != spec.n()) {
      throw DomainError("cost model covers " + std::to_string(costs.n()) +
                        " players but the game has " + std::to_string(spec.n()));
    }
    exempt.insert(target);
  }

  PlayerSet attackable() const { return PlayerSet::range(spec.n()) - exempt; }
};

enum class PlanKind { kFractional, kRemoval };

struct AttackPlan {
  PlanKind kind = PlanKind::kFractional;
  /// Resulting reliabilities; for removal plans, removed players are at 0.
  ReliabilityProfile profile;
  PlayerSet removed;
  double total_cost = 0.0;
  double shapley_before = 0.0;
  double achieved = 0.0;
  double unspent = 0.0;
  std::vector<Player> targeting_order;
  std::string solver;
  std::vector<std::string> notes;
};

enum class Topology { kComplete, kStar, kCycle, kOther };

struct TopologyInfo {
  Topology kind = Topology::kOther;
  Player center = 0;  // star only
};

inline TopologyInfo classify_topology(const Graph& g) {
  const int n = g.n();
  const auto m = static_cast<long>(g.edges().size());
  if (m == static_cast<long>(n) * (n - 1) / 2) return {Topology::kComplete, 0};
  if (n >= 3 && m == n - 1) {
    for (Player v = 1; v <= n; ++v)
      if (g.neighbors(v).size() == n - 1) return {Topology::kStar, v};
  }
  if (n >= 3 && m == n) {
    bool all_two = true;
    for (Player v = 1; v <= n; ++v) all_two = all_two && g.neighbors(v).size() == 2;
    if (all_two) {
      PlayerSet seen{1}, frontier{1};
      while (!frontier.empty()) {
        PlayerSet next;
        for (Player v : frontier) next = next | g.neighbors(v);
        frontier = next - seen;
        seen = seen | next;
      }
      if (seen.size() == n) return {Topology::kCycle, 0};
    }
  }
  return {Topology::kOther, 0};
}

namespace detail {

inline void require_common_slopes(const CostModel& costs, PlayerSet players,
                                  bool check_decrease) {
  std::optional<Player> first;
  for (Player j : players) {
    if (!first) {
      first = j;
      continue;
    }
    auto differs = [](double a, double b) {
      return std::abs(a - b) > 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
    };
    if (differs(costs.increase_slope(j), costs.increase_slope(*first)) ||
        (check_decrease && differs(costs.decrease_slope(j), costs.decrease_slope(*first)))) {
      throw DomainError("players " + std::to_string(*first) + " and " + std::to_string(j) +
                        " have different cost slopes; this attack assumes identical slopes");
    }
  }
}

/// Moves players toward `goal` (1 or 0) in the given order, fully while the
/// budget allows and partially on the first one it does not. Returns the
/// unspent budget.
inline double spend_in_order(const std::vector<Player>& order, const CostModel& costs,
                             double goal, double budget, ReliabilityProfile& profile,
                             std::vector<Player>& targeted) {
  double remaining = budget;
  const double residue = 1e-12 * std::max(1.0, budget);  // rounding left after exact fills
  for (Player j : order) {
    if (remaining <= residue) break;
    const double base = costs.p_star(j);
    if (base == goal) continue;
    const bool up = goal > base;
    const double slope = up ? costs.increase_slope(j) : costs.decrease_slope(j);
    const double need = slope * std::abs(goal - base);
    targeted.push_back(j);
    if (need <= remaining) {
      profile.set(j, goal);
      remaining -= need;
    } else {
      const double moved = remaining / slope;
      profile.set(j, up ? std::min(1.0, base + moved) : std::max(0.0, base - moved));
      remaining = 0.0;
    }
  }
  return remaining <= residue ? 0.0 : remaining;
}

inline AttackPlan fractional_plan(const AttackProblem& problem, ReliabilityProfile profile,
                                  std::vector<Player> order, double unspent,
                                  std::string solver) {
  AttackPlan plan;
  plan.kind = PlanKind::kFractional;
  plan.shapley_before = shapley_closed(problem.spec, problem.costs.baseline(), problem.target);
  plan.achieved = shapley_closed(problem.spec, profile, problem.target);
  plan.total_cost = problem.costs.cost(profile);
  plan.profile = std::move(profile);
  plan.targeting_order = std::move(order);
  plan.unspent = unspent;
  plan.solver = std::move(solver);
  return plan;
}

/// Players sorted by descending baseline, ties by ascending index.
inline std::vector<Player> by_descending_baseline(PlayerSet players, const CostModel& costs) {
  std::vector<Player> order = players.to_vector();
  std::stable_sort(order.begin(), order.end(), [&](Player a, Player b) {
    return costs.p_star(a) > costs.p_star(b);
  });
  return order;
}

}  // namespace detail

struct GreedyOptions {
  /// Accept NC3 games, asserting d_cut is large enough for the ordering
  /// argument to apply.
  bool large_d_cut = false;
};

/// Greedy fractional attack on a complete graph or a star: raise the other
/// players to 1 by descending baseline; when the target is a star leaf the
/// centre goes first.
inline AttackPlan greedy_fractional_attack(const AttackProblem& problem,
                                           const GreedyOptions& options = {}) {
  const GameSpec& spec = problem.spec;
  const auto index = spec.variant().index();
  if (index == 2 && !options.large_d_cut) {
    throw DomainError("greedy attack on nc3 requires the large-d_cut flag");
  }
  if (!spec.is_centrality()) {
    throw DomainError("greedy attack needs a centrality game, got " + std::string(spec.name()));
  }
  const Graph& g = *spec.graph();
  const TopologyInfo topo = classify_topology(g);
  if (topo.kind != Topology::kComplete && topo.kind != Topology::kStar) {
    throw DomainError("greedy attack needs a complete graph or a star");
  }
  const PlayerSet attackable = problem.attackable();
  detail::require_common_slopes(problem.costs, attackable, true);

  std::vector<Player> order;
  if (topo.kind == Topology::kStar && topo.center != problem.target) {
    if (attackable.contains(topo.center)) order.push_back(topo.center);
    for (Player j : detail::by_descending_baseline(attackable.without(topo.center),
                                                   problem.costs))
      order.push_back(j);
  } else {
    order = detail::by_descending_baseline(attackable, problem.costs);
  }

  ReliabilityProfile profile = problem.costs.baseline();
  std::vector<Player> targeted;
  const double unspent =
      detail::spend_in_order(order, problem.costs, 1.0, problem.budget, profile, targeted);
  AttackPlan plan = detail::fractional_plan(problem, std::move(profile), std::move(targeted),
                                            unspent, "greedy-descending-baseline");
  if (index != 0) {
    plan.notes.push_back("ordering for " + std::string(spec.name()) +
                         " is not covered by the NC1 optimality argument; verify with the oracle");
  }
  return plan;
}

// ---------------------------------------------------------------------------
// Cycle attack

enum class CycleOrder { kP, kQ, kR, kS };

inline char cycle_order_label(CycleOrder o) {
  return "PQRS"[static_cast<int>(o)];
}

/// The target x on a cycle and the four nodes its value depends on.
/// On the standard labelling with x = 1: near_a = 2, far_a = 3,
/// far_b = n-1, near_b = n.
struct CycleRoles {
  Player target = 0;
  Player near_a = 0;
  Player far_a = 0;
  Player far_b = 0;
  Player near_b = 0;
};

inline CycleRoles cycle_roles(const Graph& g, Player x) {
  if (classify_topology(g).kind != Topology::kCycle || g.n() < 5) {
    throw DomainError("cycle attack needs a cycle with at least 5 players");
  }
  const std::vector<Player> nb = g.neighbors(x).to_vector();
  CycleRoles roles;
  roles.target = x;
  roles.near_a = nb[0];
  roles.near_b = nb[1];
  roles.far_a = *g.neighbors(roles.near_a).without(x).begin();
  roles.far_b = *g.neighbors(roles.near_b).without(x).begin();
  return roles;
}

/// Targeting sequence of each order, in role terms.
inline std::array<Player, 4> cycle_order_nodes(CycleOrder order, const CycleRoles& r) {
  switch (order) {
    case CycleOrder::kP: return {r.near_a, r.near_b, r.far_b, r.far_a};
    case CycleOrder::kQ: return {r.near_a, r.far_b, r.near_b, r.far_a};
    case CycleOrder::kR: return {r.near_b, r.far_a, r.near_a, r.far_b};
    case CycleOrder::kS: return {r.near_b, r.near_a, r.far_a, r.far_b};
  }
  return {};
}

inline double cycle_value(const ReliabilityProfile& p, const CycleRoles& r) {
  return cycle_quartic(p[r.target], p[r.near_a], p[r.far_a], p[r.far_b], p[r.near_b]);
}

struct CycleCandidate {
  CycleOrder order;
  AttackPlan plan;
};

/// The four greedy candidates (orders P, Q, R, S), each evaluated with the
/// cycle quartic.
inline std::array<CycleCandidate, 4> cycle_candidate_plans(const AttackProblem& problem) {
  if (problem.spec.variant().index() != 0) {
    throw DomainError("cycle attack needs an nc1 game");
  }
  const Graph& g = *problem.spec.graph();
  const CycleRoles roles = cycle_roles(g, problem.target);
  const PlayerSet role_nodes{roles.near_a, roles.far_a, roles.far_b, roles.near_b};
  const PlayerSet attackable = problem.attackable() & role_nodes;
  detail::require_common_slopes(problem.costs, attackable, false);

  std::vector<std::string> notes;
  const PlayerSet ignored = problem.attackable() - role_nodes;
  if (!ignored.empty()) {
    notes.push_back("players " + ignored.to_string() +
                    " ignored: they lie beyond distance two of the target");
  }
  const double before = cycle_value(problem.costs.baseline(), roles);

  std::array<CycleCandidate, 4> out{};
  for (int i = 0; i < 4; ++i) {
    const auto order = static_cast<CycleOrder>(i);
    std::vector<Player> sequence;
    for (Player j : cycle_order_nodes(order, roles))
      if (attackable.contains(j)) sequence.push_back(j);
    ReliabilityProfile profile = problem.costs.baseline();
    std::vector<Player> targeted;
    const double unspent =
        detail::spend_in_order(sequence, problem.costs, 1.0, problem.budget, profile, targeted);
    AttackPlan plan;
    plan.kind = PlanKind::kFractional;
    plan.shapley_before = before;
    plan.achieved = cycle_value(profile, roles);
    plan.total_cost = problem.costs.cost(profile);
    plan.profile = std::move(profile);
    plan.targeting_order = std::move(targeted);
    plan.unspent = unspent;
    plan.solver = std::string("cycle-best-of-four/") + cycle_order_label(order);
    plan.notes = notes;
    out[i] = {order, std::move(plan)};
  }
  return out;
}

/// Best of the four cycle candidates; ties go to the earlier of P, Q, R, S.
inline AttackPlan cycle_fractional_attack(const AttackProblem& problem) {
  auto candidates = cycle_candidate_plans(problem);
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i)
    if (candidates[i].plan.achieved < candidates[best].plan.achieved - 1e-12) best = i;
  return std::move(candidates[best].plan);
}

struct DecreaseSegment {
  double speed;  // decrease of Sh per unit of probability raised
  double size;   // probability range of the segment
};

/// Piecewise-linear decrease of the cycle target's value (with p_target = 1)
/// along each order, starting from baselines p2, p3, p_{n-1}, p_n.
inline std::array<DecreaseSegment, 4> decrease_segments(CycleOrder order, double p2,
                                                        double p3, double pn1, double pn) {
  switch (order) {
    case CycleOrder::kP:
      return {{{1.0 - (p3 + pn) / 3.0, 1.0 - p2},
               {(2.0 - pn1) / 3.0, 1.0 - pn},
               {1.0 / 6.0, 1.0 - pn1},
               {1.0 / 6.0, 1.0 - p3}}};
    case CycleOrder::kQ:
      return {{{1.0 - (p3 + pn) / 3.0, 1.0 - p2},
               {0.5 - pn / 3.0, 1.0 - pn1},
               {1.0 / 3.0, 1.0 - pn},
               {1.0 / 6.0, 1.0 - p3}}};
    case CycleOrder::kR:
      return {{{1.0 - (p2 + pn1) / 3.0, 1.0 - pn},
               {0.5 - p2 / 3.0, 1.0 - p3},
               {1.0 / 3.0, 1.0 - p2},
               {1.0 / 6.0, 1.0 - pn1}}};
    case CycleOrder::kS:
      return {{{1.0 - (p2 + pn1) / 3.0, 1.0 - pn},
               {(2.0 - p3) / 3.0, 1.0 - p2},
               {1.0 / 6.0, 1.0 - p3},
               {1.0 / 6.0, 1.0 - pn1}}};
  }
  return {};
}

/// Total decrease after raising `amount` units of probability along the
/// segments.
inline double cumulative_decrease(const std::array<DecreaseSegment, 4>& segments,
                                  double amount) {
  double total = 0.0;
  for (const auto& seg : segments) {
    const double used = std::clamp(amount, 0.0, seg.size);
    total += seg.speed * used;
    amount -= used;
    if (amount <= 0.0) break;
  }
  return total;
}

/// Budget (in probability units) where orders P and Q deliver the same
/// decrease, valid when p*_{n-1} - p*_n > 1/2. Baselines use the standard
/// cycle labelling.
inline double crossover_lambda_pq(const ReliabilityProfile& p_star) {
  if (p_star.n() < 2) throw DomainError("crossover needs baselines for players 2 and n");
  return 1.5 - p_star[2] - p_star[p_star.n()];
}

// ---------------------------------------------------------------------------
// Credit games

/// Fractional-knapsack attack on a credit game where x's papers have at
/// most two authors. FC raises coauthors to 1 by descending C(x,l)/R_l; FO
/// lowers them to 0 by descending C(x,l)/L_l. Slopes may differ per player.
inline AttackPlan credit_knapsack_attack(const AttackProblem& problem) {
  const GameSpec& spec = problem.spec;
  const CreditInstance* ci = spec.credit();
  if (ci == nullptr) {
    throw DomainError("knapsack attack needs an fc or fo game, got " + std::string(spec.name()));
  }
  const Player x = problem.target;
  for (std::size_t k : ci->papers_of(x)) {
    if (ci->papers()[k].authors.size() > 2) {
      throw DomainError("paper " + std::to_string(k) + " of player " + std::to_string(x) +
                        " has " + std::to_string(ci->papers()[k].authors.size()) +
                        " authors; the knapsack attack needs two-author papers");
    }
  }
  const bool full_credit = std::holds_alternative<FullCreditGame>(spec.variant());
  const CostModel& costs = problem.costs;

  struct Item {
    Player player;
    double ratio;
  };
  std::vector<Item> items;
  for (const auto& [l, joint] : coauthor_contributions(*ci, x)) {
    if (problem.exempt.contains(l) || joint <= 0.0) continue;
    const double slope = full_credit ? costs.increase_slope(l) : costs.decrease_slope(l);
    items.push_back({l, joint / slope});
  }
  std::stable_sort(items.begin(), items.end(),
                   [](const Item& a, const Item& b) { return a.ratio > b.ratio; });
  std::vector<Player> order;
  for (const Item& it : items) order.push_back(it.player);

  ReliabilityProfile profile = costs.baseline();
  std::vector<Player> targeted;
  const double unspent = detail::spend_in_order(order, costs, full_credit ? 1.0 : 0.0,
                                                problem.budget, profile, targeted);
  return detail::fractional_plan(problem, std::move(profile), std::move(targeted), unspent,
                                 full_credit ? "fractional-knapsack/raise"
                                             : "fractional-knapsack/lower");
}

/// Players whose reliabilities influence Sh(y); a pairwise attack protecting
/// y must leave them alone.
inline PlayerSet pairwise_exempt_set(const GameSpec& spec, Player y) {
  spec.check_player(y);
  if (const auto* g = std::get_if<Nc3Game>(&spec.variant())) {
    return ball(g->graph(), PlayerSet{y}, 2.0 * g->d_cut());
  }
  if (const Graph* g = spec.graph()) {
    PlayerSet out;
    for (Player z : g->closed_neighborhood(y)) out = out | g->closed_neighborhood(z);
    return out;
  }
  if (const CreditInstance* ci = spec.credit()) return ci->coauthors(y).with(y);
  throw DomainError("pairwise exemption undefined for game variant " + std::string(spec.name()));
}

// ---------------------------------------------------------------------------
// Removal attacks

struct RemovalCounterexample {
  PlayerSet removed;
  double before;
  double after;
};

struct NoBenefitVerdict {
  bool passed = true;
  long checked = 0;
  std::optional<RemovalCounterexample> counterexample;
};

namespace detail {

inline ReliabilityProfile with_removed(ReliabilityProfile p, PlayerSet removed) {
  for (Player j : removed) p.set(j, 0.0);
  return p;
}

inline bool record_removal(const GameSpec& spec, const ReliabilityProfile& baseline, Player x,
                           double before, PlayerSet removed, NoBenefitVerdict& verdict,
                           const Limits& limits) {
  const double after = shapley_closed(spec, with_removed(baseline, removed), x, limits);
  ++verdict.checked;
  if (after < before - kBudgetSlack) {
    verdict.passed = false;
    verdict.counterexample = RemovalCounterexample{removed, before, after};
    return false;
  }
  return true;
}

}  // namespace detail

/// Tries `trials` random removal sets (each other player included with
/// probability 1/2) and reports the first one that lowers Sh(x).
inline NoBenefitVerdict removal_no_benefit_check(const GameSpec& spec,
                                                 const ReliabilityProfile& baseline, Player x,
                                                 long trials, std::uint64_t seed = 1,
                                                 const Limits& limits = {}) {
  spec.check_player(x);
  const double before = shapley_closed(spec, baseline, x, limits);
  const std::vector<Player> others = PlayerSet::range(spec.n()).without(x).to_vector();
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  NoBenefitVerdict verdict;
  for (long t = 0; t < trials; ++t) {
    PlayerSet removed;
    for (Player j : others)
      if (coin(rng)) removed.insert(j);
    if (!detail::record_removal(spec, baseline, x, before, removed, verdict, limits)) break;
  }
  return verdict;
}

/// Same check over every subset of the other players.
inline NoBenefitVerdict removal_no_benefit_exhaustive(const GameSpec& spec,
                                                      const ReliabilityProfile& baseline,
                                                      Player x, const Limits& limits = {}) {
  spec.check_player(x);
  const PlayerSet others = PlayerSet::range(spec.n()).without(x);
  if (others.size() > limits.removal_candidate_cap) {
    throw ResourceError("exhaustive removal over " + std::to_string(others.size()) + " players",
                        "removal_candidate_cap", limits.removal_candidate_cap);
  }
  const double before = shapley_closed(spec, baseline, x, limits);
  NoBenefitVerdict verdict;
  bool keep_going = true;
  for_each_subset(others, [&](PlayerSet removed) {
    if (keep_going)
      keep_going = detail::record_removal(spec, baseline, x, before, removed, verdict, limits);
  });
  return verdict;
}

/// Exact removal attack: the cheapest-to-evaluate exhaustive search over all
/// subsets of `candidates` whose removal cost fits the budget. Ties prefer
/// the smaller set, then the lexicographically smaller one.
inline AttackPlan best_removal(const GameSpec& spec, const CostModel& costs, double budget,
                               Player x, PlayerSet candidates, const Limits& limits = {}) {
  candidates = candidates.without(x);
  if (candidates.size() > limits.removal_candidate_cap) {
    throw ResourceError("removal search over " + std::to_string(candidates.size()) +
                            " candidates",
                        "removal_candidate_cap", limits.removal_candidate_cap);
  }
  const ReliabilityProfile baseline = costs.baseline();
  const double before = shapley_closed(spec, baseline, x, limits);

  PlayerSet best;
  double best_value = before;
  for_each_subset(candidates, [&](PlayerSet removed) {
    if (removed.empty() || costs.removal_cost(removed) > budget + kBudgetSlack) return;
    const double value = shapley_closed(spec, detail::with_removed(baseline, removed), x, limits);
    bool better = value < best_value - 1e-12;
    if (!better && std::abs(value - best_value) <= 1e-12) {
      if (removed.size() != best.size()) {
        better = removed.size() < best.size();
      } else {
        const auto a = removed.to_vector(), b = best.to_vector();
        better = std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
      }
    }
    if (better) {
      best = removed;
      best_value = value;
    }
  });

  AttackPlan plan;
  plan.kind = PlanKind::kRemoval;
  plan.removed = best;
  plan.profile = detail::with_removed(baseline, best);
  plan.total_cost = costs.removal_cost(best);
  plan.shapley_before = before;
  plan.achieved = best_value;
  plan.unspent = budget - plan.total_cost;
  plan.targeting_order = best.to_vector();
  plan.solver = "exhaustive-removal";
  return plan;
}

/// Optimal removal attack on a full-obligation game, searching subsets of
/// x's coauthors. Exponential; the problem is NP-hard in general.
inline AttackPlan fo_removal_exhaustive(const CreditInstance& ci, const CostModel& costs,
                                        double budget, Player x, PlayerSet exempt = {},
                                        const Limits& limits = {}) {
  ci.check_player(x);
  if (costs.n() != ci.n()) throw DomainError("cost model does not match the instance");
  if (!(budget >= 0.0)) throw DomainError("budget must be nonnegative");
  return best_removal(GameSpec::fo(ci), costs, budget, x, ci.coauthors(x) - exempt, limits);
}

/// Removal attack for any game: FO searches coauthors, everything else
/// searches all attackable players.
inline AttackPlan removal_attack(const AttackProblem& problem, const Limits& limits = {}) {
  if (const auto* g = std::get_if<FullObligationGame>(&problem.spec.variant())) {
    return fo_removal_exhaustive(g->instance, problem.costs, problem.budget, problem.target,
                                 problem.exempt, limits);
  }
  return best_removal(problem.spec, problem.costs, problem.budget, problem.target,
                      problem.attackable(), limits);
}

// ---------------------------------------------------------------------------
// Budgeted max-coverage

struct BmcSet {
  std::vector<int> members;  // 1-based element indices
  long long cost = 0;
};

struct BmcInstance {
  std::vector<long long> weights;  // element i+1 has weights[i]
  std::vector<BmcSet> sets;
  long long budget = 0;     // k
  long long threshold = 0;  // L

  void validate() const {
    for (std::size_t i = 0; i < weights.size(); ++i)
      if (weights[i] <= 0)
        throw DomainError("element " + std::to_string(i + 1) + " weight must be positive");
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (sets[j].cost < 0)
        throw DomainError("set " + std::to_string(j + 1) + " cost must be nonnegative");
      std::vector<int> seen = sets[j].members;
      std::sort(seen.begin(), seen.end());
      if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw DomainError("set " + std::to_string(j + 1) + " lists an element twice");
      for (int e : seen)
        if (e < 1 || e > static_cast<int>(weights.size()))
          throw DomainError("set " + std::to_string(j + 1) + " member " + std::to_string(e) +
                            " is not an element index");
    }
    if (budget < 0) throw DomainError("budget k must be nonnegative");
    if (threshold < 0) throw DomainError("threshold L must be nonnegative");
  }
};

/// Full-obligation removal instance built from a max-coverage instance.
/// Player 1 is the target, set j is coauthor j+1.
struct BmcReduction {
  CreditInstance instance;
  CostModel costs;
  double budget = 0.0;
  Player target = 1;
  long long threshold = 0;
};

inline BmcReduction bmc_reduce(const BmcInstance& bmc) {
  bmc.validate();
  const int m = static_cast<int>(bmc.sets.size());
  const int n = m + 1;
  check_player_count(n);
  std::vector<Paper> papers;
  for (std::size_t i = 0; i < bmc.weights.size(); ++i) {
    PlayerSet authors{1};
    for (int j = 0; j < m; ++j) {
      const auto& members = bmc.sets[j].members;
      if (std::find(members.begin(), members.end(), static_cast<int>(i + 1)) != members.end())
        authors.insert(j + 2);
    }
    papers.push_back({authors, static_cast<double>(authors.size()) *
                                   static_cast<double>(bmc.weights[i])});
  }
  std::vector<double> removal(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < m; ++j) removal[j + 1] = static_cast<double>(bmc.sets[j].cost);
  BmcReduction out;
  out.instance = CreditInstance(n, std::move(papers));
  out.costs = CostModel::uniform(std::vector<double>(static_cast<std::size_t>(n), 1.0), 1.0,
                                 1.0, std::move(removal));
  out.budget = static_cast<double>(bmc.budget);
  out.target = 1;
  out.threshold = bmc.threshold;
  return out;
}

struct BmcSolution {
  std::vector<int> chosen;  // 1-based set indices
  long long coverage = 0;
  long long cost = 0;
  bool yes = false;
};

/// Exhaustive max-coverage under the budget. Ties prefer fewer sets, then
/// the lexicographically smaller family.
inline BmcSolution bmc_solve_exact(const BmcInstance& bmc, const Limits& limits = {}) {
  bmc.validate();
  const int m = static_cast<int>(bmc.sets.size());
  if (m > limits.bmc_set_cap) {
    throw ResourceError("max-coverage over " + std::to_string(m) + " sets", "bmc_set_cap",
                        limits.bmc_set_cap);
  }
  const std::size_t elements = bmc.weights.size();
  BmcSolution best;
  bool have = false;
  std::vector<char> covered(elements);
  for (std::uint64_t family = 0; family < (std::uint64_t{1} << m); ++family) {
    long long cost = 0;
    for (int j = 0; j < m; ++j)
      if ((family >> j) & 1u) cost += bmc.sets[j].cost;
    if (cost > bmc.budget) continue;
    std::fill(covered.begin(), covered.end(), 0);
    for (int j = 0; j < m; ++j)
      if ((family >> j) & 1u)
        for (int e : bmc.sets[j].members) covered[e - 1] = 1;
    long long coverage = 0;
    for (std::size_t i = 0; i < elements; ++i)
      if (covered[i]) coverage += bmc.weights[i];
    std::vector<int> chosen;
    for (int j = 0; j < m; ++j)
      if ((family >> j) & 1u) chosen.push_back(j + 1);
    bool better = !have || coverage > best.coverage;
    if (have && coverage == best.coverage) {
      better = chosen.size() != best.chosen.size()
                   ? chosen.size() < best.chosen.size()
                   : std::lexicographical_compare(chosen.begin(), chosen.end(),
                                                  best.chosen.begin(), best.chosen.end());
    }
    if (better) {
      best = {std::move(chosen), coverage, cost, false};
      have = true;
    }
  }
  best.yes = best.coverage >= bmc.threshold;
  return best;
}

struct RemovalDecision {
  AttackPlan plan;
  double decrease = 0.0;
  bool yes = false;
};

/// Answers the max-coverage question through the removal attack on the
/// reduced instance.
inline RemovalDecision bmc_decide_by_removal(const BmcReduction& reduction,
                                             const Limits& limits = {}) {
  RemovalDecision out;
  out.plan = fo_removal_exhaustive(reduction.instance, reduction.costs, reduction.budget,
                                   reduction.target, {}, limits);
  out.decrease = out.plan.shapley_before - out.plan.achieved;
  out.yes = out.decrease >= static_cast<double>(reduction.threshold) - kBudgetSlack;
  return out;
}

}  // namespace reliattack

#endif  // RELIATTACK_ATTACKS_HPP
