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

#ifndef RELIATTACK_SHAPLEY_HPP
#define RELIATTACK_SHAPLEY_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "reliattack/error.hpp"
#include "reliattack/games.hpp"
#include "reliattack/limits.hpp"
#include "reliattack/player_set.hpp"
#include "reliattack/reliability.hpp"

namespace reliattack {

/// One real value per player, indexed 1..n.
class PlayerValues {
 public:
  PlayerValues() = default;
  explicit PlayerValues(int n) : values_(static_cast<std::size_t>(n), 0.0) {}
  explicit PlayerValues(std::vector<double> values) : values_(std::move(values)) {}

  int n() const { return static_cast<int>(values_.size()); }
  double operator[](Player x) const { return values_.at(static_cast<std::size_t>(x - 1)); }
  double& operator[](Player x) { return values_.at(static_cast<std::size_t>(x - 1)); }
  const std::vector<double>& values() const { return values_; }
  double sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

 private:
  std::vector<double> values_;
};

using ShapleyVector = PlayerValues;

namespace detail {

inline void check_profile_matches(const GameSpec& spec, const ReliabilityProfile& p) {
  if (p.n() != spec.n()) {
    throw DomainError("profile has " + std::to_string(p.n()) +
                      " entries but the game has " + std::to_string(spec.n()) +
                      " players");
  }
}

/// A term  sum_{S subset of support} coef(S) * Pi_{S,support}  of a
/// centrality closed form. Every closed form for NC1-NC3 is p_x times a sum
/// of such terms, with x outside every support.
struct KernelTerm {
  PlayerSet support;
  std::function<double(PlayerSet)> coef;
};

inline void check_support(PlayerSet w, const Limits& limits) {
  if (w.size() > limits.neighborhood_cap) {
    throw ResourceError("local neighbourhood of " + std::to_string(w.size()) +
                            " players",
                        "neighborhood_cap", limits.neighborhood_cap);
  }
}

inline double kernel_value(const KernelTerm& term, const ReliabilityProfile& p) {
  double total = 0.0;
  for_each_subset(term.support, [&](PlayerSet s) {
    total += term.coef(s) * liveness_probability(s, term.support, p);
  });
  return total;
}

/// d/dp_j of kernel_value, summed term by term with pi_partial.
inline double kernel_partial(const KernelTerm& term, const ReliabilityProfile& p,
                             Player j) {
  if (!term.support.contains(j)) return 0.0;
  double total = 0.0;
  for_each_subset(term.support, [&](PlayerSet s) {
    total += term.coef(s) * pi_partial(s, term.support, p, j);
  });
  return total;
}

inline double inverse_size_plus_one(PlayerSet s) { return 1.0 / (s.size() + 1.0); }

inline std::vector<KernelTerm> centrality_kernels(const GameSpec& spec, Player x,
                                                  const Limits& limits) {
  spec.check_player(x);
  std::vector<KernelTerm> terms;
  auto add = [&](PlayerSet support, std::function<double(PlayerSet)> coef) {
    check_support(support, limits);
    terms.push_back({support, std::move(coef)});
  };
  if (const auto* g = std::get_if<Nc1Game>(&spec.variant())) {
    for (Player y : g->graph.closed_neighborhood(x))
      add(g->graph.closed_neighborhood(y).without(x), inverse_size_plus_one);
  } else if (const auto* g = std::get_if<Nc2Game>(&spec.variant())) {
    const int k = g->k;
    for (Player y : g->graph.neighbors(x)) {
      // x covers y when y is not itself a live predecessor and exactly k-1
      // live neighbours of y precede x.
      add(g->graph.closed_neighborhood(y).without(x), [k, y](PlayerSet s) {
        const int size = s.size();
        if (s.contains(y)) {
          return size >= k ? (size + 1.0 - k) / (static_cast<double>(size) * (size + 1.0))
                           : 0.0;
        }
        return size >= k - 1 ? 1.0 / (size + 1.0) : 0.0;
      });
    }
    add(g->graph.neighbors(x), [k](PlayerSet s) {
      const int size = s.size();
      return std::min(k, size + 1) / (size + 1.0);
    });
  } else if (const auto* g = std::get_if<Nc3Game>(&spec.variant())) {
    for (Player y : g->cut_ball(x))
      add(g->cut_ball(y).without(x), inverse_size_plus_one);
  } else {
    throw DomainError("centrality kernels need an NC1, NC2 or NC3 game, got " +
                      std::string(spec.name()));
  }
  return terms;
}

inline double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

/// Exact Shapley values by enumerating all n! orderings. With a profile,
/// the game is the reliability extension and every coalition value is the
/// exact expectation over liveness.
inline ShapleyVector shapley_definitional(const GameSpec& spec,
                                          const std::optional<ReliabilityProfile>& p,
                                          const Limits& limits = {}) {
  const int n = spec.n();
  if (n > limits.definitional_player_cap) {
    throw ResourceError("permutation enumeration over " + std::to_string(n) +
                            " players",
                        "definitional_player_cap", limits.definitional_player_cap);
  }
  if (p) detail::check_profile_matches(spec, *p);
  const std::size_t subsets = std::size_t{1} << n;

  std::vector<double> value(subsets);
  for (std::size_t m = 0; m < subsets; ++m)
    value[m] = char_value(spec, PlayerSet::from_mask(m));
  if (p) {
    std::vector<double> extended(subsets, 0.0);
    for (std::size_t m = 0; m < subsets; ++m) {
      const PlayerSet s = PlayerSet::from_mask(m);
      double total = 0.0;
      for_each_subset(s, [&](PlayerSet t) {
        total += value[t.mask()] * detail::liveness_probability(t, s, *p);
      });
      extended[m] = total;
    }
    value = std::move(extended);
  }

  std::vector<Player> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::vector<double> sums(static_cast<std::size_t>(n), 0.0);
  double permutations = 0.0;
  do {
    std::uint64_t before = 0;
    for (Player x : order) {
      const std::uint64_t after = before | (std::uint64_t{1} << (x - 1));
      sums[x - 1] += value[after] - value[before];
      before = after;
    }
    permutations += 1.0;
  } while (std::next_permutation(order.begin(), order.end()));

  for (double& s : sums) s /= permutations;
  return ShapleyVector(std::move(sums));
}

/// Closed-form Shapley value of player x in the reliability extension.
/// Centrality games cost O(sum of 2^|local support|); credit games cost
/// O(sum over x's papers of 2^{n_k}).
inline double shapley_closed(const GameSpec& spec, const ReliabilityProfile& p,
                             Player x, const Limits& limits = {}) {
  spec.check_player(x);
  detail::check_profile_matches(spec, p);
  if (spec.is_centrality()) {
    double total = 0.0;
    for (const auto& term : detail::centrality_kernels(spec, x, limits))
      total += detail::kernel_value(term, p);
    return p[x] * total;
  }
  if (const auto* g = std::get_if<FullCreditGame>(&spec.variant())) {
    const CreditInstance& ci = g->instance;
    double total = 0.0;
    for (std::size_t k : ci.papers_of(x)) {
      const Paper& paper = ci.papers()[k];
      const int nk = paper.authors.size();
      if (nk > limits.paper_author_cap) {
        throw ResourceError("paper with " + std::to_string(nk) + " authors",
                            "paper_author_cap", limits.paper_author_cap);
      }
      double inner = 0.0;
      for_each_subset(paper.authors.without(x), [&](PlayerSet s) {
        const int size = s.size();
        inner += detail::liveness_probability(PlayerSet{}, s, p) /
                 ((nk - size) * detail::binomial(nk, size));
      });
      total += paper.score * inner;
    }
    return p[x] * total;
  }
  if (const auto* g = std::get_if<FullObligationGame>(&spec.variant())) {
    const CreditInstance& ci = g->instance;
    double total = 0.0;
    for (std::size_t k : ci.papers_of(x)) {
      const Paper& paper = ci.papers()[k];
      total += paper.score / paper.authors.size() *
               detail::liveness_probability(paper.authors, paper.authors, p);
    }
    return total;
  }
  throw DomainError("no closed form for game variant " + std::string(spec.name()));
}

inline ShapleyVector shapley_closed_all(const GameSpec& spec,
                                        const ReliabilityProfile& p,
                                        const Limits& limits = {}) {
  ShapleyVector out(spec.n());
  for (Player x = 1; x <= spec.n(); ++x) out[x] = shapley_closed(spec, p, x, limits);
  return out;
}

/// Full-credit Shapley value when every paper of x has exactly two authors:
/// p_x * sum_l C(x,l) (2 - p_l) / 2.
inline double shapley_fc_two_author(const CreditInstance& ci,
                                    const ReliabilityProfile& p, Player x) {
  ci.check_player(x);
  if (p.n() != ci.n()) throw DomainError("profile size does not match instance");
  for (std::size_t k : ci.papers_of(x)) {
    if (ci.papers()[k].authors.size() != 2) {
      throw DomainError("paper " + std::to_string(k) + " of player " +
                        std::to_string(x) + " has " +
                        std::to_string(ci.papers()[k].authors.size()) +
                        " authors; the two-author formula needs exactly 2");
    }
  }
  double total = 0.0;
  for (const auto& [l, joint] : coauthor_contributions(ci, x))
    total += joint * (2.0 - p[l]) / 2.0;
  return p[x] * total;
}

/// NC1 Shapley value of a cycle node in terms of its two neighbours
/// (near_a, near_b) and the two nodes at distance two (far_a beyond near_a,
/// far_b beyond near_b).
inline double cycle_quartic(double p_target, double near_a, double far_a,
                            double far_b, double near_b) {
  return p_target * ((near_a * near_b + near_a * far_a + far_b * near_b) / 3.0 -
                     (far_a + far_b) / 2.0 - near_a - near_b + 3.0);
}

/// NC1 Shapley value of player 1 on the cycle 1-2-...-n-1, n >= 5.
inline double shapley_cycle_closed(const ReliabilityProfile& p) {
  const int n = p.n();
  if (n < 5) {
    throw DomainError("cycle closed form needs n >= 5 (got " + std::to_string(n) +
                      "); use shapley_definitional for smaller cycles");
  }
  return cycle_quartic(p[1], p[2], p[3], p[n - 1], p[n]);
}

/// dSh[NC1](x)/dp_j for every player j. Entry x holds the derivative in p_x
/// itself (Sh is linear in p_x).
inline PlayerValues shapley_gradient_nc1(const Graph& g, const ReliabilityProfile& p,
                                         Player x, const Limits& limits = {}) {
  g.check_player(x);
  if (p.n() != g.n()) throw DomainError("profile size does not match graph");
  PlayerValues grad(g.n());
  const PlayerSet around_x = g.closed_neighborhood(x);
  for (Player j = 1; j <= g.n(); ++j) {
    double total = 0.0;
    if (j == x) {
      for (Player y : around_x) {
        const PlayerSet w = g.closed_neighborhood(y).without(x);
        detail::check_support(w, limits);
        for_each_subset(w, [&](PlayerSet s) {
          total += detail::liveness_probability(s, w, p) / (s.size() + 1.0);
        });
      }
      grad[j] = total;
      continue;
    }
    for (Player y : around_x & g.closed_neighborhood(j)) {
      const PlayerSet w = g.closed_neighborhood(y).without(x).without(j);
      detail::check_support(w, limits);
      for_each_subset(w, [&](PlayerSet s) {
        const double size = s.size();
        total += detail::liveness_probability(s, w, p) / ((size + 1.0) * (size + 2.0));
      });
    }
    grad[j] = -p[x] * total;
  }
  return grad;
}

/// dSh(x)/dp_j for NC1, NC2 or NC3, derived term by term from the closed
/// form kernels. Used as a cross-check next to shapley_gradient_nc1.
inline PlayerValues shapley_gradient(const GameSpec& spec, const ReliabilityProfile& p,
                                     Player x, const Limits& limits = {}) {
  detail::check_profile_matches(spec, p);
  const auto terms = detail::centrality_kernels(spec, x, limits);
  PlayerValues grad(spec.n());
  for (Player j = 1; j <= spec.n(); ++j) {
    double total = 0.0;
    for (const auto& term : terms)
      total += j == x ? detail::kernel_value(term, p) : detail::kernel_partial(term, p, j);
    grad[j] = j == x ? total : p[x] * total;
  }
  return grad;
}

}  // namespace reliattack

#endif  // RELIATTACK_SHAPLEY_HPP
