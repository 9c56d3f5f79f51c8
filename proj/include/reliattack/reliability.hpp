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

#ifndef RELIATTACK_RELIABILITY_HPP
#define RELIATTACK_RELIABILITY_HPP

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "reliattack/error.hpp"
#include "reliattack/games.hpp"
#include "reliattack/limits.hpp"
#include "reliattack/player_set.hpp"

namespace reliattack {

/// Independent participation probabilities p_1..p_n.
class ReliabilityProfile {
 public:
  ReliabilityProfile() = default;

  explicit ReliabilityProfile(std::vector<double> p) : p_(std::move(p)) {
    check_player_count(n());
    for (Player x = 1; x <= n(); ++x) check_value(x, p_[x - 1]);
  }

  static ReliabilityProfile uniform(int n, double value) {
    return ReliabilityProfile(std::vector<double>(static_cast<std::size_t>(n), value));
  }

  int n() const { return static_cast<int>(p_.size()); }

  double operator[](Player x) const {
    check_player(x);
    return p_[x - 1];
  }

  void set(Player x, double value) {
    check_player(x);
    check_value(x, value);
    p_[x - 1] = value;
  }

  ReliabilityProfile with(Player x, double value) const {
    ReliabilityProfile out = *this;
    out.set(x, value);
    return out;
  }

  std::span<const double> values() const { return p_; }

  friend bool operator==(const ReliabilityProfile&,
                         const ReliabilityProfile&) = default;

 private:
  void check_player(Player x) const {
    if (x < 1 || x > n()) {
      throw DomainError("player " + std::to_string(x) +
                        " outside profile 1.." + std::to_string(n()));
    }
  }
  static void check_value(Player x, double v) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw DomainError("reliability of player " + std::to_string(x) +
                        " must lie in [0,1], got " + std::to_string(v));
    }
  }

  std::vector<double> p_;
};

namespace detail {

inline void check_profile_fits(const ReliabilityProfile& p, PlayerSet s) {
  if (s.max_player() > p.n()) {
    throw DomainError("coalition " + s.to_string() +
                      " exceeds profile size " + std::to_string(p.n()));
  }
}

/// Pi_{T,S} without the subset check; T must be a subset of S.
inline double liveness_probability(PlayerSet t, PlayerSet s,
                                   const ReliabilityProfile& p) {
  double prob = 1.0;
  for (Player i : s) prob *= t.contains(i) ? p[i] : 1.0 - p[i];
  return prob;
}

}  // namespace detail

/// Pi_{T,S}: probability that exactly the members of T are live among S.
inline double pi_prob(PlayerSet t, PlayerSet s, const ReliabilityProfile& p) {
  if (!t.is_subset_of(s)) {
    throw DomainError("pi_prob requires T subset of S, got T=" + t.to_string() +
                      " S=" + s.to_string());
  }
  detail::check_profile_fits(p, s);
  return detail::liveness_probability(t, s, p);
}

/// dPi_{T,S}/dp_j, the three-case derivative.
inline double pi_partial(PlayerSet t, PlayerSet s, const ReliabilityProfile& p,
                         Player j) {
  if (!t.is_subset_of(s)) {
    throw DomainError("pi_partial requires T subset of S, got T=" +
                      t.to_string() + " S=" + s.to_string());
  }
  detail::check_profile_fits(p, s);
  if (!s.contains(j)) return 0.0;
  if (t.contains(j)) return detail::liveness_probability(t.without(j), s.without(j), p);
  return -detail::liveness_probability(t, s.without(j), p);
}

/// Reliability extension v-bar(S) = sum over T subset of S of v(T) Pi_{T,S}.
/// Accumulates in increasing mask order.
inline double reliability_value(const GameSpec& spec, const ReliabilityProfile& p,
                                PlayerSet s, const Limits& limits = {}) {
  spec.check_players(s);
  detail::check_profile_fits(p, s);
  if (s.size() > limits.reliability_subset_cap) {
    throw ResourceError("reliability_value over " + std::to_string(s.size()) +
                            " players",
                        "reliability_subset_cap", limits.reliability_subset_cap);
  }
  double total = 0.0;
  for_each_subset(s, [&](PlayerSet t) {
    total += char_value(spec, t) * detail::liveness_probability(t, s, p);
  });
  return total;
}

}  // namespace reliattack

#endif  // RELIATTACK_RELIABILITY_HPP
