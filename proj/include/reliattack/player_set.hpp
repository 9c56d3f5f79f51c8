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

#ifndef RELIATTACK_PLAYER_SET_HPP
#define RELIATTACK_PLAYER_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include "reliattack/error.hpp"

namespace reliattack {

/// Players are identified by 1-based indices.
using Player = int;

inline constexpr int kMaxPlayers = 64;

inline void check_player_count(int n) {
  if (n < 0 || n > kMaxPlayers) {
    throw DomainError("player count " + std::to_string(n) +
                      " outside supported range 0.." +
                      std::to_string(kMaxPlayers));
  }
}

/// A coalition, stored as a bitmask where bit i-1 stands for player i.
///
/// Ordering and iteration follow the mask, so enumeration is deterministic.
class PlayerSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Player;
    using difference_type = std::ptrdiff_t;
    using pointer = const Player*;
    using reference = Player;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Player operator*() const { return std::countr_zero(rest_) + 1; }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr PlayerSet() = default;

  PlayerSet(std::initializer_list<Player> players) {
    for (Player p : players) insert(p);
  }

  static constexpr PlayerSet from_mask(std::uint64_t mask) {
    PlayerSet s;
    s.mask_ = mask;
    return s;
  }

  /// {1, ..., n}
  static PlayerSet range(int n) {
    check_player_count(n);
    return from_mask(n == 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
  }

  template <typename Range>
  static PlayerSet of(const Range& players) {
    PlayerSet s;
    for (Player p : players) s.insert(p);
    return s;
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }

  constexpr bool contains(Player p) const {
    return p >= 1 && p <= kMaxPlayers && ((mask_ >> (p - 1)) & 1u) != 0;
  }

  void insert(Player p) {
    check(p);
    mask_ |= bit(p);
  }
  void erase(Player p) {
    check(p);
    mask_ &= ~bit(p);
  }

  PlayerSet with(Player p) const {
    PlayerSet s = *this;
    s.insert(p);
    return s;
  }
  PlayerSet without(Player p) const {
    PlayerSet s = *this;
    s.erase(p);
    return s;
  }

  constexpr bool is_subset_of(PlayerSet other) const {
    return (mask_ & ~other.mask_) == 0;
  }

  /// Largest member, or 0 when empty.
  constexpr Player max_player() const {
    return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_);
  }

  constexpr iterator begin() const { return iterator(mask_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Player> to_vector() const { return {begin(), end()}; }

  friend constexpr PlayerSet operator|(PlayerSet a, PlayerSet b) {
    return from_mask(a.mask_ | b.mask_);
  }
  friend constexpr PlayerSet operator&(PlayerSet a, PlayerSet b) {
    return from_mask(a.mask_ & b.mask_);
  }
  /// Set difference.
  friend constexpr PlayerSet operator-(PlayerSet a, PlayerSet b) {
    return from_mask(a.mask_ & ~b.mask_);
  }
  friend constexpr bool operator==(PlayerSet, PlayerSet) = default;

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (Player p : *this) {
      if (!first) out += ",";
      out += std::to_string(p);
      first = false;
    }
    return out + "}";
  }

 private:
  static constexpr std::uint64_t bit(Player p) {
    return std::uint64_t{1} << (p - 1);
  }
  static void check(Player p) {
    if (p < 1 || p > kMaxPlayers) {
      throw DomainError("player " + std::to_string(p) + " out of range");
    }
  }

  std::uint64_t mask_ = 0;
};

/// Calls f(S) for every S subset of `universe`, in increasing mask order
/// (so the empty set comes first).
template <typename F>
void for_each_subset(PlayerSet universe, F&& f) {
  const std::uint64_t u = universe.mask();
  std::uint64_t sub = 0;
  do {
    f(PlayerSet::from_mask(sub));
    sub = (sub - u) & u;
  } while (sub != 0);
}

}  // namespace reliattack

#endif  // RELIATTACK_PLAYER_SET_HPP
