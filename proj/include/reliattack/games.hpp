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

#ifndef RELIATTACK_GAMES_HPP
#define RELIATTACK_GAMES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "reliattack/error.hpp"
#include "reliattack/player_set.hpp"

namespace reliattack {

struct Edge {
  Player u = 0;
  Player v = 0;
  double weight = 1.0;
};

/// Finite simple undirected graph on players 1..n, optionally weighted.
/// Unweighted graphs carry unit weights, so distances are hop counts.
class Graph {
 public:
  Graph() = default;

  Graph(int n, std::vector<Edge> edges, bool weighted = false)
      : n_(n), edges_(std::move(edges)), weighted_(weighted) {
    check_player_count(n_);
    adjacency_.assign(static_cast<std::size_t>(n_) + 1, PlayerSet{});
    weights_.assign(static_cast<std::size_t>(n_ + 1) * (n_ + 1),
                    std::numeric_limits<double>::quiet_NaN());
    for (const Edge& e : edges_) {
      if (e.u < 1 || e.u > n_ || e.v < 1 || e.v > n_) {
        throw DomainError("edge (" + std::to_string(e.u) + "," +
                          std::to_string(e.v) + ") has an endpoint outside 1.." +
                          std::to_string(n_));
      }
      if (e.u == e.v) {
        throw DomainError("self-loop at player " + std::to_string(e.u));
      }
      if (adjacency_[e.u].contains(e.v)) {
        throw DomainError("duplicate edge (" + std::to_string(e.u) + "," +
                          std::to_string(e.v) + ")");
      }
      if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
        throw DomainError("edge (" + std::to_string(e.u) + "," +
                          std::to_string(e.v) +
                          ") must have a strictly positive weight");
      }
      adjacency_[e.u].insert(e.v);
      adjacency_[e.v].insert(e.u);
      weights_[index(e.u, e.v)] = e.weight;
      weights_[index(e.v, e.u)] = e.weight;
    }
  }

  static Graph complete(int n) {
    std::vector<Edge> edges;
    for (Player u = 1; u <= n; ++u)
      for (Player v = u + 1; v <= n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
  }

  static Graph star(int n, Player center = 1) {
    std::vector<Edge> edges;
    for (Player v = 1; v <= n; ++v)
      if (v != center) edges.push_back({std::min(center, v), std::max(center, v)});
    return Graph(n, std::move(edges));
  }

  /// Cycle 1-2-...-n-1.
  static Graph cycle(int n) {
    if (n < 3) throw DomainError("a cycle needs at least 3 players");
    std::vector<Edge> edges;
    for (Player v = 1; v < n; ++v) edges.push_back({v, v + 1});
    edges.push_back({1, n});
    return Graph(n, std::move(edges));
  }

  static Graph path(int n) {
    std::vector<Edge> edges;
    for (Player v = 1; v < n; ++v) edges.push_back({v, v + 1});
    return Graph(n, std::move(edges));
  }

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool weighted() const { return weighted_; }
  PlayerSet players() const { return PlayerSet::range(n_); }

  void check_player(Player v) const {
    if (v < 1 || v > n_) {
      throw DomainError("player " + std::to_string(v) + " outside 1.." +
                        std::to_string(n_));
    }
  }
  void check_players(PlayerSet s) const {
    if (!s.is_subset_of(players())) {
      throw DomainError("coalition " + s.to_string() + " not within 1.." +
                        std::to_string(n_));
    }
  }

  /// N(v)
  PlayerSet neighbors(Player v) const {
    check_player(v);
    return adjacency_[v];
  }
  /// {v} u N(v)
  PlayerSet closed_neighborhood(Player v) const {
    return neighbors(v).with(v);
  }
  bool has_edge(Player u, Player v) const {
    check_player(u);
    return neighbors(v).contains(u);
  }
  double weight(Player u, Player v) const {
    if (!has_edge(u, v)) {
      throw DomainError("no edge (" + std::to_string(u) + "," +
                        std::to_string(v) + ")");
    }
    return weights_[index(u, v)];
  }

 private:
  std::size_t index(Player u, Player v) const {
    return static_cast<std::size_t>(u) * (n_ + 1) + v;
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  bool weighted_ = false;
  std::vector<PlayerSet> adjacency_;
  std::vector<double> weights_;
};

struct Paper {
  PlayerSet authors;
  double score = 0.0;
};

/// Authors 1..n and their papers.
class CreditInstance {
 public:
  CreditInstance() = default;

  CreditInstance(int n, std::vector<Paper> papers)
      : n_(n), papers_(std::move(papers)) {
    check_player_count(n_);
    for (std::size_t i = 0; i < papers_.size(); ++i) {
      const Paper& p = papers_[i];
      if (p.authors.empty()) {
        throw DomainError("paper " + std::to_string(i) + " has no authors");
      }
      if (!p.authors.is_subset_of(PlayerSet::range(n_))) {
        throw DomainError("paper " + std::to_string(i) + " authors " +
                          p.authors.to_string() + " not within 1.." +
                          std::to_string(n_));
      }
      if (!(p.score >= 0.0) || !std::isfinite(p.score)) {
        throw DomainError("paper " + std::to_string(i) +
                          " score must be a finite nonnegative number");
      }
    }
  }

  int n() const { return n_; }
  const std::vector<Paper>& papers() const { return papers_; }

  void check_player(Player x) const {
    if (x < 1 || x > n_) {
      throw DomainError("author " + std::to_string(x) + " outside 1.." +
                        std::to_string(n_));
    }
  }

  /// Indices of the papers x authored.
  std::vector<std::size_t> papers_of(Player x) const {
    check_player(x);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < papers_.size(); ++i)
      if (papers_[i].authors.contains(x)) out.push_back(i);
    return out;
  }

  /// CA(x): everyone sharing at least one paper with x.
  PlayerSet coauthors(Player x) const {
    PlayerSet out;
    for (std::size_t i : papers_of(x)) out = out | papers_[i].authors;
    return out.without(x);
  }

 private:
  int n_ = 0;
  std::vector<Paper> papers_;
};

namespace detail {

inline constexpr double kDistanceSlack = 1e-12;

inline bool within_radius(double d, double r) {
  return d <= r + kDistanceSlack * std::max(1.0, r);
}

}  // namespace detail

/// delta(S): vertices outside S adjacent to some member of S.
inline PlayerSet boundary(const Graph& g, PlayerSet s) {
  g.check_players(s);
  PlayerSet out;
  for (Player x : s) out = out | g.neighbors(x);
  return out - s;
}

/// B(S, r): vertices within weighted distance r of S. Multi-source
/// label-setting shortest paths; n is at most 64 so the O(n^2) variant is
/// used.
inline PlayerSet ball(const Graph& g, PlayerSet s, double r) {
  g.check_players(s);
  if (s.empty()) return {};
  if (!(r >= 0.0)) throw DomainError("ball radius must be nonnegative");
  const int n = g.n();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(static_cast<std::size_t>(n) + 1, kInf);
  std::vector<bool> settled(static_cast<std::size_t>(n) + 1, false);
  for (Player v : s) dist[v] = 0.0;
  PlayerSet out;
  for (;;) {
    Player best = 0;
    for (Player v = 1; v <= n; ++v)
      if (!settled[v] && dist[v] < kInf && (best == 0 || dist[v] < dist[best]))
        best = v;
    if (best == 0 || !detail::within_radius(dist[best], r)) break;
    settled[best] = true;
    out.insert(best);
    for (Player w : g.neighbors(best)) {
      const double cand = dist[best] + g.weight(best, w);
      if (cand < dist[w]) dist[w] = cand;
    }
  }
  return out;
}

/// Network centrality game NC1: v(S) = |S u delta(S)|.
struct Nc1Game {
  Graph graph;
};

/// Network centrality game NC2: S plus every outsider with at least k
/// neighbours in S.
struct Nc2Game {
  Graph graph;
  int k = 1;
};

/// Network centrality game NC3: v(S) = |B(S, d_cut)|. The cutoff balls
/// N_cut(v) are computed once at construction.
class Nc3Game {
 public:
  Nc3Game(Graph graph, double d_cut) : graph_(std::move(graph)), d_cut_(d_cut) {
    if (!(d_cut_ > 0.0) || !std::isfinite(d_cut_)) {
      throw DomainError("d_cut must be a positive real");
    }
    cut_balls_.assign(static_cast<std::size_t>(graph_.n()) + 1, PlayerSet{});
    for (Player v = 1; v <= graph_.n(); ++v)
      cut_balls_[v] = ball(graph_, PlayerSet{v}, d_cut_);
  }

  const Graph& graph() const { return graph_; }
  double d_cut() const { return d_cut_; }
  /// N_cut(v) = B({v}, d_cut); always contains v.
  PlayerSet cut_ball(Player v) const {
    graph_.check_player(v);
    return cut_balls_[v];
  }

 private:
  Graph graph_;
  double d_cut_;
  std::vector<PlayerSet> cut_balls_;
};

/// A coalition earns a paper's score if it holds at least one author.
struct FullCreditGame {
  CreditInstance instance;
};

/// A coalition earns a paper's score only if it holds every author.
struct FullObligationGame {
  CreditInstance instance;
};

/// Hand-built game for oracle cross-tests: coalition mask -> value.
class ExplicitGame {
 public:
  ExplicitGame(int n, std::map<std::uint64_t, double> values)
      : n_(n), values_(std::move(values)) {
    check_player_count(n_);
    if (!values_.contains(0)) {
      throw DomainError("explicit game must define the empty coalition");
    }
  }

  int n() const { return n_; }
  double value(PlayerSet s) const {
    auto it = values_.find(s.mask());
    if (it == values_.end()) {
      throw DomainError("explicit game has no value for coalition " +
                        s.to_string());
    }
    return it->second;
  }

 private:
  int n_;
  std::map<std::uint64_t, double> values_;
};

class GameSpec {
 public:
  using Variant = std::variant<Nc1Game, Nc2Game, Nc3Game, FullCreditGame,
                               FullObligationGame, ExplicitGame>;

  GameSpec(Nc1Game g) : game_(std::move(g)) {}
  GameSpec(Nc2Game g) : game_(std::move(g)) {
    if (std::get<Nc2Game>(game_).k < 1) throw DomainError("NC2 requires k >= 1");
  }
  GameSpec(Nc3Game g) : game_(std::move(g)) {}
  GameSpec(FullCreditGame g) : game_(std::move(g)) {}
  GameSpec(FullObligationGame g) : game_(std::move(g)) {}
  GameSpec(ExplicitGame g) : game_(std::move(g)) {}

  static GameSpec nc1(Graph g) { return Nc1Game{std::move(g)}; }
  static GameSpec nc2(Graph g, int k) { return Nc2Game{std::move(g), k}; }
  static GameSpec nc3(Graph g, double d_cut) {
    return Nc3Game(std::move(g), d_cut);
  }
  static GameSpec fc(CreditInstance ci) { return FullCreditGame{std::move(ci)}; }
  static GameSpec fo(CreditInstance ci) {
    return FullObligationGame{std::move(ci)};
  }

  const Variant& variant() const { return game_; }

  int n() const {
    return std::visit(
        [](const auto& g) -> int {
          using T = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<T, Nc3Game>) {
            return g.graph().n();
          } else if constexpr (std::is_same_v<T, Nc1Game> ||
                               std::is_same_v<T, Nc2Game>) {
            return g.graph.n();
          } else if constexpr (std::is_same_v<T, ExplicitGame>) {
            return g.n();
          } else {
            return g.instance.n();
          }
        },
        game_);
  }

  std::string_view name() const {
    static constexpr std::string_view kNames[] = {"nc1", "nc2", "nc3",
                                                  "fc",  "fo",  "table"};
    return kNames[game_.index()];
  }

  bool is_centrality() const { return game_.index() <= 2; }
  bool is_credit() const { return game_.index() == 3 || game_.index() == 4; }

  /// Host graph of a centrality game, nullptr otherwise.
  const Graph* graph() const {
    if (auto* g = std::get_if<Nc1Game>(&game_)) return &g->graph;
    if (auto* g = std::get_if<Nc2Game>(&game_)) return &g->graph;
    if (auto* g = std::get_if<Nc3Game>(&game_)) return &g->graph();
    return nullptr;
  }

  /// Coauthorship data of a credit game, nullptr otherwise.
  const CreditInstance* credit() const {
    if (auto* g = std::get_if<FullCreditGame>(&game_)) return &g->instance;
    if (auto* g = std::get_if<FullObligationGame>(&game_)) return &g->instance;
    return nullptr;
  }

  void check_player(Player x) const {
    if (x < 1 || x > n()) {
      throw DomainError("player " + std::to_string(x) + " outside 1.." +
                        std::to_string(n()));
    }
  }
  void check_players(PlayerSet s) const {
    if (!s.is_subset_of(PlayerSet::range(n()))) {
      throw DomainError("coalition " + s.to_string() + " not within 1.." +
                        std::to_string(n()));
    }
  }

 private:
  Variant game_;
};

/// Characteristic function v(S) of any supported game; v(empty) = 0 for the
/// five structural games.
inline double char_value(const GameSpec& spec, PlayerSet s) {
  spec.check_players(s);
  return std::visit(
      [s](const auto& g) -> double {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Nc1Game>) {
          return static_cast<double>((s | boundary(g.graph, s)).size());
        } else if constexpr (std::is_same_v<T, Nc2Game>) {
          PlayerSet covered = s;
          for (Player y : g.graph.players() - s)
            if ((g.graph.neighbors(y) & s).size() >= g.k) covered.insert(y);
          return static_cast<double>(covered.size());
        } else if constexpr (std::is_same_v<T, Nc3Game>) {
          PlayerSet covered;
          for (Player y : s) covered = covered | g.cut_ball(y);
          return static_cast<double>(covered.size());
        } else if constexpr (std::is_same_v<T, FullCreditGame>) {
          double total = 0.0;
          for (const Paper& p : g.instance.papers())
            if (!(p.authors & s).empty()) total += p.score;
          return total;
        } else if constexpr (std::is_same_v<T, FullObligationGame>) {
          double total = 0.0;
          for (const Paper& p : g.instance.papers())
            if (p.authors.is_subset_of(s)) total += p.score;
          return total;
        } else {
          return g.value(s);
        }
      },
      spec.variant());
}

/// C(x, l) for every coauthor l of x.
inline std::map<Player, double> coauthor_contributions(const CreditInstance& ci,
                                                       Player x) {
  std::map<Player, double> out;
  for (std::size_t i : ci.papers_of(x)) {
    const Paper& p = ci.papers()[i];
    for (Player l : p.authors.without(x)) out[l] += p.score;
  }
  return out;
}

/// One two-author paper per edge, scored by the edge weight. The full
/// obligation game on the result is the induced-subgraph game of g.
inline CreditInstance induced_subgraph_to_credit(const Graph& g) {
  std::vector<Paper> papers;
  papers.reserve(g.edges().size());
  for (const Edge& e : g.edges())
    papers.push_back({PlayerSet{e.u, e.v}, e.weight});
  return CreditInstance(g.n(), std::move(papers));
}

}  // namespace reliattack

#endif  // RELIATTACK_GAMES_HPP
