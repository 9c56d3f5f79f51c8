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

#ifndef RELIATTACK_IO_HPP
#define RELIATTACK_IO_HPP

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "reliattack/attacks.hpp"
#include "reliattack/error.hpp"
#include "reliattack/games.hpp"
#include "reliattack/oracle.hpp"
#include "reliattack/reliability.hpp"

namespace reliattack::io {

using json = nlohmann::json;

inline json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DomainError(path.string() + ": invalid JSON: " + e.what());
  }
}

namespace detail {

inline const json& field(const json& obj, const std::string& name, const std::string& ctx) {
  if (!obj.is_object()) throw DomainError(ctx + ": expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) throw DomainError("missing field " + ctx + "." + name);
  return *it;
}

inline const json* optional_field(const json& obj, const std::string& name) {
  auto it = obj.find(name);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

inline double as_number(const json& v, const std::string& where) {
  if (!v.is_number()) throw DomainError("field " + where + " must be a number");
  return v.get<double>();
}

inline long long as_integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw DomainError("field " + where + " must be an integer");
  return v.get<long long>();
}

inline std::vector<double> as_numbers(const json& v, const std::string& where) {
  if (!v.is_array()) throw DomainError("field " + where + " must be an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(as_number(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

inline PlayerSet as_players(const json& v, const std::string& where) {
  if (!v.is_array()) throw DomainError("field " + where + " must be an array of players");
  PlayerSet out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const long long p = as_integer(v[i], where + "[" + std::to_string(i) + "]");
    if (p < 1 || p > kMaxPlayers)
      throw DomainError("field " + where + "[" + std::to_string(i) + "] is not a player index");
    out.insert(static_cast<Player>(p));
  }
  return out;
}

/// Re-throws domain errors with the field that triggered them.
template <typename F>
auto in_field(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const ResourceError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    if (msg.find("field ") != std::string::npos) throw;
    throw DomainError("field " + where + ": " + msg);
  }
}

}  // namespace detail

inline GameSpec parse_game(const json& j, const std::string& ctx = "game") {
  using detail::field;
  const json& variant_field = field(j, "variant", ctx);
  if (!variant_field.is_string()) throw DomainError("field " + ctx + ".variant must be a string");
  const std::string variant = variant_field.get<std::string>();
  const long long n = detail::as_integer(field(j, "n", ctx), ctx + ".n");
  if (n < 1 || n > kMaxPlayers) throw DomainError("field " + ctx + ".n must lie in 1..64");
  const int players = static_cast<int>(n);
  const bool graph_game = variant == "nc1" || variant == "nc2" || variant == "nc3";
  const bool credit_game = variant == "fc" || variant == "fo";
  if (!graph_game && !credit_game) {
    throw DomainError("field " + ctx + ".variant must be one of nc1, nc2, nc3, fc, fo");
  }
  const json* edges = detail::optional_field(j, "edges");
  const json* papers = detail::optional_field(j, "papers");
  if (graph_game) {
    if (edges == nullptr) throw DomainError("missing field " + ctx + ".edges");
    if (papers != nullptr) throw DomainError("field " + ctx + ".papers not allowed for " + variant);
    if (!edges->is_array()) throw DomainError("field " + ctx + ".edges must be an array");
    std::vector<Edge> list;
    bool weighted = false;
    for (std::size_t i = 0; i < edges->size(); ++i) {
      const std::string where = ctx + ".edges[" + std::to_string(i) + "]";
      const json& e = (*edges)[i];
      if (!e.is_array() || (e.size() != 2 && e.size() != 3))
        throw DomainError("field " + where + " must be [u,v] or [u,v,w]");
      Edge edge;
      edge.u = static_cast<Player>(detail::as_integer(e[0], where + "[0]"));
      edge.v = static_cast<Player>(detail::as_integer(e[1], where + "[1]"));
      if (e.size() == 3) {
        edge.weight = detail::as_number(e[2], where + "[2]");
        weighted = true;
      }
      list.push_back(edge);
    }
    Graph g = detail::in_field(ctx + ".edges",
                               [&] { return Graph(players, std::move(list), weighted); });
    if (variant == "nc1") return GameSpec::nc1(std::move(g));
    if (variant == "nc2") {
      const long long k = detail::as_integer(field(j, "k", ctx), ctx + ".k");
      if (k < 1 || k > kMaxPlayers) throw DomainError("field " + ctx + ".k must be >= 1");
      return GameSpec::nc2(std::move(g), static_cast<int>(k));
    }
    const double d_cut = detail::as_number(field(j, "d_cut", ctx), ctx + ".d_cut");
    return detail::in_field(ctx + ".d_cut", [&] { return GameSpec::nc3(std::move(g), d_cut); });
  }
  if (papers == nullptr) throw DomainError("missing field " + ctx + ".papers");
  if (edges != nullptr) throw DomainError("field " + ctx + ".edges not allowed for " + variant);
  if (!papers->is_array()) throw DomainError("field " + ctx + ".papers must be an array");
  std::vector<Paper> list;
  for (std::size_t i = 0; i < papers->size(); ++i) {
    const std::string where = ctx + ".papers[" + std::to_string(i) + "]";
    const json& p = (*papers)[i];
    Paper paper;
    paper.authors = detail::as_players(field(p, "authors", where), where + ".authors");
    paper.score = detail::as_number(field(p, "score", where), where + ".score");
    list.push_back(paper);
  }
  CreditInstance ci = detail::in_field(ctx + ".papers",
                                       [&] { return CreditInstance(players, std::move(list)); });
  return variant == "fc" ? GameSpec::fc(std::move(ci)) : GameSpec::fo(std::move(ci));
}

inline GameSpec load_game(const std::filesystem::path& path) {
  return parse_game(load_json_file(path), path.filename().string());
}

/// Comma-separated reliabilities, e.g. "1,0.5,0.5".
inline std::vector<double> parse_number_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end == item.c_str() || *end != '\0')
      throw DomainError(what + ": cannot parse '" + item + "' as a number");
    out.push_back(v);
  }
  return out;
}

struct AttackRequest {
  AttackProblem problem;
  std::string mode;  // "fractional" or "removal"
  std::optional<Player> pairwise_protect;
  bool large_d_cut = false;
};

inline CostModel parse_cost_model(const json& j, int n, const std::string& ctx) {
  using detail::field;
  std::vector<double> p_star = detail::as_numbers(field(j, "p_star", ctx), ctx + ".p_star");
  auto optional_vector = [&](const char* name, double fill) {
    const json* v = detail::optional_field(j, name);
    return v ? detail::as_numbers(*v, ctx + "." + name)
             : std::vector<double>(static_cast<std::size_t>(n), fill);
  };
  std::vector<double> l = optional_vector("L", 1.0);
  std::vector<double> r = optional_vector("R", 1.0);
  std::vector<double> c = optional_vector("c", 0.0);
  for (const auto& [name, vec] : {std::pair<const char*, const std::vector<double>*>{"p_star", &p_star},
                                  {"L", &l}, {"R", &r}, {"c", &c}}) {
    if (static_cast<int>(vec->size()) != n) {
      throw DomainError("field " + ctx + "." + name + " must have " + std::to_string(n) +
                        " entries");
    }
  }
  return detail::in_field(ctx, [&] {
    return CostModel(std::move(p_star), std::move(l), std::move(r), std::move(c));
  });
}

/// Parses an attack request; a string "game" is a path relative to
/// `base_dir`.
inline AttackRequest parse_attack_request(const json& j,
                                          const std::filesystem::path& base_dir = {}) {
  using detail::field;
  const std::string ctx = "request";
  const json& g = field(j, "game", ctx);
  GameSpec spec = g.is_string() ? load_game(base_dir / g.get<std::string>())
                                : parse_game(g, ctx + ".game");
  const long long target = detail::as_integer(field(j, "target", ctx), ctx + ".target");
  const double budget = detail::as_number(field(j, "budget", ctx), ctx + ".budget");
  CostModel costs = parse_cost_model(field(j, "cost_model", ctx), spec.n(), ctx + ".cost_model");

  std::string mode = "fractional";
  if (const json* m = detail::optional_field(j, "mode")) {
    if (!m->is_string() || (*m != "fractional" && *m != "removal"))
      throw DomainError("field " + ctx + ".mode must be \"fractional\" or \"removal\"");
    mode = m->get<std::string>();
  }
  PlayerSet exempt;
  if (const json* e = detail::optional_field(j, "exempt"))
    exempt = detail::as_players(*e, ctx + ".exempt");
  std::optional<Player> protect;
  if (const json* y = detail::optional_field(j, "pairwise_protect")) {
    const long long v = detail::as_integer(*y, ctx + ".pairwise_protect");
    protect = static_cast<Player>(v);
    exempt = exempt | detail::in_field(ctx + ".pairwise_protect", [&] {
               return pairwise_exempt_set(spec, static_cast<Player>(v));
             });
  }
  bool large = false;
  if (const json* f = detail::optional_field(j, "large_d_cut")) {
    if (!f->is_boolean()) throw DomainError("field " + ctx + ".large_d_cut must be a boolean");
    large = f->get<bool>();
  }
  AttackProblem problem = detail::in_field(ctx + ".target", [&] {
    if (target < 1 || target > spec.n())
      throw DomainError("player " + std::to_string(target) + " outside 1.." +
                        std::to_string(spec.n()));
    return AttackProblem(spec, static_cast<Player>(target), budget, costs, exempt);
  });
  return AttackRequest{std::move(problem), mode, protect, large};
}

inline AttackRequest load_attack_request(const std::filesystem::path& path) {
  return parse_attack_request(load_json_file(path), path.parent_path());
}

inline BmcInstance parse_bmc(const json& j) {
  using detail::field;
  const std::string ctx = "bmc";
  BmcInstance out;
  const json& elements = field(j, "elements", ctx);
  if (!elements.is_array()) throw DomainError("field bmc.elements must be an array");
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const std::string where = ctx + ".elements[" + std::to_string(i) + "]";
    out.weights.push_back(detail::as_integer(field(elements[i], "weight", where), where + ".weight"));
  }
  const json& sets = field(j, "sets", ctx);
  if (!sets.is_array()) throw DomainError("field bmc.sets must be an array");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const std::string where = ctx + ".sets[" + std::to_string(i) + "]";
    BmcSet s;
    const json& members = field(sets[i], "members", where);
    if (!members.is_array()) throw DomainError("field " + where + ".members must be an array");
    for (std::size_t m = 0; m < members.size(); ++m)
      s.members.push_back(static_cast<int>(
          detail::as_integer(members[m], where + ".members[" + std::to_string(m) + "]")));
    s.cost = detail::as_integer(field(sets[i], "cost", where), where + ".cost");
    out.sets.push_back(std::move(s));
  }
  out.budget = detail::as_integer(field(j, "k", ctx), ctx + ".k");
  out.threshold = detail::as_integer(field(j, "L", ctx), ctx + ".L");
  detail::in_field(ctx, [&] {
    out.validate();
    return 0;
  });
  return out;
}

inline OracleConfig parse_oracle_config(const json& j) {
  OracleConfig cfg;
  if (!j.is_object()) throw DomainError("oracle config must be an object");
  auto number = [&](const char* name, double& slot) {
    if (const json* v = detail::optional_field(j, name))
      slot = detail::as_number(*v, std::string("config.") + name);
  };
  auto integer = [&](const char* name, auto& slot) {
    if (const json* v = detail::optional_field(j, name))
      slot = static_cast<std::decay_t<decltype(slot)>>(
          detail::as_integer(*v, std::string("config.") + name));
  };
  number("grid_resolution", cfg.grid_resolution);
  number("swap_step", cfg.swap_step);
  number("tolerance", cfg.tolerance);
  integer("max_refinements", cfg.max_refinements);
  integer("max_grid_points", cfg.max_grid_points);
  integer("max_attackable", cfg.max_attackable);
  integer("refine_starts", cfg.refine_starts);
  detail::in_field("config", [&] {
    cfg.validate();
    return 0;
  });
  return cfg;
}

// ---------------------------------------------------------------------------
// Output

/// Rounds to 12 significant digits so serialized output is stable.
inline json number(double v) {
  if (v == 0.0) return 0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double r = std::strtod(buf, nullptr);
  if (r == std::floor(r) && std::abs(r) < 1e15) return static_cast<long long>(r);
  return r;
}

inline json players(const std::vector<Player>& v) { return json(v); }
inline json players(PlayerSet s) { return json(s.to_vector()); }

inline json profile(const ReliabilityProfile& p) {
  json out = json::array();
  for (double v : p.values()) out.push_back(number(v));
  return out;
}

inline json plan_to_json(const AttackPlan& plan) {
  json out;
  if (plan.kind == PlanKind::kRemoval) {
    out["removed"] = players(plan.removed);
  } else {
    out["profile"] = profile(plan.profile);
  }
  out["total_cost"] = number(plan.total_cost);
  out["shapley_before"] = number(plan.shapley_before);
  out["shapley_after"] = number(plan.achieved);
  out["unspent"] = number(plan.unspent);
  out["targeting_order"] = players(plan.targeting_order);
  out["solver"] = plan.solver;
  if (!plan.notes.empty()) out["notes"] = plan.notes;
  return out;
}

inline json game_to_json(const GameSpec& spec) {
  json out;
  out["variant"] = std::string(spec.name());
  out["n"] = spec.n();
  if (const Graph* g = spec.graph()) {
    json edges = json::array();
    for (const Edge& e : g->edges()) {
      if (g->weighted()) edges.push_back({e.u, e.v, number(e.weight)});
      else edges.push_back({e.u, e.v});
    }
    out["edges"] = edges;
    if (const auto* nc2 = std::get_if<Nc2Game>(&spec.variant())) out["k"] = nc2->k;
    if (const auto* nc3 = std::get_if<Nc3Game>(&spec.variant())) out["d_cut"] = number(nc3->d_cut());
  } else if (const CreditInstance* ci = spec.credit()) {
    json papers = json::array();
    for (const Paper& p : ci->papers())
      papers.push_back({{"authors", players(p.authors)}, {"score", number(p.score)}});
    out["papers"] = papers;
  }
  return out;
}

inline json cost_model_to_json(const CostModel& c) {
  json p = json::array(), l = json::array(), r = json::array(), rc = json::array();
  for (Player j = 1; j <= c.n(); ++j) {
    p.push_back(number(c.p_star(j)));
    l.push_back(number(c.decrease_slope(j)));
    r.push_back(number(c.increase_slope(j)));
    rc.push_back(number(c.removal_cost(j)));
  }
  return {{"p_star", p}, {"L", l}, {"R", r}, {"c", rc}};
}

/// Canonical text form: sorted keys, two-space indent, trailing newline.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace reliattack::io

#endif  // RELIATTACK_IO_HPP
