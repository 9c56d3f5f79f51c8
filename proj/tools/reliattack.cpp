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

// Command-line front end. Every subcommand parses its inputs, calls one
// library routine and prints JSON (or a flat table with --format table).

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "reliattack/reliattack.hpp"

namespace ra = reliattack;
using ra::io::json;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitResource = 2;
constexpr int kExitGap = 3;

struct Output {
  std::string format = "json";

  void emit(const json& report) const {
    if (format == "table") {
      for (const auto& [key, value] : report.items())
        std::cout << key << "\t" << (value.is_string() ? value.get<std::string>() : value.dump())
                  << "\n";
    } else {
      std::cout << ra::io::dump(report);
    }
  }
};

ra::ReliabilityProfile profile_or_ones(const std::string& text, int n) {
  if (text.empty()) return ra::ReliabilityProfile::uniform(n, 1.0);
  auto values = ra::io::parse_number_list(text, "--profile");
  if (static_cast<int>(values.size()) != n) {
    throw ra::DomainError("--profile has " + std::to_string(values.size()) +
                          " entries, the game has " + std::to_string(n) + " players");
  }
  return ra::ReliabilityProfile(std::move(values));
}

ra::OracleConfig oracle_config(const std::string& path) {
  ra::OracleConfig cfg =
      path.empty() ? ra::OracleConfig{} : ra::io::parse_oracle_config(ra::io::load_json_file(path));
  if (const char* cap = std::getenv("RELIATTACK_ORACLE_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(cap, &end, 10);
    if (end == cap || *end != '\0' || v < 0)
      throw ra::DomainError("RELIATTACK_ORACLE_CAP must be a nonnegative integer");
    cfg.max_attackable = static_cast<int>(v);
  }
  return cfg;
}

json shapley_report(const std::string& game_path, const std::string& profile_text,
                    std::optional<int> player, const std::string& method) {
  const ra::GameSpec spec = ra::io::load_game(game_path);
  const ra::ReliabilityProfile p = profile_or_ones(profile_text, spec.n());
  ra::ShapleyVector values;
  if (method == "definitional") {
    values = ra::shapley_definitional(spec, p);
  } else if (method == "cycle") {
    const ra::Graph* g = spec.graph();
    bool standard = g != nullptr && spec.variant().index() == 0 &&
                    ra::classify_topology(*g).kind == ra::Topology::kCycle &&
                    g->has_edge(1, g->n());
    for (ra::Player v = 1; standard && v < spec.n(); ++v) standard = g->has_edge(v, v + 1);
    if (!standard)
      throw ra::DomainError("--method cycle needs nc1 on the standard cycle 1-2-...-n-1");
    if (!player || *player != 1) throw ra::DomainError("--method cycle reports player 1 only");
    return {{"game", std::string(spec.name())},
            {"method", method},
            {"player", 1},
            {"profile", ra::io::profile(p)},
            {"value", ra::io::number(ra::shapley_cycle_closed(p))}};
  } else {
    values = ra::shapley_closed_all(spec, p);
  }
  json report{{"game", std::string(spec.name())},
              {"method", method},
              {"profile", ra::io::profile(p)}};
  if (player) {
    spec.check_player(*player);
    report["player"] = *player;
    report["value"] = ra::io::number(values[*player]);
  } else {
    json out = json::array();
    for (ra::Player x = 1; x <= spec.n(); ++x) out.push_back(ra::io::number(values[x]));
    report["values"] = out;
    report["sum"] = ra::io::number(values.sum());
  }
  return report;
}

ra::SolveOptions solve_options(const ra::io::AttackRequest& request, const ra::OracleConfig& cfg) {
  ra::SolveOptions opt;
  opt.removal = request.mode == "removal";
  opt.large_d_cut = request.large_d_cut;
  opt.oracle = cfg;
  return opt;
}

json attack_report(const std::string& path) {
  const auto request = ra::io::load_attack_request(path);
  const ra::AttackPlan plan = ra::solve_attack(request.problem, solve_options(request, oracle_config("")));
  json report = ra::io::plan_to_json(plan);
  report["target"] = request.problem.target;
  report["budget"] = ra::io::number(request.problem.budget);
  report["mode"] = request.mode;
  if (request.pairwise_protect) report["pairwise_protect"] = *request.pairwise_protect;
  return report;
}

json oracle_check_report(const std::string& path, const std::string& config_path, bool& gap_exceeded) {
  const auto request = ra::io::load_attack_request(path);
  if (request.mode != "fractional")
    throw ra::DomainError("field request.mode: oracle-check supports fractional attacks only");
  const ra::OracleConfig cfg = oracle_config(config_path);
  const ra::AttackPlan plan = ra::solve_attack(request.problem, solve_options(request, cfg));
  const ra::OracleResult oracle = ra::fractional_oracle(request.problem, cfg);
  const double gap = plan.achieved - oracle.plan.achieved;
  gap_exceeded = std::abs(gap) > cfg.tolerance;
  return {{"solver", plan.solver},
          {"solver_value", ra::io::number(plan.achieved)},
          {"oracle_value", ra::io::number(oracle.plan.achieved)},
          {"gap", ra::io::number(gap)},
          {"tolerance", ra::io::number(cfg.tolerance)},
          {"within_tolerance", !gap_exceeded},
          {"oracle_stationary", oracle.stationary},
          {"oracle_grid_resolution", ra::io::number(oracle.grid_resolution)},
          {"oracle_profile", ra::io::profile(oracle.plan.profile)},
          {"solver_profile", ra::io::profile(plan.profile)}};
}

json reduce_bmc_report(const std::string& path) {
  const ra::BmcInstance bmc = ra::io::parse_bmc(ra::io::load_json_file(path));
  const ra::BmcReduction red = ra::bmc_reduce(bmc);
  const ra::BmcSolution exact = ra::bmc_solve_exact(bmc);
  const ra::RemovalDecision removal = ra::bmc_decide_by_removal(red);
  auto answer = [](bool yes) { return std::string(yes ? "YES" : "NO"); };
  return {{"instance", ra::io::game_to_json(ra::GameSpec::fo(red.instance))},
          {"cost_model", ra::io::cost_model_to_json(red.costs)},
          {"budget", ra::io::number(red.budget)},
          {"target", red.target},
          {"threshold", red.threshold},
          {"max_coverage", {{"chosen_sets", exact.chosen},
                            {"coverage", exact.coverage},
                            {"cost", exact.cost},
                            {"answer", answer(exact.yes)}}},
          {"removal_attack", {{"removed", ra::io::players(removal.plan.removed)},
                              {"decrease", ra::io::number(removal.decrease)},
                              {"cost", ra::io::number(removal.plan.total_cost)},
                              {"answer", answer(removal.yes)}}},
          {"answers_agree", exact.yes == removal.yes}};
}

json no_benefit_report(const std::string& game_path, int target, long trials,
                       const std::string& profile_text, std::uint64_t seed, bool exhaustive) {
  const ra::GameSpec spec = ra::io::load_game(game_path);
  const ra::ReliabilityProfile p = profile_or_ones(profile_text, spec.n());
  const ra::NoBenefitVerdict v = exhaustive
                                     ? ra::removal_no_benefit_exhaustive(spec, p, target)
                                     : ra::removal_no_benefit_check(spec, p, target, trials, seed);
  json report{{"game", std::string(spec.name())},
              {"target", target},
              {"checked", v.checked},
              {"passed", v.passed},
              {"exhaustive", exhaustive}};
  if (v.counterexample) {
    report["counterexample"] = {{"removed", ra::io::players(v.counterexample->removed)},
                                {"before", ra::io::number(v.counterexample->before)},
                                {"after", ra::io::number(v.counterexample->after)}};
  }
  return report;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shapley-value attacks on reliability-extended cooperative games"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Output out;
  app.add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));

  std::string game, profile, method = "closed", request, config, bmc;
  std::optional<int> player;
  int target = 0;
  long trials = 1000;
  std::uint64_t seed = 1;
  bool exhaustive = false;

  auto* shapley = app.add_subcommand("shapley", "Shapley values of a game");
  shapley->add_option("--game", game, "Game file")->required();
  shapley->add_option("--profile", profile, "Comma-separated reliabilities (default all 1)");
  shapley->add_option("--player", player, "Report a single player");
  shapley->add_option("--method", method, "closed, definitional or cycle")
      ->check(CLI::IsMember({"closed", "definitional", "cycle"}));

  auto* attack = app.add_subcommand("attack", "Solve an attack request");
  attack->add_option("request", request, "Attack request file")->required();

  auto* oracle = app.add_subcommand("oracle-check", "Compare a solver against the oracle");
  oracle->add_option("request", request, "Attack request file")->required();
  oracle->add_option("--config", config, "Oracle config file");

  auto* reduce = app.add_subcommand("reduce-bmc", "Reduce max-coverage to a removal attack");
  reduce->add_option("bmc", bmc, "Max-coverage instance file")->required();

  auto* no_benefit = app.add_subcommand("no-benefit", "Check that removals never lower Sh(target)");
  no_benefit->add_option("--game", game, "Game file")->required();
  no_benefit->add_option("--target", target, "Target player")->required();
  no_benefit->add_option("--trials", trials, "Random removal sets to try")
      ->check(CLI::NonNegativeNumber);
  no_benefit->add_option("--profile", profile, "Baseline reliabilities (default all 1)");
  no_benefit->add_option("--seed", seed, "Random seed");
  no_benefit->add_flag("--exhaustive", exhaustive, "Try every removal set");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    bool gap_exceeded = false;
    if (*shapley) out.emit(shapley_report(game, profile, player, method));
    if (*attack) out.emit(attack_report(request));
    if (*oracle) out.emit(oracle_check_report(request, config, gap_exceeded));
    if (*reduce) out.emit(reduce_bmc_report(bmc));
    if (*no_benefit) out.emit(no_benefit_report(game, target, trials, profile, seed, exhaustive));
    return gap_exceeded ? kExitGap : 0;
  } catch (const ra::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
