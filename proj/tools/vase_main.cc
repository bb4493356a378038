// Copyright 2026 The VasE Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: rank, matrix, diversity, consistency, eval and
// export-dot.

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vase/baselines.h"
#include "vase/error.h"
#include "vase/harness.h"
#include "vase/io.h"
#include "vase/methods.h"
#include "vase/profile.h"

namespace vase {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitSolver = 4;

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorKind::kData, "cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

struct InputOptions {
  std::string path;
  std::string format = "ballots";
  std::string weights;
};

struct LoadedInput {
  PreferenceProfile profile;
  std::optional<ScoreTable> table;
};

LoadedInput Load(const InputOptions& input) {
  LoadedInput loaded;
  const std::string text = ReadInput(input.path);
  std::vector<std::string> task_names;
  if (input.format == "ballots") {
    loaded.profile = ParseBallots(text);
  } else if (input.format == "scores") {
    loaded.table = ParseScoreTable(text);
    loaded.profile = BallotsFromScoreRows(*loaded.table);
    task_names = loaded.table->tasks;
  } else {
    auto games = ParseGameRecords(text);
    for (const auto& game : games) task_names.push_back(game.id);
    loaded.profile = ProfileFromGames(games);
  }
  if (!input.weights.empty()) {
    loaded.profile = ReplicateBallots(
        loaded.profile, ParseWeights(ReadInput(input.weights), task_names));
  }
  return loaded;
}

void AddInputOptions(CLI::App* command, InputOptions* input) {
  command->add_option("input", input->path, "Input file ('-' for stdin)")
      ->required();
  command->add_option("--input-format", input->format, "Input format")
      ->check(CLI::IsMember({"scores", "ballots", "games"}));
  command->add_option("--weights", input->weights,
                      "Per-task integer weights, lines '<task>,<factor>'");
}

struct RankOptions {
  InputOptions input;
  std::string method;
  std::optional<int> k;
  std::optional<int> num_winners;
  uint64_t seed = 0;
  bool json = false;
};

Report RankOne(const std::string& method, const LoadedInput& loaded,
               const RankOptions& options) {
  const TieBreakPolicy policy(options.seed);
  if (method == "nash_average") {
    if (!loaded.table) {
      Fail(ErrorKind::kUsage, "nash_average needs --input-format scores");
    }
    if (!loaded.table->IsComplete()) {
      Fail(ErrorKind::kData, "nash_average needs a complete score table");
    }
    const ScoreTable normalized = NormalizeScores(*loaded.table);
    bool changed = false;
    for (size_t a = 0; a < normalized.scores.size(); ++a) {
      for (size_t t = 0; t < normalized.scores[a].size(); ++t) {
        if (normalized.scores[a][t] != loaded.table->scores[a][t])
          changed = true;
      }
    }
    Report report =
        BuildNashReport(NashAverage(normalized, policy), changed, options.seed);
    if (!options.input.weights.empty()) {
      report.notes.push_back("task weights do not apply to nash_average");
    }
    return report;
  }
  MethodOptions method_options;
  method_options.approval_k = options.k;
  method_options.num_winners = options.num_winners;
  method_options.tie_break = policy;
  std::vector<std::pair<std::string, std::string>> params;
  if (method == "approval" && options.k)
    params.emplace_back("k", std::to_string(*options.k));
  if (method == "stv") {
    params.emplace_back(
        "num_winners",
        std::to_string(options.num_winners.value_or(
            DefaultStvWinners(loaded.profile.num_alternatives()))));
  }
  if (!options.input.weights.empty())
    params.emplace_back("weights", options.input.weights);
  return BuildReport(method, RunMethod(method, loaded.profile, method_options),
                     loaded.profile.alternatives(), params);
}

int RunRank(const RankOptions& options) {
  const LoadedInput loaded = Load(options.input);
  std::vector<std::string> methods;
  if (options.method == "all") {
    for (const auto& name : AllMethodNames()) {
      if (name == "approval" && !options.k) continue;
      if (name == "nash_average" && !loaded.table) continue;
      methods.push_back(name);
    }
    std::sort(methods.begin(), methods.end());
  } else {
    if (!IsKnownMethod(options.method)) {
      Fail(ErrorKind::kUsage, "unknown method '" + options.method + "'");
    }
    methods.push_back(options.method);
  }
  std::vector<std::future<Report>> pending;
  for (const auto& method : methods) {
    pending.push_back(std::async(std::launch::async, [&, method] {
      return RankOne(method, loaded, options);
    }));
  }
  std::vector<Report> reports;
  for (auto& future : pending) reports.push_back(future.get());

  if (options.json) {
    if (reports.size() == 1) {
      std::cout << FormatReportJson(reports[0]);
    } else {
      std::cout << "[\n";
      for (size_t i = 0; i < reports.size(); ++i) {
        std::string body = FormatReportJson(reports[i]);
        body.pop_back();
        std::cout << body << (i + 1 < reports.size() ? ",\n" : "\n");
      }
      std::cout << "]\n";
    }
  } else {
    for (size_t i = 0; i < reports.size(); ++i) {
      if (i > 0) std::cout << "\n";
      std::cout << FormatReportText(reports[i]);
    }
  }
  return kExitOk;
}

int RunMatrix(const InputOptions& input, const std::string& which) {
  const LoadedInput loaded = Load(input);
  const auto& labels = loaded.profile.alternatives();
  if (which == "counts" || which == "both") {
    if (which == "both") std::cout << "# N\n";
    std::cout << MatrixCsv(labels,
                           ComputePreferenceMatrix(loaded.profile).counts);
  }
  if (which == "margins" || which == "both") {
    if (which == "both") std::cout << "# M\n";
    std::cout << MatrixCsv(labels, ComputeMarginMatrix(loaded.profile).margins);
  }
  return kExitOk;
}

int RunDiversity(const InputOptions& input) {
  const LoadedInput loaded = Load(input);
  const VoteHistogram histogram = CountUniqueVotes(loaded.profile);
  std::cout << "distinct\t" << histogram.distinct << "\n";
  std::cout << "total\t" << loaded.profile.TotalWeight() << "\n";
  for (const auto& [ballot, count] : histogram.counts) {
    std::cout << "vote\t" << count << "\t"
              << loaded.profile.BallotToString(ballot) << "\n";
  }
  return kExitOk;
}

struct ConsistencyOptions {
  std::string method;
  std::string property = "all";
  int64_t trials = 1000;
  uint64_t seed = 0;
  int64_t stop_after = 0;
};

int RunConsistency(const ConsistencyOptions& options) {
  std::vector<std::string> methods;
  if (options.method == "all") {
    for (const auto& name : VotingMethodNames()) methods.push_back(name);
  } else {
    methods.push_back(options.method);
  }
  std::vector<Property> properties;
  if (options.property == "all" || options.property == "condorcet") {
    properties.push_back(Property::kCondorcet);
  }
  if (options.property == "all" || options.property == "clone") {
    properties.push_back(Property::kClone);
  }
  if (options.property == "all" || options.property == "population") {
    properties.push_back(Property::kPopulation);
  }
  for (const auto& method : methods) {
    for (Property property : properties) {
      const ConsistencyReport report = CheckConsistency(
          method, property, options.trials, options.seed, options.stop_after);
      std::cout << "consistency\t" << method << "\t" << PropertyName(property)
                << "\ttrials=" << report.trials
                << "\tviolations=" << report.violations << "\n";
      for (const auto& example : report.counterexamples) {
        std::cout << "# counterexample (" << method << ", "
                  << PropertyName(property) << ")\n"
                  << example;
      }
    }
  }
  return kExitOk;
}

struct EvalOptions {
  std::string path;
  std::string methods = "elo,approval2,approval3,plurality,borda,copeland,stv";
  int splits = 50;
  int train_size = 0;
  int test_size = 0;
  uint64_t seed = 0;
  int synthetic_games = 0;
  int synthetic_players = 60;
};

int RunEval(const EvalOptions& options) {
  std::vector<GameRecord> games;
  if (!options.path.empty()) {
    games = ParseGameRecords(ReadInput(options.path));
  } else if (options.synthetic_games > 0) {
    std::mt19937_64 rng(options.seed);
    std::normal_distribution<double> rating(0.0, 200.0);
    std::vector<double> pool(options.synthetic_players);
    for (double& r : pool) r = rating(rng);
    games = EloWorldGames(pool, options.synthetic_games, 7, options.seed + 1);
  } else {
    Fail(ErrorKind::kUsage, "eval needs a games file or --synthetic-games");
  }
  SplitSpec spec;
  spec.seed = options.seed;
  spec.replicates = options.splits;
  spec.test_size = options.test_size > 0
                       ? options.test_size
                       : std::max<int>(1, static_cast<int>(games.size()) / 10);
  spec.train_size = options.train_size > 0
                        ? options.train_size
                        : static_cast<int>(games.size()) - spec.test_size;
  std::vector<std::string> methods;
  std::stringstream list(options.methods);
  for (std::string name; std::getline(list, name, ',');) {
    if (!name.empty()) methods.push_back(name);
  }
  MethodOptions method_options;
  method_options.tie_break = TieBreakPolicy(options.seed);
  method_options.elo.max_iters = 5000;
  method_options.elo.grad_tol = 1e-6;
  const SplitEvaluation evaluation =
      EvaluateSplits(games, spec, methods, method_options);
  std::cout << "param\tgames\t" << games.size() << "\n"
            << "param\tsplits\t" << spec.replicates << "\n"
            << "param\ttrain_size\t" << spec.train_size << "\n"
            << "param\ttest_size\t" << spec.test_size << "\n"
            << "param\tseed\t" << spec.seed << "\n"
            << "dropped_participants\t" << evaluation.dropped_participants
            << "\n";
  for (const auto& summary : evaluation.methods) {
    std::cout << "error_per_game\t" << summary.method << "\t"
              << FormatScore(summary.mean) << "\t+-"
              << FormatScore(summary.ci95) << "\n";
  }
  return kExitOk;
}

int RunExportDot(const InputOptions& input, uint64_t seed) {
  const LoadedInput loaded = Load(input);
  const auto [ranking, graph] =
      RankedPairsRank(loaded.profile, TieBreakPolicy(seed));
  std::cout << ExportDot(graph);
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{
      "Rank agents by aggregating evaluation results with voting rules"};
  app.require_subcommand(1);

  RankOptions rank;
  auto* rank_cmd =
      app.add_subcommand("rank", "Rank alternatives with one method");
  AddInputOptions(rank_cmd, &rank.input);
  rank_cmd->add_option("--method", rank.method, "Method name or 'all'")
      ->required();
  rank_cmd->add_option("--k", rank.k, "Approval threshold");
  rank_cmd->add_option("--num-winners", rank.num_winners, "STV seats");
  rank_cmd->add_option("--seed", rank.seed, "Tie-break seed");
  rank_cmd->add_flag("--json", rank.json, "Emit JSON instead of text");

  InputOptions matrix_input;
  std::string which = "both";
  auto* matrix_cmd = app.add_subcommand("matrix", "Print N and M as CSV");
  AddInputOptions(matrix_cmd, &matrix_input);
  matrix_cmd->add_option("--which", which, "counts, margins or both")
      ->check(CLI::IsMember({"counts", "margins", "both"}));

  InputOptions diversity_input;
  auto* diversity_cmd = app.add_subcommand("diversity", "Count distinct votes");
  AddInputOptions(diversity_cmd, &diversity_input);

  ConsistencyOptions consistency;
  auto* consistency_cmd =
      app.add_subcommand("consistency", "Run the voting-axiom property suites");
  consistency_cmd->add_option("--method", consistency.method, "Method or 'all'")
      ->required();
  consistency_cmd->add_option("--property", consistency.property)
      ->check(CLI::IsMember({"condorcet", "clone", "population", "all"}));
  consistency_cmd->add_option("--trials", consistency.trials);
  consistency_cmd->add_option("--seed", consistency.seed);
  consistency_cmd->add_option("--stop-after", consistency.stop_after,
                              "Stop after this many violations");

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Train/test ranking error");
  eval_cmd->add_option("input", eval.path, "Game records CSV");
  std::string eval_format = "games";
  eval_cmd->add_option("--input-format", eval_format, "Only game records")
      ->check(CLI::IsMember({"games"}));
  eval_cmd->add_option("--method", eval.methods, "Comma-separated methods");
  eval_cmd->add_option("--splits", eval.splits)->check(CLI::PositiveNumber);
  eval_cmd->add_option("--train-size", eval.train_size);
  eval_cmd->add_option("--test-size", eval.test_size);
  eval_cmd->add_option("--seed", eval.seed);
  eval_cmd->add_option("--synthetic-games", eval.synthetic_games,
                       "Generate an elo-world corpus of this many games");
  eval_cmd->add_option("--synthetic-players", eval.synthetic_players);

  InputOptions dot_input;
  uint64_t dot_seed = 0;
  auto* dot_cmd = app.add_subcommand("export-dot", "Ranked-pairs graph as DOT");
  AddInputOptions(dot_cmd, &dot_input);
  dot_cmd->add_option("--seed", dot_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*rank_cmd) return RunRank(rank);
    if (*matrix_cmd) return RunMatrix(matrix_input, which);
    if (*diversity_cmd) return RunDiversity(diversity_input);
    if (*consistency_cmd) return RunConsistency(consistency);
    if (*eval_cmd) return RunEval(eval);
    if (*dot_cmd) return RunExportDot(dot_input, dot_seed);
  } catch (const VaseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::kUsage:
        return kExitUsage;
      case ErrorKind::kSolver:
        return kExitSolver;
      default:
        return kExitData;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace vase

int main(int argc, char** argv) { return vase::Main(argc, argv); }
