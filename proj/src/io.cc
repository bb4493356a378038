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

#include "vase/io.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "json.hpp"
#include "vase/error.h"

namespace vase {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> Lines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  for (auto& line : lines) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  }
  return lines;
}

// Splits one CSV record; double quotes protect commas and "" escapes a quote.
std::vector<std::string> SplitCsv(std::string_view line, int line_number) {
  std::vector<std::string> cells(1);
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cells.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cells.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.emplace_back();
    } else {
      cells.back() += c;
    }
  }
  if (quoted) {
    Fail(ErrorKind::kData,
         "line " + std::to_string(line_number) + ": unterminated quote");
  }
  for (auto& cell : cells) cell = std::string(Trim(cell));
  return cells;
}

bool ParseDouble(std::string_view text, double* value) {
  text = Trim(text);
  if (text.empty()) return false;
  const std::string owned(text);
  char* end = nullptr;
  *value = std::strtod(owned.c_str(), &end);
  return end == owned.c_str() + owned.size();
}

bool ParseInt(std::string_view text, int64_t* value) {
  text = Trim(text);
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), *value);
  return ec == std::errc() && ptr == text.data() + text.size() && !text.empty();
}

bool IsBlankOrComment(std::string_view line) {
  line = Trim(line);
  return line.empty() || line.front() == '#';
}

std::string At(int line) { return "line " + std::to_string(line) + ": "; }

}  // namespace

ScoreTable ParseScoreTable(std::string_view text) {
  ScoreTable table;
  bool have_header = false;
  std::set<std::string> agents;
  const auto lines = Lines(text);
  for (size_t l = 0; l < lines.size(); ++l) {
    const int line_number = static_cast<int>(l) + 1;
    if (Trim(lines[l]).empty()) continue;
    auto cells = SplitCsv(lines[l], line_number);
    if (!have_header) {
      have_header = true;
      std::set<std::string> seen;
      for (size_t c = 1; c < cells.size(); ++c) {
        if (cells[c].empty() || !seen.insert(cells[c]).second) {
          Fail(ErrorKind::kData, At(line_number) + "column " +
                                     std::to_string(c + 1) +
                                     ": empty or duplicate task name");
        }
        table.tasks.push_back(cells[c]);
      }
      continue;
    }
    if (cells.size() != table.tasks.size() + 1) {
      Fail(ErrorKind::kData, At(line_number) + "expected " +
                                 std::to_string(table.tasks.size() + 1) +
                                 " cells, found " +
                                 std::to_string(cells.size()));
    }
    if (cells[0].empty() || !agents.insert(cells[0]).second) {
      Fail(ErrorKind::kData,
           At(line_number) + "column 1: empty or duplicate agent name");
    }
    table.agents.push_back(cells[0]);
    std::vector<std::optional<double>> row;
    for (size_t c = 1; c < cells.size(); ++c) {
      if (cells[c].empty()) {
        row.emplace_back();
        continue;
      }
      double value = 0.0;
      if (!ParseDouble(cells[c], &value) || !std::isfinite(value)) {
        Fail(ErrorKind::kData, At(line_number) + "column " +
                                   std::to_string(c + 1) + ": bad score '" +
                                   cells[c] + "'");
      }
      row.emplace_back(value);
    }
    table.scores.push_back(std::move(row));
  }
  if (table.agents.empty() || table.tasks.empty()) {
    Fail(ErrorKind::kData,
         "score table needs a header, one task and one agent");
  }
  return table;
}

PreferenceProfile ParseBallots(std::string_view text) {
  PreferenceProfile profile;
  const auto lines = Lines(text);
  for (size_t l = 0; l < lines.size(); ++l) {
    const int line_number = static_cast<int>(l) + 1;
    std::string_view line = lines[l];
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;

    int64_t weight = 1;
    if (const auto colon = line.find(':'); colon != std::string_view::npos) {
      if (!ParseInt(line.substr(0, colon), &weight) || weight < 1) {
        Fail(ErrorKind::kData, At(line_number) + "bad ballot weight");
      }
      line = line.substr(colon + 1);
    }
    std::vector<std::vector<std::string>> groups(1);
    std::string current;
    auto flush = [&](bool new_group) {
      const std::string label(Trim(current));
      if (label.empty()) {
        Fail(ErrorKind::kData, At(line_number) + "missing alternative");
      }
      groups.back().push_back(label);
      current.clear();
      if (new_group) groups.emplace_back();
    };
    for (char c : line) {
      if (c == '>') {
        flush(true);
      } else if (c == '=') {
        flush(false);
      } else {
        current += c;
      }
    }
    flush(false);
    for (const auto& group : groups) {
      for (const auto& label : group) {
        if (!profile.IndexOf(label)) profile.AddAlternative(label);
      }
    }
    try {
      profile.AddBallot(weight, groups);
    } catch (const VaseError& e) {
      Fail(ErrorKind::kData, At(line_number) + e.what());
    }
  }
  if (profile.ballots().empty()) Fail(ErrorKind::kData, "no ballots");
  return profile;
}

std::string FormatBallots(const PreferenceProfile& profile) {
  std::string out;
  for (const auto& ballot : profile.ballots()) {
    out += std::to_string(ballot.weight) + ": " +
           profile.BallotToString(ballot) + "\n";
  }
  return out;
}

std::vector<GameRecord> ParseGameRecords(std::string_view text) {
  std::vector<GameRecord> games;
  std::map<std::string, size_t> game_index;
  std::set<std::pair<std::string, std::string>> seen;
  bool have_header = false;
  const auto lines = Lines(text);
  for (size_t l = 0; l < lines.size(); ++l) {
    const int line_number = static_cast<int>(l) + 1;
    if (IsBlankOrComment(lines[l])) continue;
    const auto cells = SplitCsv(lines[l], line_number);
    if (!have_header) {
      have_header = true;
      if (cells != std::vector<std::string>{"game_id", "agent_id", "score"}) {
        Fail(ErrorKind::kData,
             At(line_number) + "expected header game_id,agent_id,score");
      }
      continue;
    }
    if (cells.size() != 3) {
      Fail(ErrorKind::kData, At(line_number) + "expected 3 cells");
    }
    double score = 0.0;
    if (!ParseDouble(cells[2], &score) || !std::isfinite(score)) {
      Fail(ErrorKind::kData, At(line_number) + "bad score '" + cells[2] + "'");
    }
    if (cells[0].empty() || cells[1].empty()) {
      Fail(ErrorKind::kData, At(line_number) + "empty game or agent id");
    }
    if (!seen.emplace(cells[0], cells[1]).second) {
      Fail(ErrorKind::kData, At(line_number) + "agent '" + cells[1] +
                                 "' repeated in game '" + cells[0] + "'");
    }
    auto [it, inserted] = game_index.emplace(cells[0], games.size());
    if (inserted) games.push_back(GameRecord{cells[0], {}});
    games[it->second].participants.emplace_back(cells[1], score);
  }
  if (games.empty()) Fail(ErrorKind::kData, "no game records");
  return games;
}

std::map<int, int64_t> ParseWeights(
    std::string_view text, const std::vector<std::string>& task_names) {
  std::map<int, int64_t> weights;
  const auto lines = Lines(text);
  for (size_t l = 0; l < lines.size(); ++l) {
    const int line_number = static_cast<int>(l) + 1;
    if (IsBlankOrComment(lines[l])) continue;
    const auto cells = SplitCsv(lines[l], line_number);
    if (cells.size() != 2) {
      Fail(ErrorKind::kData, At(line_number) + "expected <task>,<factor>");
    }
    int index = -1;
    for (size_t t = 0; t < task_names.size(); ++t) {
      if (task_names[t] == cells[0]) index = static_cast<int>(t);
    }
    int64_t parsed = 0;
    if (index < 0 && ParseInt(cells[0], &parsed))
      index = static_cast<int>(parsed);
    if (index < 0) {
      Fail(ErrorKind::kData,
           At(line_number) + "unknown task '" + cells[0] + "'");
    }
    int64_t factor = 0;
    if (!ParseInt(cells[1], &factor)) {
      Fail(ErrorKind::kData, At(line_number) + "bad factor '" + cells[1] + "'");
    }
    if (!weights.emplace(index, factor).second) {
      Fail(ErrorKind::kData, At(line_number) + "task listed twice");
    }
  }
  return weights;
}

std::string MatrixCsv(const std::vector<std::string>& labels,
                      const CountMatrix& matrix) {
  std::string out;
  for (const auto& label : labels) out += "," + label;
  out += "\n";
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    out += labels[i];
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      out += "," + std::to_string(matrix(i, j));
    }
    out += "\n";
  }
  return out;
}

std::string FormatScore(double score) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6g", score);
  std::string out(buffer);
  if (out == "-0") out = "0";
  return out;
}

Report BuildReport(
    const std::string& method, const MethodOutput& output,
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, std::string>>& params) {
  Report report;
  report.method = method;
  report.seed = output.ranking.tiebreak_seed;
  report.params = params;
  report.ranking = output.ranking;
  auto& extras = report.extras;
  if (output.kemeny_value) {
    extras.push_back({"kemeny_value", std::to_string(*output.kemeny_value)});
  }
  if (output.stv) {
    for (size_t r = 0; r < output.stv->rounds.size(); ++r) {
      const auto& round = output.stv->rounds[r];
      std::vector<std::string> line = {
          "stv_round", std::to_string(r + 1), std::to_string(round.quota),
          round.event == StvEvent::kElected ? "elected" : "eliminated",
          labels[round.subject]};
      for (size_t a = 0; a < round.tallies.size(); ++a) {
        if (round.tallies[a] >= 0) {
          line.push_back(labels[a] + "=" + std::to_string(round.tallies[a]));
        }
      }
      extras.push_back(std::move(line));
    }
  }
  if (output.ranked_pairs) {
    const auto& graph = *output.ranked_pairs;
    for (const auto& edge : graph.edges) {
      extras.push_back({"edge", graph.nodes[edge.from], graph.nodes[edge.to],
                        std::to_string(edge.weight)});
    }
    for (const auto& edge : graph.rejected) {
      extras.push_back({"rejected", graph.nodes[edge.from],
                        graph.nodes[edge.to], std::to_string(edge.weight)});
    }
  }
  if (output.schulze) {
    const auto& p = output.schulze->strengths;
    for (Eigen::Index a = 0; a < p.rows(); ++a) {
      for (Eigen::Index b = 0; b < p.cols(); ++b) {
        if (a != b) {
          extras.push_back({"strongest_path", labels[a], labels[b],
                            std::to_string(p(a, b))});
        }
      }
    }
  }
  if (output.iml) {
    for (size_t t = 0; t < output.iml->levels.size(); ++t) {
      const auto& level = output.iml->levels[t];
      for (size_t i = 0; i < level.winners.size(); ++i) {
        extras.push_back({"level", std::to_string(t), labels[level.winners[i]],
                          FormatScore(level.lottery[i])});
      }
    }
  }
  if (output.lottery) {
    for (size_t i = 0; i < output.lottery->alternatives.size(); ++i) {
      extras.push_back({"lottery", output.lottery->alternatives[i],
                        FormatScore(output.lottery->probabilities[i])});
    }
  }
  if (output.elo) {
    extras.push_back({"elo_k_factor", FormatScore(output.elo->k_factor)});
    extras.push_back({"elo_iterations", std::to_string(output.elo->iterations),
                      output.elo->converged ? "converged" : "not_converged"});
    if (!output.elo->converged) {
      report.notes.push_back("elo fit stopped before convergence");
    }
  }
  return report;
}

Report BuildNashReport(const NashAverageResult& result, bool normalized,
                       uint64_t seed) {
  Report report;
  report.method = "nash_average";
  report.seed = seed;
  report.ranking = result.ranking;
  if (normalized) {
    report.notes.push_back("scores min-max normalized per task before solving");
  }
  if (!result.max_entropy_converged) {
    report.notes.push_back(
        "maximum-entropy search stalled; LP vertex reported");
  }
  report.extras.push_back({"game_value", FormatScore(result.game_value)});
  const auto& tasks = result.task_distribution;
  for (size_t t = 0; t < tasks.alternatives.size(); ++t) {
    report.extras.push_back({"task_weight", tasks.alternatives[t],
                             FormatScore(tasks.probabilities[t])});
  }
  const auto& agents = result.agent_distribution;
  for (size_t a = 0; a < agents.alternatives.size(); ++a) {
    report.extras.push_back({"agent_weight", agents.alternatives[a],
                             FormatScore(agents.probabilities[a])});
  }
  return report;
}

namespace {

void CheckField(const std::string& field) {
  if (field.find_first_of("\t\n\r") != std::string::npos) {
    Fail(ErrorKind::kData,
         "report field contains a tab or newline: '" + field + "'");
  }
}

std::string JoinTabs(const std::vector<std::string>& fields) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    CheckField(fields[i]);
    if (i > 0) out += '\t';
    out += fields[i];
  }
  return out + "\n";
}

std::vector<std::string> SplitTabs(std::string_view line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    const size_t tab = line.find('\t', start);
    fields.emplace_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

}  // namespace

std::string FormatReportText(const Report& report) {
  std::string out = JoinTabs({"method", report.method});
  out += JoinTabs({"seed", std::to_string(report.seed)});
  for (const auto& [key, value] : report.params)
    out += JoinTabs({"param", key, value});
  for (const auto& note : report.notes) out += JoinTabs({"note", note});
  for (const auto& entry : report.ranking.entries) {
    out += JoinTabs({"entry", std::to_string(entry.rank), entry.alternative,
                     FormatScore(entry.score)});
  }
  for (const auto& extra : report.extras) {
    std::vector<std::string> fields = {"extra"};
    fields.insert(fields.end(), extra.begin(), extra.end());
    out += JoinTabs(fields);
  }
  return out;
}

Report ParseReportText(std::string_view text) {
  Report report;
  const auto lines = Lines(text);
  for (size_t l = 0; l < lines.size(); ++l) {
    const int line_number = static_cast<int>(l) + 1;
    if (lines[l].empty()) continue;
    const auto fields = SplitTabs(lines[l]);
    const std::string& key = fields[0];
    auto expect = [&](size_t n) {
      if (fields.size() != n)
        Fail(ErrorKind::kData, At(line_number) + "bad '" + key + "' line");
    };
    if (key == "method") {
      expect(2);
      report.method = fields[1];
    } else if (key == "seed") {
      expect(2);
      int64_t seed = 0;
      if (!ParseInt(fields[1], &seed))
        Fail(ErrorKind::kData, At(line_number) + "bad seed");
      report.seed = static_cast<uint64_t>(seed);
    } else if (key == "param") {
      expect(3);
      report.params.emplace_back(fields[1], fields[2]);
    } else if (key == "note") {
      expect(2);
      report.notes.push_back(fields[1]);
    } else if (key == "entry") {
      expect(4);
      RankingEntry entry;
      int64_t rank = 0;
      if (!ParseInt(fields[1], &rank) ||
          !ParseDouble(fields[3], &entry.score)) {
        Fail(ErrorKind::kData, At(line_number) + "bad entry");
      }
      entry.rank = static_cast<int>(rank);
      entry.alternative = fields[2];
      report.ranking.entries.push_back(std::move(entry));
    } else if (key == "extra") {
      report.extras.emplace_back(fields.begin() + 1, fields.end());
    } else {
      Fail(ErrorKind::kData, At(line_number) + "unknown key '" + key + "'");
    }
  }
  report.ranking.method = report.method;
  report.ranking.tiebreak_seed = report.seed;
  return report;
}

std::string FormatReportJson(const Report& report) {
  nlohmann::ordered_json json;
  json["method"] = report.method;
  json["seed"] = report.seed;
  json["params"] = nlohmann::ordered_json::array();
  for (const auto& [key, value] : report.params) {
    json["params"].push_back({key, value});
  }
  json["notes"] = report.notes;
  json["ranking"] = nlohmann::ordered_json::array();
  for (const auto& entry : report.ranking.entries) {
    nlohmann::ordered_json item;
    item["rank"] = entry.rank;
    item["alternative"] = entry.alternative;
    item["score"] = entry.score;
    json["ranking"].push_back(std::move(item));
  }
  json["extras"] = report.extras;
  return json.dump(2) + "\n";
}

Report ParseReportJson(std::string_view text) {
  Report report;
  try {
    const auto json = nlohmann::json::parse(text);
    report.method = json.at("method").get<std::string>();
    report.seed = json.at("seed").get<uint64_t>();
    for (const auto& param : json.at("params")) {
      report.params.emplace_back(param.at(0).get<std::string>(),
                                 param.at(1).get<std::string>());
    }
    report.notes = json.at("notes").get<std::vector<std::string>>();
    for (const auto& item : json.at("ranking")) {
      report.ranking.entries.push_back(RankingEntry{
          item.at("rank").get<int>(), item.at("alternative").get<std::string>(),
          item.at("score").get<double>()});
    }
    report.extras =
        json.at("extras").get<std::vector<std::vector<std::string>>>();
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorKind::kData, std::string("malformed report: ") + e.what());
  }
  report.ranking.method = report.method;
  report.ranking.tiebreak_seed = report.seed;
  return report;
}

namespace {

std::string Quote(const std::string& label) {
  std::string out = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string ExportDot(const RankedPairsGraph& graph) {
  std::string out = "digraph ranked_pairs {\n";
  for (const auto& node : graph.nodes) out += "  " + Quote(node) + ";\n";
  for (const auto& edge : graph.edges) {
    out += "  " + Quote(graph.nodes[edge.from]) + " -> " +
           Quote(graph.nodes[edge.to]) + " [label=\"" +
           std::to_string(edge.weight) + "\"];\n";
  }
  return out + "}\n";
}

}  // namespace vase
