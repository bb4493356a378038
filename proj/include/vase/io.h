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

#ifndef VASE_IO_H_
#define VASE_IO_H_

// File formats: score tables (CSV), ballot files, game records (CSV), ranking
// reports and Graphviz export.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vase/condorcet_rules.h"
#include "vase/harness.h"
#include "vase/methods.h"
#include "vase/profile.h"
#include "vase/ranking.h"

namespace vase {

// First row: corner cell then task names. Each following row: agent name
// then one cell per task; an empty cell is a missing score.
ScoreTable ParseScoreTable(std::string_view text);

// One ballot per line: "<weight>: a > b = c > d". '#' starts a comment.
// Alternatives are registered in order of first appearance.
PreferenceProfile ParseBallots(std::string_view text);
std::string FormatBallots(const PreferenceProfile& profile);

// CSV with header "game_id,agent_id,score". Games keep first-appearance
// order.
std::vector<GameRecord> ParseGameRecords(std::string_view text);

// Lines "<task>,<factor>" where <task> is a task name from `task_names` or a
// 0-based ballot index.
std::map<int, int64_t> ParseWeights(std::string_view text,
                                    const std::vector<std::string>& task_names);

std::string MatrixCsv(const std::vector<std::string>& labels,
                      const CountMatrix& matrix);

// Printed with 6 significant digits.
std::string FormatScore(double score);

struct Report {
  std::string method;
  uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> notes;
  RankingResult ranking;
  // Method-specific lines, e.g. {"level", "0", "C", "1"}.
  std::vector<std::vector<std::string>> extras;
};

// `labels` is the alternative registry the method ran on.
Report BuildReport(
    const std::string& method, const MethodOutput& output,
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, std::string>>& params = {});
Report BuildNashReport(const NashAverageResult& result, bool normalized,
                       uint64_t seed);

// Tab-separated lines with a fixed key order:
//   method <m> / seed <s> / param <k> <v> / note <text> /
//   entry <rank> <alternative> <score> / extra <fields...>
std::string FormatReportText(const Report& report);
Report ParseReportText(std::string_view text);
// Same content as JSON; scores keep full precision.
std::string FormatReportJson(const Report& report);
Report ParseReportJson(std::string_view text);

std::string ExportDot(const RankedPairsGraph& graph);

}  // namespace vase

#endif  // VASE_IO_H_
