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

#include "vase/profile.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "vase/error.h"

namespace vase {

int Ballot::Length() const {
  int length = 0;
  for (const auto& group : groups) length += static_cast<int>(group.size());
  return length;
}

PreferenceProfile::PreferenceProfile(
    const std::vector<std::string>& alternatives) {
  for (const auto& label : alternatives) AddAlternative(label);
}

int PreferenceProfile::AddAlternative(const std::string& label) {
  if (label.empty()) Fail(ErrorKind::kStructural, "empty alternative label");
  if (index_.count(label) > 0) {
    Fail(ErrorKind::kStructural, "duplicate alternative '" + label + "'");
  }
  const int index = num_alternatives();
  labels_.push_back(label);
  index_.emplace(label, index);
  return index;
}

void PreferenceProfile::AddBallot(Ballot ballot) {
  if (ballot.weight < 1) {
    Fail(ErrorKind::kStructural,
         "ballot weight must be >= 1, got " + std::to_string(ballot.weight));
  }
  if (ballot.groups.empty()) Fail(ErrorKind::kStructural, "empty ballot");
  std::vector<bool> seen(labels_.size(), false);
  for (const auto& group : ballot.groups) {
    if (group.empty())
      Fail(ErrorKind::kStructural, "empty tie group in ballot");
    for (int a : group) {
      if (a < 0 || a >= num_alternatives()) {
        Fail(
            ErrorKind::kStructural,
            "ballot references unknown alternative index " + std::to_string(a));
      }
      if (seen[a]) {
        Fail(ErrorKind::kStructural,
             "alternative '" + labels_[a] + "' appears twice in one ballot");
      }
      seen[a] = true;
    }
  }
  ballots_.push_back(std::move(ballot));
}

void PreferenceProfile::AddBallot(
    int64_t weight, const std::vector<std::vector<std::string>>& groups) {
  Ballot ballot;
  ballot.weight = weight;
  for (const auto& group : groups) {
    std::vector<int> indices;
    for (const auto& label : group) {
      auto index = IndexOf(label);
      if (!index) {
        Fail(ErrorKind::kStructural, "unknown alternative '" + label + "'");
      }
      indices.push_back(*index);
    }
    ballot.groups.push_back(std::move(indices));
  }
  AddBallot(std::move(ballot));
}

std::optional<int> PreferenceProfile::IndexOf(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int64_t PreferenceProfile::TotalWeight() const {
  int64_t total = 0;
  for (const auto& ballot : ballots_) total += ballot.weight;
  return total;
}

PreferenceProfile PreferenceProfile::Restrict(
    const std::vector<int>& keep) const {
  PreferenceProfile restricted;
  std::vector<int> remap(labels_.size(), -1);
  for (int a : keep) {
    remap.at(a) = restricted.AddAlternative(labels_.at(a));
  }
  for (const auto& ballot : ballots_) {
    Ballot reduced;
    reduced.weight = ballot.weight;
    for (const auto& group : ballot.groups) {
      std::vector<int> kept;
      for (int a : group) {
        if (remap[a] >= 0) kept.push_back(remap[a]);
      }
      if (!kept.empty()) reduced.groups.push_back(std::move(kept));
    }
    if (!reduced.groups.empty()) restricted.AddBallot(std::move(reduced));
  }
  return restricted;
}

std::string PreferenceProfile::BallotToString(const Ballot& ballot) const {
  std::string out;
  for (size_t g = 0; g < ballot.groups.size(); ++g) {
    if (g > 0) out += " > ";
    for (size_t i = 0; i < ballot.groups[g].size(); ++i) {
      if (i > 0) out += " = ";
      out += labels_.at(ballot.groups[g][i]);
    }
  }
  return out;
}

PreferenceMatrix ComputePreferenceMatrix(const PreferenceProfile& profile) {
  const int m = profile.num_alternatives();
  PreferenceMatrix result{CountMatrix::Zero(m, m)};
  for (const auto& ballot : profile.ballots()) {
    // Every alternative in a group beats everything in later groups.
    for (size_t g = 0; g < ballot.groups.size(); ++g) {
      for (size_t h = g + 1; h < ballot.groups.size(); ++h) {
        for (int x : ballot.groups[g]) {
          for (int y : ballot.groups[h]) result.counts(x, y) += ballot.weight;
        }
      }
    }
  }
  return result;
}

MarginMatrix MarginsFromCounts(const PreferenceMatrix& counts) {
  return MarginMatrix{counts.counts - counts.counts.transpose()};
}

MarginMatrix ComputeMarginMatrix(const PreferenceProfile& profile) {
  return MarginsFromCounts(ComputePreferenceMatrix(profile));
}

std::optional<CondorcetWinner> FindCondorcetWinner(
    const MarginMatrix& margins) {
  const int m = static_cast<int>(margins.margins.rows());
  std::optional<int> weak;
  for (int a = 0; a < m; ++a) {
    bool strong = true;
    bool nonnegative = true;
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      if (margins.margins(a, b) <= 0) strong = false;
      if (margins.margins(a, b) < 0) nonnegative = false;
    }
    if (strong) return CondorcetWinner{a, CondorcetStrength::kStrong};
    if (nonnegative && !weak) weak = a;
  }
  if (weak) return CondorcetWinner{*weak, CondorcetStrength::kWeak};
  return std::nullopt;
}

std::optional<CondorcetWinner> FindCondorcetWinner(
    const PreferenceProfile& profile) {
  if (profile.num_alternatives() == 0) return std::nullopt;
  return FindCondorcetWinner(ComputeMarginMatrix(profile));
}

bool ScoreTable::IsComplete() const {
  for (const auto& row : scores) {
    for (const auto& cell : row) {
      if (!cell) return false;
    }
  }
  return true;
}

PreferenceProfile BallotsFromScoreRows(const ScoreTable& table) {
  if (table.num_agents() < 1 || table.num_tasks() < 1) {
    Fail(ErrorKind::kData, "score table needs at least one agent and one task");
  }
  PreferenceProfile profile(table.agents);
  for (int t = 0; t < table.num_tasks(); ++t) {
    std::vector<std::pair<double, int>> present;
    for (int a = 0; a < table.num_agents(); ++a) {
      const auto& cell = table.scores.at(a).at(t);
      if (!cell) continue;
      if (!std::isfinite(*cell)) {
        Fail(ErrorKind::kData, "non-finite score for agent '" +
                                   table.agents[a] + "' on task '" +
                                   table.tasks[t] + "'");
      }
      present.emplace_back(*cell, a);
    }
    if (present.empty()) {
      Fail(ErrorKind::kData, "task '" + table.tasks[t] + "' has no scores");
    }
    std::stable_sort(
        present.begin(), present.end(),
        [](const auto& l, const auto& r) { return l.first > r.first; });
    Ballot ballot;
    for (size_t i = 0; i < present.size(); ++i) {
      if (i == 0 || present[i].first != present[i - 1].first) {
        ballot.groups.emplace_back();
      }
      ballot.groups.back().push_back(present[i].second);
    }
    profile.AddBallot(std::move(ballot));
  }
  return profile;
}

PreferenceProfile ReplicateBallots(const PreferenceProfile& profile,
                                   const std::map<int, int64_t>& factors) {
  for (const auto& [index, factor] : factors) {
    if (index < 0 || index >= profile.num_ballots()) {
      Fail(ErrorKind::kUsage,
           "weight index " + std::to_string(index) + " out of range");
    }
    if (factor < 1) {
      Fail(ErrorKind::kUsage,
           "weight factor must be positive, got " + std::to_string(factor));
    }
  }
  PreferenceProfile result(profile.alternatives());
  for (int i = 0; i < profile.num_ballots(); ++i) {
    Ballot ballot = profile.ballots()[i];
    auto it = factors.find(i);
    if (it != factors.end()) ballot.weight *= it->second;
    result.AddBallot(std::move(ballot));
  }
  return result;
}

}  // namespace vase
