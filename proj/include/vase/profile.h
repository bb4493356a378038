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

#ifndef VASE_PROFILE_H_
#define VASE_PROFILE_H_

// Preference profiles: weighted weak-order ballots over a registry of
// alternatives, plus the pairwise count and margin matrices derived from them.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "Eigen/Core"

namespace vase {

using CountMatrix = Eigen::Matrix<int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// One voter's weak order. groups[0] is strictly preferred to groups[1], and
// so on; alternatives inside one group are tied. Alternatives are referred to
// by their index in the owning profile's registry.
struct Ballot {
  int64_t weight = 1;
  std::vector<std::vector<int>> groups;

  // Number of alternatives the ballot ranks.
  int Length() const;
  bool operator==(const Ballot& other) const = default;
};

class PreferenceProfile {
 public:
  PreferenceProfile() = default;
  explicit PreferenceProfile(const std::vector<std::string>& alternatives);

  // Appends a new alternative and returns its index. Labels must be unique
  // and non-empty.
  int AddAlternative(const std::string& label);

  // Validates and appends a ballot given by registry indices.
  void AddBallot(Ballot ballot);
  // Convenience overload taking labels; every label must be registered.
  void AddBallot(int64_t weight,
                 const std::vector<std::vector<std::string>>& groups);

  int num_alternatives() const { return static_cast<int>(labels_.size()); }
  int num_ballots() const { return static_cast<int>(ballots_.size()); }
  const std::vector<std::string>& alternatives() const { return labels_; }
  const std::string& label(int index) const { return labels_.at(index); }
  const std::vector<Ballot>& ballots() const { return ballots_; }
  std::optional<int> IndexOf(const std::string& label) const;
  int64_t TotalWeight() const;

  // Returns a copy restricted to `keep` (registry indices, in the order the
  // new registry should use). Removed alternatives are deleted from every
  // ballot; ballots left empty are dropped.
  PreferenceProfile Restrict(const std::vector<int>& keep) const;

  // Renders one ballot as "A > B = C".
  std::string BallotToString(const Ballot& ballot) const;

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  std::vector<Ballot> ballots_;
};

// N(x, y): total weight of ballots that rank x strictly above y.
struct PreferenceMatrix {
  CountMatrix counts;
};

// M(x, y) = N(x, y) - N(y, x).
struct MarginMatrix {
  CountMatrix margins;
};

PreferenceMatrix ComputePreferenceMatrix(const PreferenceProfile& profile);
MarginMatrix ComputeMarginMatrix(const PreferenceProfile& profile);
MarginMatrix MarginsFromCounts(const PreferenceMatrix& counts);

enum class CondorcetStrength { kWeak, kStrong };

struct CondorcetWinner {
  int alternative;
  CondorcetStrength strength;
};

// Strong winner if some alternative has a positive margin against every
// other one; otherwise the first (registry order) weak winner, if any.
std::optional<CondorcetWinner> FindCondorcetWinner(
    const PreferenceProfile& profile);
std::optional<CondorcetWinner> FindCondorcetWinner(const MarginMatrix& margins);

// Agents x tasks matrix of raw scores; a missing entry means the agent was
// not evaluated on that task.
struct ScoreTable {
  std::vector<std::string> agents;
  std::vector<std::string> tasks;
  std::vector<std::vector<std::optional<double>>> scores;  // [agent][task]

  int num_agents() const { return static_cast<int>(agents.size()); }
  int num_tasks() const { return static_cast<int>(tasks.size()); }
  bool IsComplete() const;
};

// One unit-weight ballot per task, agents sorted by descending score. Exactly
// equal scores share a tie group; missing agents are left off the ballot.
PreferenceProfile BallotsFromScoreRows(const ScoreTable& table);

// Multiplies the weight of ballot `index` by `factor` for every entry.
PreferenceProfile ReplicateBallots(const PreferenceProfile& profile,
                                   const std::map<int, int64_t>& factors);

}  // namespace vase

#endif  // VASE_PROFILE_H_
