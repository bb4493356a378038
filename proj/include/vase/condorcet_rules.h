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

#ifndef VASE_CONDORCET_RULES_H_
#define VASE_CONDORCET_RULES_H_

// Deterministic Condorcet methods: Copeland, Kemeny-Young, Schulze and
// ranked pairs.

#include <cstdint>
#include <utility>
#include <vector>

#include "vase/profile.h"
#include "vase/ranking.h"

namespace vase {

inline constexpr int kDefaultKemenyCap = 10;

// wins + ties / 2 over head-to-head margins.
std::vector<double> CopelandScores(const MarginMatrix& margins);
RankingResult CopelandRank(const PreferenceProfile& profile,
                           const TieBreakPolicy& policy = TieBreakPolicy());

// Sum of N(order[i], order[j]) over i < j.
int64_t KemenyValue(const PreferenceMatrix& counts,
                    const std::vector<int>& order);

struct KemenyResult {
  RankingResult ranking;
  std::vector<int> order;
  int64_t value = 0;
};

// Exhaustive search over all m! orders. Among maximisers the one that is
// lexicographically first in tie-break priority wins. Score of an alternative
// is the sum of N(a, b) over every b ranked below it.
KemenyResult KemenyRank(const PreferenceProfile& profile,
                        const TieBreakPolicy& policy = TieBreakPolicy(),
                        int cap = kDefaultKemenyCap);

// P(a, b): widest path from a to b using edges with positive margin, where
// an edge's width is N along it.
struct StrongestPathMatrix {
  CountMatrix strengths;
};

StrongestPathMatrix ComputeStrongestPaths(const PreferenceMatrix& counts);

std::pair<RankingResult, StrongestPathMatrix> SchulzeRank(
    const PreferenceProfile& profile,
    const TieBreakPolicy& policy = TieBreakPolicy());

// Alternatives a with P(a, b) >= P(b, a) for every b.
std::vector<int> SchulzeWinners(const StrongestPathMatrix& paths);

struct RankedPairsEdge {
  int from;
  int to;
  int64_t weight;  // margin(from, to) > 0

  bool operator==(const RankedPairsEdge& other) const = default;
};

struct RankedPairsGraph {
  std::vector<std::string> nodes;
  std::vector<RankedPairsEdge> edges;     // In insertion order.
  std::vector<RankedPairsEdge> rejected;  // Pairs skipped to avoid a cycle.
};

std::pair<RankingResult, RankedPairsGraph> RankedPairsRank(
    const PreferenceProfile& profile,
    const TieBreakPolicy& policy = TieBreakPolicy());

// True if `edges` over `num_nodes` contain a directed cycle.
bool HasCycle(int num_nodes, const std::vector<RankedPairsEdge>& edges);

}  // namespace vase

#endif  // VASE_CONDORCET_RULES_H_
