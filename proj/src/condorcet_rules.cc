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

#include "vase/condorcet_rules.h"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "vase/error.h"

namespace vase {
namespace {

std::vector<int> RankOfPriority(const std::vector<int>& priority) {
  std::vector<int> rank_of(priority.size());
  for (size_t i = 0; i < priority.size(); ++i) rank_of[priority[i]] = i;
  return rank_of;
}

}  // namespace

std::vector<double> CopelandScores(const MarginMatrix& margins) {
  const int m = static_cast<int>(margins.margins.rows());
  std::vector<double> scores(m, 0.0);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      if (margins.margins(a, b) > 0) scores[a] += 1.0;
      if (margins.margins(a, b) == 0) scores[a] += 0.5;
    }
  }
  return scores;
}

RankingResult CopelandRank(const PreferenceProfile& profile,
                           const TieBreakPolicy& policy) {
  return RankByScore("copeland", profile.alternatives(),
                     CopelandScores(ComputeMarginMatrix(profile)), policy);
}

int64_t KemenyValue(const PreferenceMatrix& counts,
                    const std::vector<int>& order) {
  int64_t value = 0;
  for (size_t i = 0; i < order.size(); ++i) {
    for (size_t j = i + 1; j < order.size(); ++j) {
      value += counts.counts(order[i], order[j]);
    }
  }
  return value;
}

KemenyResult KemenyRank(const PreferenceProfile& profile,
                        const TieBreakPolicy& policy, int cap) {
  const int m = profile.num_alternatives();
  if (m > cap) {
    Fail(ErrorKind::kCapacity,
         "Kemeny-Young enumerates m! orders and is capped at " +
             std::to_string(cap) + " alternatives; profile has " +
             std::to_string(m));
  }
  const PreferenceMatrix counts = ComputePreferenceMatrix(profile);
  const std::vector<int> priority = policy.PriorityOrder(m);

  // Permuting priority ranks in lexicographic order means the first strict
  // maximum found is the lexicographically smallest maximiser.
  std::vector<int> ranks(m);
  std::iota(ranks.begin(), ranks.end(), 0);
  std::vector<int> order(m);
  std::vector<int> best_order;
  int64_t best_value = -1;
  do {
    for (int i = 0; i < m; ++i) order[i] = priority[ranks[i]];
    const int64_t value = KemenyValue(counts, order);
    if (value > best_value) {
      best_value = value;
      best_order = order;
    }
  } while (std::next_permutation(ranks.begin(), ranks.end()));
  if (m == 0) best_value = 0;

  std::vector<double> scores(m, 0.0);
  for (int i = 0; i < m; ++i) {
    int64_t score = 0;
    for (int j = i + 1; j < m; ++j) {
      score += counts.counts(best_order[i], best_order[j]);
    }
    scores[best_order[i]] = static_cast<double>(score);
  }
  KemenyResult result;
  result.ranking =
      RankByOrder("kemeny", profile.alternatives(), best_order, scores, policy);
  result.order = std::move(best_order);
  result.value = best_value;
  return result;
}

StrongestPathMatrix ComputeStrongestPaths(const PreferenceMatrix& counts) {
  const int m = static_cast<int>(counts.counts.rows());
  const CountMatrix& n = counts.counts;
  CountMatrix p = CountMatrix::Zero(m, m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a != b && n(a, b) > n(b, a)) p(a, b) = n(a, b);
    }
  }
  for (int k = 0; k < m; ++k) {
    for (int i = 0; i < m; ++i) {
      if (i == k) continue;
      for (int j = 0; j < m; ++j) {
        if (j == i || j == k) continue;
        p(i, j) = std::max(p(i, j), std::min(p(i, k), p(k, j)));
      }
    }
  }
  return StrongestPathMatrix{std::move(p)};
}

std::vector<int> SchulzeWinners(const StrongestPathMatrix& paths) {
  const int m = static_cast<int>(paths.strengths.rows());
  std::vector<int> winners;
  for (int a = 0; a < m; ++a) {
    bool unbeaten = true;
    for (int b = 0; b < m && unbeaten; ++b) {
      if (paths.strengths(b, a) > paths.strengths(a, b)) unbeaten = false;
    }
    if (unbeaten) winners.push_back(a);
  }
  return winners;
}

std::pair<RankingResult, StrongestPathMatrix> SchulzeRank(
    const PreferenceProfile& profile, const TieBreakPolicy& policy) {
  const int m = profile.num_alternatives();
  const PreferenceMatrix counts = ComputePreferenceMatrix(profile);
  StrongestPathMatrix paths = ComputeStrongestPaths(counts);
  const CountMatrix& p = paths.strengths;

  // The Schulze relation is a strict partial order; extend it to a total
  // order by repeatedly taking the highest-priority unbeaten alternative.
  const std::vector<int> priority = policy.PriorityOrder(m);
  std::vector<bool> placed(m, false);
  std::vector<int> order;
  while (static_cast<int>(order.size()) < m) {
    for (int a : priority) {
      if (placed[a]) continue;
      bool unbeaten = true;
      for (int b = 0; b < m && unbeaten; ++b) {
        if (!placed[b] && b != a && p(b, a) > p(a, b)) unbeaten = false;
      }
      if (unbeaten) {
        placed[a] = true;
        order.push_back(a);
        break;
      }
    }
  }

  std::vector<double> scores(m, 0.0);
  for (int i = 0; i < m; ++i) {
    int64_t score = 0;
    for (int j = i + 1; j < m; ++j) score += counts.counts(order[i], order[j]);
    scores[order[i]] = static_cast<double>(score);
  }
  return {RankByOrder("schulze", profile.alternatives(), order, scores, policy),
          std::move(paths)};
}

bool HasCycle(int num_nodes, const std::vector<RankedPairsEdge>& edges) {
  std::vector<int> indegree(num_nodes, 0);
  std::vector<std::vector<int>> out(num_nodes);
  for (const auto& e : edges) {
    out[e.from].push_back(e.to);
    ++indegree[e.to];
  }
  std::vector<int> ready;
  for (int v = 0; v < num_nodes; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  int visited = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++visited;
    for (int w : out[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return visited != num_nodes;
}

namespace {

// Nodes reachable from `start` along edges whose endpoints are both active.
std::vector<bool> Reachable(int start, const std::vector<std::vector<int>>& out,
                            const std::vector<bool>& active) {
  std::vector<bool> seen(out.size(), false);
  std::vector<int> stack = {start};
  seen[start] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : out[v]) {
      if (active[w] && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

std::pair<RankingResult, RankedPairsGraph> RankedPairsRank(
    const PreferenceProfile& profile, const TieBreakPolicy& policy) {
  const int m = profile.num_alternatives();
  const MarginMatrix margins = ComputeMarginMatrix(profile);
  const std::vector<int> rank_of = RankOfPriority(policy.PriorityOrder(m));

  std::vector<RankedPairsEdge> pairs;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (margins.margins(a, b) > 0)
        pairs.push_back({a, b, margins.margins(a, b)});
    }
  }
  std::sort(
      pairs.begin(), pairs.end(),
      [&](const RankedPairsEdge& l, const RankedPairsEdge& r) {
        return std::make_tuple(-l.weight, rank_of[l.from], -rank_of[l.to]) <
               std::make_tuple(-r.weight, rank_of[r.from], -rank_of[r.to]);
      });

  RankedPairsGraph graph;
  graph.nodes = profile.alternatives();
  std::vector<std::vector<int>> out(m);
  const std::vector<bool> all_active(m, true);
  for (const auto& pair : pairs) {
    // Adding from -> to closes a cycle iff `from` is reachable from `to`.
    if (Reachable(pair.to, out, all_active)[pair.from]) {
      graph.rejected.push_back(pair);
      continue;
    }
    graph.edges.push_back(pair);
    out[pair.from].push_back(pair.to);
  }

  std::vector<std::vector<int64_t>> weight(m, std::vector<int64_t>(m, 0));
  for (const auto& e : graph.edges) weight[e.from][e.to] = e.weight;

  std::vector<bool> active(m, true);
  std::vector<int> order;
  std::vector<double> scores(m, 0.0);
  std::vector<int> by_priority(m);
  for (int a = 0; a < m; ++a) by_priority[rank_of[a]] = a;
  for (int step = 0; step < m; ++step) {
    int source = -1;
    for (int a : by_priority) {
      if (!active[a]) continue;
      bool has_incoming = false;
      for (const auto& e : graph.edges) {
        if (e.to == a && active[e.from]) {
          has_incoming = true;
          break;
        }
      }
      if (!has_incoming) {
        source = a;
        break;
      }
    }
    const std::vector<bool> reach = Reachable(source, out, active);
    int64_t score = 0;
    for (const auto& e : graph.edges) {
      if (reach[e.from] && active[e.to]) score += e.weight;
    }
    scores[source] = static_cast<double>(score);
    order.push_back(source);
    active[source] = false;
  }
  return {RankByOrder("ranked_pairs", profile.alternatives(), order, scores,
                      policy),
          std::move(graph)};
}

}  // namespace vase
