#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "edgesim/graph.hpp"
#include "edgesim/similarity.hpp"

namespace edgesim {

enum class SeedOrder {
  DegreeDesc,  ///< seeds by descending degree
  InfoDesc,    ///< seeds by descending max incident (combined) score
};

/// Parameters of the seed-expansion detector. A missing threshold resolves
/// to the median strictly-positive edge score.
struct DetectorParams {
  std::optional<double> threshold;  // nullopt = auto
  std::size_t min_community_size = 1;
  SeedOrder seed_order = SeedOrder::DegreeDesc;
};

/// Median of the strictly positive scores (lower median for even counts);
/// 1.0 when every score is zero.
inline double resolve_auto_threshold(const EdgeScores& scores) {
  std::vector<double> positive;
  for (double v : scores.values())
    if (v > 0.0) positive.push_back(v);
  if (positive.empty()) return 1.0;
  std::sort(positive.begin(), positive.end());
  return positive[(positive.size() - 1) / 2];
}

namespace detail {

// Repeatedly merges the lowest-indexed undersized community into the
// neighboring community it shares the most edges with (ties to the lower
// index). Undersized communities with no external edges are left alone.
inline void merge_small_communities(const Graph& g, std::vector<std::uint32_t>& assignment,
                                    std::uint32_t community_count, std::size_t min_size) {
  std::vector<bool> frozen(community_count, false);
  for (;;) {
    std::vector<std::size_t> size(community_count, 0);
    for (auto c : assignment) ++size[c];
    std::uint32_t victim = community_count;
    for (std::uint32_t c = 0; c < community_count; ++c) {
      if (size[c] > 0 && size[c] < min_size && !frozen[c]) {
        victim = c;
        break;
      }
    }
    if (victim == community_count) return;
    std::vector<std::size_t> shared(community_count, 0);
    for (auto [u, v] : g.edges()) {
      std::uint32_t cu = assignment[u], cv = assignment[v];
      if (cu == victim && cv != victim) ++shared[cv];
      else if (cv == victim && cu != victim) ++shared[cu];
    }
    std::uint32_t target = community_count;
    std::size_t best = 0;
    for (std::uint32_t c = 0; c < community_count; ++c) {
      if (c != victim && shared[c] > best) {
        best = shared[c];
        target = c;
      }
    }
    if (target == community_count) {
      frozen[victim] = true;  // isolated component; nothing to merge into
      continue;
    }
    for (auto& c : assignment)
      if (c == victim) c = target;
  }
}

}  // namespace detail

/// Deterministic seed-expansion community detection.
///
/// Procedure: order nodes by the seed key (ties to the smaller index); the
/// first unassigned node in that order seeds a new community, which grows by
/// absorbing any unassigned neighbor y of a member x whose combined score
/// (max of both directions for asymmetric measures) is >= threshold; once no
/// node is unassigned, communities smaller than min_community_size are merged
/// into the neighboring community sharing the most edges, ties to the lower
/// community index.
///
/// Throws std::invalid_argument when the scores do not cover the graph.
inline Partition detect(const Graph& g, const EdgeScores& scores, const DetectorParams& params) {
  if (scores.edge_count() != g.edge_count())
    throw std::invalid_argument("scores do not match graph edge count");
  if (params.min_community_size == 0)
    throw std::invalid_argument("min_community_size must be positive");

  double threshold = params.threshold ? *params.threshold : resolve_auto_threshold(scores);
  std::size_t n = g.node_count();

  // Seed order: descending key, ties broken by smaller node index.
  std::vector<double> key(n, 0.0);
  if (params.seed_order == SeedOrder::DegreeDesc) {
    for (NodeId v = 0; v < n; ++v) key[v] = static_cast<double>(g.degree(v));
  } else {
    for (NodeId v = 0; v < n; ++v) {
      double best = 0.0;
      for (std::size_t e : g.slot_edges(v)) best = std::max(best, scores.combined(e));
      key[v] = best;
    }
  }
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return key[a] > key[b]; });

  constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> assignment(n, kUnassigned);
  std::uint32_t next = 0;
  for (NodeId seed : order) {
    if (assignment[seed] != kUnassigned) continue;
    std::uint32_t community = next++;
    assignment[seed] = community;
    std::deque<NodeId> frontier{seed};
    while (!frontier.empty()) {
      NodeId x = frontier.front();
      frontier.pop_front();
      auto nb = g.neighbors(x);
      auto slots = g.slot_edges(x);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        NodeId y = nb[i];
        if (assignment[y] != kUnassigned) continue;
        if (scores.combined(slots[i]) >= threshold) {
          assignment[y] = community;
          frontier.push_back(y);
        }
      }
    }
  }

  if (params.min_community_size > 1)
    detail::merge_small_communities(g, assignment, next, params.min_community_size);

  return Partition(std::move(assignment));
}

}  // namespace edgesim
