#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "edgesim/graph.hpp"

namespace edgesim {

namespace detail {

// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::size_t uniform_below(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

}  // namespace detail

/// Erdős–Rényi G(n, p) with a fixed seed. Bit-reproducible across platforms.
inline Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (detail::uniform01(rng) < p) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

/// Random graph with maximum degree k via seeded stub pairing: each node
/// contributes k stubs, the stub list is shuffled, and consecutive stubs are
/// paired; self-loops and duplicate pairs are rejected, so degrees come out
/// at most k.
inline Graph random_fixed_degree(std::size_t n, std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<NodeId> stubs;
  stubs.reserve(n * k);
  for (NodeId v = 0; v < n; ++v)
    for (std::size_t i = 0; i < k; ++i) stubs.push_back(v);
  // Fisher-Yates with a hand-rolled pick keeps the sequence platform-stable.
  for (std::size_t i = stubs.size() - 1; i > 0; --i)
    std::swap(stubs[i], stubs[detail::uniform_below(rng, i + 1)]);
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(stubs.size() / 2);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    if (stubs[i] == stubs[i + 1]) continue;
    edges.emplace_back(stubs[i], stubs[i + 1]);
  }
  return Graph::from_edges(n, edges);  // duplicate pairs collapse here
}

}  // namespace edgesim
