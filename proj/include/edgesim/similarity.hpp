#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "edgesim/graph.hpp"
#include "edgesim/parallel.hpp"
#include "edgesim/text.hpp"

namespace edgesim {

/// Local similarity measures scored on the edges of a graph.
/// NDES is the only direction-dependent member.
enum class Measure {
  Ndes,
  CommonNeighbors,
  Jaccard,
  Salton,
  AdamicAdar,
  ResourceAllocation,
  PreferentialAttachment,
};

inline constexpr std::array<Measure, 7> kAllMeasures = {
    Measure::Ndes,           Measure::CommonNeighbors,    Measure::Jaccard,
    Measure::Salton,         Measure::AdamicAdar,         Measure::ResourceAllocation,
    Measure::PreferentialAttachment,
};

constexpr bool is_directed(Measure m) noexcept { return m == Measure::Ndes; }

constexpr std::string_view to_string(Measure m) noexcept {
  switch (m) {
    case Measure::Ndes: return "ndes";
    case Measure::CommonNeighbors: return "common_neighbors";
    case Measure::Jaccard: return "jaccard";
    case Measure::Salton: return "salton";
    case Measure::AdamicAdar: return "adamic_adar";
    case Measure::ResourceAllocation: return "resource_allocation";
    case Measure::PreferentialAttachment: return "preferential_attachment";
  }
  return "?";
}

inline std::optional<Measure> measure_from_string(std::string_view name) {
  for (Measure m : kAllMeasures)
    if (name == to_string(m)) return m;
  if (name == "cn") return Measure::CommonNeighbors;
  if (name == "aa") return Measure::AdamicAdar;
  if (name == "ra") return Measure::ResourceAllocation;
  if (name == "pa") return Measure::PreferentialAttachment;
  if (name == "cosine") return Measure::Salton;
  return std::nullopt;
}

namespace detail {

inline std::size_t intersection_size(std::span<const NodeId> a, std::span<const NodeId> b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else { ++count; ++i; ++j; }
  }
  return count;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Baseline measures. Defined for any valid node pair; score_all_edges only
// evaluates them on existing edges.
// ---------------------------------------------------------------------------

/// |Γ(x) ∩ Γ(y)|
inline std::size_t common_neighbors_count(const Graph& g, NodeId x, NodeId y) {
  return detail::intersection_size(g.neighbors(x), g.neighbors(y));
}

/// Σ_{z ∈ Γ(x)∩Γ(y)} 1/ln|Γ(z)|. Natural logarithm; a common neighbor always
/// has degree ≥ 2 on a simple graph, so every term is finite.
inline double adamic_adar(const Graph& g, NodeId x, NodeId y) {
  double sum = 0.0;
  for (NodeId z : common_neighbors(g, x, y)) sum += 1.0 / std::log(static_cast<double>(g.degree(z)));
  return sum;
}

/// Σ_{z ∈ Γ(x)∩Γ(y)} 1/|Γ(z)|
inline double resource_allocation(const Graph& g, NodeId x, NodeId y) {
  double sum = 0.0;
  for (NodeId z : common_neighbors(g, x, y)) sum += 1.0 / static_cast<double>(g.degree(z));
  return sum;
}

/// |Γ(x) ∩ Γ(y)| / sqrt(|Γ(x)|·|Γ(y)|), 0 when either endpoint is isolated.
inline double salton(const Graph& g, NodeId x, NodeId y) {
  std::size_t dx = g.degree(x), dy = g.degree(y);
  if (dx == 0 || dy == 0) return 0.0;
  return static_cast<double>(common_neighbors_count(g, x, y)) /
         std::sqrt(static_cast<double>(dx) * static_cast<double>(dy));
}

/// |Γ(x) ∩ Γ(y)| / |Γ(x) ∪ Γ(y)|, 0 when the union is empty.
inline double jaccard(const Graph& g, NodeId x, NodeId y) {
  std::size_t inter = common_neighbors_count(g, x, y);
  std::size_t uni = g.degree(x) + g.degree(y) - inter;
  if (uni == 0) return 0.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

/// |Γ(x)|·|Γ(y)|
inline double preferential_attachment(const Graph& g, NodeId x, NodeId y) {
  return static_cast<double>(g.degree(x)) * static_cast<double>(g.degree(y));
}

// ---------------------------------------------------------------------------
// Neighborhood density and NDES.
// ---------------------------------------------------------------------------

/// Neighborhood density of an edge {x, y}. Exact integer.
///
/// Without common neighbors the value is 1 if either endpoint has degree 1
/// (that branch wins when both conditions hold) and 0 otherwise. With common
/// neighborhood C = Γ(x)∩Γ(y) it is the five-term sum
///   |C|
///   + Σ_{z∈C} |Γ(x)∩Γ(z)|
///   + Σ_{z∈C} |Γ(y)∩Γ(z)|
///   + #{ {w,z} ⊆ C : {w,z} ∈ E }
///   + Σ over those connected pairs of |Γ(w)∩Γ(z)|
/// with unordered pairs counted once. Symmetric in x and y.
///
/// Throws std::domain_error when {x, y} is not an edge.
inline std::uint64_t rho(const Graph& g, NodeId x, NodeId y) {
  if (!g.has_edge(x, y))
    throw std::domain_error("rho requires a connected node pair");
  std::vector<NodeId> common = common_neighbors(g, x, y);
  if (common.empty())
    return (g.degree(x) == 1 || g.degree(y) == 1) ? 1 : 0;

  auto nx = g.neighbors(x);
  auto ny = g.neighbors(y);
  std::uint64_t total = common.size();
  for (NodeId z : common) {
    auto nz = g.neighbors(z);
    total += detail::intersection_size(nx, nz);
    total += detail::intersection_size(ny, nz);
  }
  for (std::size_t i = 0; i < common.size(); ++i) {
    auto nw = g.neighbors(common[i]);
    for (std::size_t j = i + 1; j < common.size(); ++j) {
      if (std::binary_search(nw.begin(), nw.end(), common[j])) {
        total += 1;
        total += detail::intersection_size(nw, g.neighbors(common[j]));
      }
    }
  }
  return total;
}

/// Per-edge neighborhood density, aligned with Graph::edges().
struct RhoTable {
  std::vector<std::uint64_t> by_edge;
};

/// Scores every edge; edges are partitioned across worker threads and each
/// writes only its own slots, so the result is deterministic.
inline RhoTable rho_all_edges(const Graph& g) {
  RhoTable table;
  table.by_edge.resize(g.edge_count());
  auto edges = g.edges();
  detail::parallel_chunks(edges.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t e = begin; e < end; ++e)
      table.by_edge[e] = rho(g, edges[e].first, edges[e].second);
  });
  return table;
}

/// Per-node information I(x): the maximum ρ over edges incident to x.
struct NodeInfo {
  std::vector<std::uint64_t> info;
};

/// I(x) = max_{y ∈ Γ(x)} ρ(x,y), 0 for isolated nodes.
/// Throws std::invalid_argument when the table does not cover every edge.
inline NodeInfo information(const Graph& g, const RhoTable& rho_scores) {
  if (rho_scores.by_edge.size() != g.edge_count())
    throw std::invalid_argument("rho table does not match graph edge count");
  NodeInfo ni;
  ni.info.assign(g.node_count(), 0);
  auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    ni.info[u] = std::max(ni.info[u], rho_scores.by_edge[e]);
    ni.info[v] = std::max(ni.info[v], rho_scores.by_edge[e]);
  }
  return ni;
}

/// NDES(x,y) = ρ(x,y)/I(x); 0 when ρ(x,y) = 0, no division performed.
/// Direction-dependent: the normalizer is the source node's information.
inline double ndes(const Graph& g, NodeId x, NodeId y, const NodeInfo& info,
                   const RhoTable& rho_scores) {
  if (rho_scores.by_edge.size() != g.edge_count() || info.info.size() != g.node_count())
    throw std::invalid_argument("rho table or node info does not match graph");
  auto e = g.edge_index(x, y);
  if (!e) throw std::domain_error("ndes requires a connected node pair");
  std::uint64_t r = rho_scores.by_edge[*e];
  if (r == 0) return 0.0;
  return static_cast<double>(r) / static_cast<double>(info.info[x]);
}

// ---------------------------------------------------------------------------
// Whole-graph scoring.
// ---------------------------------------------------------------------------

/// Scores for every edge of a graph under one measure.
///
/// Symmetric measures keep one value per canonical edge. NDES keeps two:
/// forward(e) normalizes by the canonical source (the smaller endpoint),
/// reverse(e) by the canonical target.
class EdgeScores {
 public:
  EdgeScores() = default;
  EdgeScores(Measure m, std::size_t edge_count)
      : measure_(m),
        directed_(is_directed(m)),
        values_(edge_count * (is_directed(m) ? 2 : 1), 0.0) {}

  Measure measure() const noexcept { return measure_; }
  bool directed() const noexcept { return directed_; }
  std::size_t edge_count() const noexcept { return directed_ ? values_.size() / 2 : values_.size(); }

  double forward(std::size_t e) const { return values_[directed_ ? 2 * e : e]; }
  double reverse(std::size_t e) const { return values_[directed_ ? 2 * e + 1 : e]; }
  double& forward(std::size_t e) { return values_[directed_ ? 2 * e : e]; }
  double& reverse(std::size_t e) { return values_[directed_ ? 2 * e + 1 : e]; }

  /// max(score(x,y), score(y,x)) for directed measures, the single stored
  /// value otherwise. Used where an undirected strength is needed.
  double combined(std::size_t e) const {
    return directed_ ? std::max(values_[2 * e], values_[2 * e + 1]) : values_[e];
  }

  /// Score of the ordered pair (x, y); both orientations exist for every
  /// stored edge. Throws std::domain_error when {x, y} is not an edge.
  double score(const Graph& g, NodeId x, NodeId y) const {
    auto e = g.edge_index(x, y);
    if (!e) throw std::domain_error("pair is not an edge");
    if (!directed_) return values_[*e];
    return x < y ? values_[2 * *e] : values_[2 * *e + 1];
  }

  std::span<const double> values() const noexcept { return values_; }

 private:
  Measure measure_ = Measure::CommonNeighbors;
  bool directed_ = false;
  std::vector<double> values_;
};

/// Builds directed NDES scores from a precomputed ρ table (I(x) is derived
/// from the same table, so ρ is never recomputed per direction).
inline EdgeScores ndes_scores_from_rho(const Graph& g, const RhoTable& rho_scores) {
  NodeInfo ni = information(g, rho_scores);
  EdgeScores scores(Measure::Ndes, g.edge_count());
  auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    std::uint64_t r = rho_scores.by_edge[e];
    scores.forward(e) = r == 0 ? 0.0 : static_cast<double>(r) / static_cast<double>(ni.info[u]);
    scores.reverse(e) = r == 0 ? 0.0 : static_cast<double>(r) / static_cast<double>(ni.info[v]);
  }
  return scores;
}

/// Scores every edge of the graph under the given measure.
inline EdgeScores score_all_edges(const Graph& g, Measure m) {
  if (m == Measure::Ndes) return ndes_scores_from_rho(g, rho_all_edges(g));
  EdgeScores scores(m, g.edge_count());
  auto edges = g.edges();
  detail::parallel_chunks(edges.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t e = begin; e < end; ++e) {
      auto [u, v] = edges[e];
      double s = 0.0;
      switch (m) {
        case Measure::CommonNeighbors: s = static_cast<double>(common_neighbors_count(g, u, v)); break;
        case Measure::Jaccard: s = jaccard(g, u, v); break;
        case Measure::Salton: s = salton(g, u, v); break;
        case Measure::AdamicAdar: s = adamic_adar(g, u, v); break;
        case Measure::ResourceAllocation: s = resource_allocation(g, u, v); break;
        case Measure::PreferentialAttachment: s = preferential_attachment(g, u, v); break;
        case Measure::Ndes: break;  // handled above
      }
      scores.forward(e) = s;
    }
  });
  return scores;
}

// ---------------------------------------------------------------------------
// Serialization. Directed measures emit both orientations as separate rows.
// ---------------------------------------------------------------------------

inline void write_scores_csv(const Graph& g, const EdgeScores& scores, std::ostream& out) {
  out << "src,dst,score\n";
  auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    out << detail::csv_field(g.label(u)) << ',' << detail::csv_field(g.label(v)) << ','
        << detail::format_double(scores.forward(e)) << '\n';
    if (scores.directed())
      out << detail::csv_field(g.label(v)) << ',' << detail::csv_field(g.label(u)) << ','
          << detail::format_double(scores.reverse(e)) << '\n';
  }
}

}  // namespace edgesim
