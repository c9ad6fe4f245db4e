#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "edgesim/graph.hpp"

namespace edgesim {

namespace detail {

inline void check_same_nodes(const Partition& a, const Partition& b) {
  if (a.node_count() != b.node_count())
    throw std::invalid_argument("partitions cover different node sets");
}

// Contingency counts n_ij plus row/column sums.
struct Contingency {
  std::size_t n = 0;
  std::vector<std::uint64_t> cells;  // row-major, rows = communities of a
  std::vector<std::uint64_t> row;
  std::vector<std::uint64_t> col;
  std::size_t rows = 0, cols = 0;

  Contingency(const Partition& a, const Partition& b) {
    n = a.node_count();
    rows = a.community_count();
    cols = b.community_count();
    cells.assign(rows * cols, 0);
    row.assign(rows, 0);
    col.assign(cols, 0);
    for (NodeId v = 0; v < n; ++v) {
      auto i = a.community_of(v);
      auto j = b.community_of(v);
      ++cells[i * cols + j];
      ++row[i];
      ++col[j];
    }
  }
};

inline std::uint64_t choose2(std::uint64_t k) { return k * (k - 1) / 2; }

// Per-community boundary statistics shared by the quality metrics.
struct CommunityCuts {
  std::vector<std::uint64_t> cut;     // edges leaving the community
  std::vector<std::uint64_t> volume;  // total degree inside
  std::vector<std::uint64_t> size;    // node count
  std::uint64_t total_volume = 0;

  CommunityCuts(const Graph& g, const Partition& p) {
    if (p.node_count() != g.node_count())
      throw std::invalid_argument("partition does not cover the graph");
    std::size_t k = p.community_count();
    cut.assign(k, 0);
    volume.assign(k, 0);
    size.assign(k, 0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      volume[p.community_of(v)] += g.degree(v);
      ++size[p.community_of(v)];
    }
    for (auto [u, v] : g.edges()) {
      auto cu = p.community_of(u), cv = p.community_of(v);
      if (cu != cv) {
        ++cut[cu];
        ++cut[cv];
      }
    }
    total_volume = 2 * g.edge_count();
  }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Accuracy metrics (against ground truth).
// ---------------------------------------------------------------------------

/// Normalized mutual information, arithmetic-mean normalization, natural log.
/// When either partition has a single community (zero entropy) the value is
/// 1 if the partitions are identical as set partitions and 0 otherwise.
inline double nmi(const Partition& a, const Partition& b) {
  detail::check_same_nodes(a, b);
  detail::Contingency t(a, b);
  if (t.rows == 1 || t.cols == 1) return (t.rows == 1 && t.cols == 1) ? 1.0 : 0.0;
  double n = static_cast<double>(t.n);
  double ha = 0.0, hb = 0.0, mi = 0.0;
  for (auto r : t.row) {
    double p = static_cast<double>(r) / n;
    if (p > 0) ha -= p * std::log(p);
  }
  for (auto c : t.col) {
    double p = static_cast<double>(c) / n;
    if (p > 0) hb -= p * std::log(p);
  }
  for (std::size_t i = 0; i < t.rows; ++i) {
    for (std::size_t j = 0; j < t.cols; ++j) {
      auto nij = t.cells[i * t.cols + j];
      if (nij == 0) continue;
      double pij = static_cast<double>(nij) / n;
      double pi = static_cast<double>(t.row[i]) / n;
      double pj = static_cast<double>(t.col[j]) / n;
      mi += pij * std::log(pij / (pi * pj));
    }
  }
  if (ha == 0.0 || hb == 0.0) return 0.0;
  return mi / ((ha + hb) / 2.0);
}

/// Adjusted Rand index via exact pair counts from the contingency table:
/// with a/b/c/d the numbers of node pairs grouped together in both, in the
/// first only, in the second only, and in neither, the value is
/// 2(ad − bc) / ((a+b)(b+d) + (a+c)(c+d)); 1 when the partitions agree on
/// every pair.
inline double ari(const Partition& pa, const Partition& pb) {
  detail::check_same_nodes(pa, pb);
  detail::Contingency t(pa, pb);
  std::uint64_t together_both = 0;
  for (auto c : t.cells) together_both += detail::choose2(c);
  std::uint64_t together_a = 0, together_b = 0;
  for (auto r : t.row) together_a += detail::choose2(r);
  for (auto c : t.col) together_b += detail::choose2(c);
  std::uint64_t total = detail::choose2(t.n);
  std::uint64_t a = together_both;
  std::uint64_t b = together_a - together_both;
  std::uint64_t c = together_b - together_both;
  std::uint64_t d = total - a - b - c;
  if (b == 0 && c == 0) return 1.0;
  double num = 2.0 * (static_cast<double>(a) * static_cast<double>(d) -
                      static_cast<double>(b) * static_cast<double>(c));
  double den = static_cast<double>(a + b) * static_cast<double>(b + d) +
               static_cast<double>(a + c) * static_cast<double>(c + d);
  return num / den;
}

/// Identifier of the NF1 variant implemented here, emitted in reports.
inline constexpr const char* kNf1Variant = "avg-best-match-f1-times-community-count-ratio";

/// Normalized F1: each detected community takes the best F1 (on node
/// membership) over the truth communities; those are averaged and scaled by
/// min(1, detected count / truth count). 1.0 for identical partitions.
inline double nf1(const Partition& detected, const Partition& truth) {
  detail::check_same_nodes(detected, truth);
  detail::Contingency t(detected, truth);
  double sum = 0.0;
  for (std::size_t i = 0; i < t.rows; ++i) {
    double best = 0.0;
    for (std::size_t j = 0; j < t.cols; ++j) {
      auto nij = t.cells[i * t.cols + j];
      if (nij == 0) continue;
      double precision = static_cast<double>(nij) / static_cast<double>(t.row[i]);
      double recall = static_cast<double>(nij) / static_cast<double>(t.col[j]);
      best = std::max(best, 2.0 * precision * recall / (precision + recall));
    }
    sum += best;
  }
  double avg = sum / static_cast<double>(t.rows);
  double coverage = std::min(1.0, static_cast<double>(t.rows) / static_cast<double>(t.cols));
  return avg * coverage;
}

// ---------------------------------------------------------------------------
// Quality metrics (structure only, no ground truth).
// ---------------------------------------------------------------------------

/// Newman-Girvan modularity Q = Σ_c (e_c/m − (d_c/2m)²).
inline double modularity(const Graph& g, const Partition& p) {
  if (g.edge_count() == 0) throw std::invalid_argument("modularity of an empty graph");
  if (p.node_count() != g.node_count())
    throw std::invalid_argument("partition does not cover the graph");
  std::size_t k = p.community_count();
  std::vector<std::uint64_t> intra(k, 0), degree_sum(k, 0);
  for (auto [u, v] : g.edges())
    if (p.community_of(u) == p.community_of(v)) ++intra[p.community_of(u)];
  for (NodeId v = 0; v < g.node_count(); ++v) degree_sum[p.community_of(v)] += g.degree(v);
  double m = static_cast<double>(g.edge_count());
  double q = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    double frac = static_cast<double>(intra[c]) / m;
    double deg = static_cast<double>(degree_sum[c]) / (2.0 * m);
    q += frac - deg * deg;
  }
  return q;
}

/// Volume-weighted average of per-community conductance
/// cut(c) / min(vol(c), vol(V∖c)); zero-volume communities contribute 0.
inline double conductance(const Graph& g, const Partition& p) {
  detail::CommunityCuts cc(g, p);
  if (cc.total_volume == 0) return 0.0;
  double acc = 0.0;
  for (std::size_t c = 0; c < cc.cut.size(); ++c) {
    std::uint64_t denom = std::min(cc.volume[c], cc.total_volume - cc.volume[c]);
    if (denom == 0) continue;
    double phi = static_cast<double>(cc.cut[c]) / static_cast<double>(denom);
    acc += static_cast<double>(cc.volume[c]) / static_cast<double>(cc.total_volume) * phi;
  }
  return acc;
}

/// Unweighted mean of per-community cut(c) / (|c|·(n−|c|)); the n = |c| term
/// is 0 by convention.
inline double cut_ratio(const Graph& g, const Partition& p) {
  detail::CommunityCuts cc(g, p);
  std::size_t n = g.node_count();
  double acc = 0.0;
  for (std::size_t c = 0; c < cc.cut.size(); ++c) {
    std::uint64_t denom = cc.size[c] * (n - cc.size[c]);
    if (denom == 0) continue;
    acc += static_cast<double>(cc.cut[c]) / static_cast<double>(denom);
  }
  return acc / static_cast<double>(cc.cut.size());
}

/// Unweighted mean of per-community cut(c) / |c|.
inline double expansion(const Graph& g, const Partition& p) {
  detail::CommunityCuts cc(g, p);
  double acc = 0.0;
  for (std::size_t c = 0; c < cc.cut.size(); ++c) {
    if (cc.size[c] == 0) continue;
    acc += static_cast<double>(cc.cut[c]) / static_cast<double>(cc.size[c]);
  }
  return acc / static_cast<double>(cc.cut.size());
}

/// Per-community quality values, for transparency alongside the aggregates.
struct PerCommunityQuality {
  std::vector<double> conductance;
  std::vector<double> cut_ratio;
  std::vector<double> expansion;
};

inline PerCommunityQuality per_community_quality(const Graph& g, const Partition& p) {
  detail::CommunityCuts cc(g, p);
  std::size_t n = g.node_count();
  PerCommunityQuality out;
  for (std::size_t c = 0; c < cc.cut.size(); ++c) {
    std::uint64_t cmin = std::min(cc.volume[c], cc.total_volume - cc.volume[c]);
    out.conductance.push_back(cmin == 0 ? 0.0 : static_cast<double>(cc.cut[c]) / static_cast<double>(cmin));
    std::uint64_t pairs = cc.size[c] * (n - cc.size[c]);
    out.cut_ratio.push_back(pairs == 0 ? 0.0 : static_cast<double>(cc.cut[c]) / static_cast<double>(pairs));
    out.expansion.push_back(cc.size[c] == 0 ? 0.0 : static_cast<double>(cc.cut[c]) / static_cast<double>(cc.size[c]));
  }
  return out;
}

}  // namespace edgesim
