#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace edgesim {

using NodeId = std::uint32_t;

/// Thrown on malformed input files; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline bool is_comment_or_blank(std::string_view line) {
  auto pos = line.find_first_not_of(" \t\r");
  if (pos == std::string_view::npos) return true;
  return line[pos] == '#' || line[pos] == '%';
}

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

/// Immutable undirected simple graph in CSR form.
///
/// Adjacency lists are strictly ascending; self-loops and duplicate edges
/// from the input are normalized away (counts are kept for reporting).
/// External string labels map to dense internal ids in first-appearance
/// order, so loading the same file always yields the same graph.
/// Construction is single-threaded; afterwards all queries are safe for
/// unrestricted concurrent reads.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph over `node_count` nodes from undirected edge pairs.
  /// Duplicates are collapsed and self-loops dropped. If `labels` is empty,
  /// nodes are labeled by their decimal index.
  static Graph from_edges(std::size_t node_count,
                          std::span<const std::pair<NodeId, NodeId>> edge_pairs,
                          std::vector<std::string> labels = {}) {
    Graph g;
    if (labels.empty()) {
      labels.reserve(node_count);
      for (std::size_t i = 0; i < node_count; ++i) labels.push_back(std::to_string(i));
    }
    if (labels.size() != node_count)
      throw std::invalid_argument("label count does not match node count");
    g.labels_ = std::move(labels);
    for (NodeId i = 0; i < node_count; ++i) g.label_index_.emplace(g.labels_[i], i);
    g.build(node_count, edge_pairs);
    return g;
  }

  /// Parses an edge-list stream: one edge per line, two whitespace-separated
  /// labels, '#'/'%' comment lines and blank lines ignored.
  ///
  /// Throws ParseError on a line with a token count other than two, and
  /// std::invalid_argument when the stream holds no data lines at all.
  static Graph from_edge_list(std::istream& in) {
    Graph g;
    std::vector<std::pair<NodeId, NodeId>> pairs;
    std::string line;
    std::size_t line_no = 0;
    bool saw_data = false;
    while (std::getline(in, line)) {
      ++line_no;
      if (detail::is_comment_or_blank(line)) continue;
      auto tokens = detail::split_ws(line);
      if (tokens.size() != 2)
        throw ParseError("expected two node labels, got " + std::to_string(tokens.size()),
                         line_no);
      saw_data = true;
      NodeId u = g.intern(tokens[0]);  // sequenced: first appearance defines the id
      NodeId v = g.intern(tokens[1]);
      pairs.emplace_back(u, v);
    }
    if (!saw_data) throw std::invalid_argument("empty edge list");
    g.build(g.labels_.size(), pairs);
    return g;
  }

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Sorted neighbor list of `x` (read-only view into the CSR arrays).
  std::span<const NodeId> neighbors(NodeId x) const {
    check_node(x);
    return {adj_.data() + offsets_[x], adj_.data() + offsets_[x + 1]};
  }

  std::size_t degree(NodeId x) const {
    check_node(x);
    return offsets_[x + 1] - offsets_[x];
  }

  bool has_edge(NodeId x, NodeId y) const {
    check_node(x);
    check_node(y);
    auto nb = neighbors(x);
    return std::binary_search(nb.begin(), nb.end(), y);
  }

  /// Canonical edge array: pairs (u, v) with u < v, ordered lexicographically.
  std::span<const std::pair<NodeId, NodeId>> edges() const noexcept { return edges_; }

  /// Index of edge {x, y} in the canonical edge array.
  std::optional<std::size_t> edge_index(NodeId x, NodeId y) const {
    check_node(x);
    check_node(y);
    auto nb = neighbors(x);
    auto it = std::lower_bound(nb.begin(), nb.end(), y);
    if (it == nb.end() || *it != y) return std::nullopt;
    return slot_edge_[offsets_[x] + static_cast<std::size_t>(it - nb.begin())];
  }

  /// Edge index for each adjacency slot, aligned with neighbors(x).
  std::span<const std::size_t> slot_edges(NodeId x) const {
    check_node(x);
    return {slot_edge_.data() + offsets_[x], slot_edge_.data() + offsets_[x + 1]};
  }

  const std::string& label(NodeId x) const {
    check_node(x);
    return labels_[x];
  }

  std::optional<NodeId> find(std::string_view label) const {
    auto it = label_index_.find(std::string(label));
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t self_loops_dropped() const noexcept { return self_loops_dropped_; }
  std::size_t duplicates_collapsed() const noexcept { return duplicates_collapsed_; }

  /// Writes the graph back as edge-list text (one "u v" line per edge).
  void write_edge_list(std::ostream& out) const {
    for (const auto& [u, v] : edges_) out << labels_[u] << ' ' << labels_[v] << '\n';
  }

 private:
  NodeId intern(const std::string& label) {
    auto it = label_index_.find(label);
    if (it != label_index_.end()) return it->second;
    NodeId id = static_cast<NodeId>(labels_.size());
    labels_.push_back(label);
    label_index_.emplace(label, id);
    return id;
  }

  void check_node(NodeId x) const {
    if (x >= node_count()) throw std::out_of_range("node index " + std::to_string(x) + " out of range");
  }

  void build(std::size_t n, std::span<const std::pair<NodeId, NodeId>> pairs) {
    std::vector<std::pair<NodeId, NodeId>> canon;
    canon.reserve(pairs.size());
    for (auto [u, v] : pairs) {
      if (u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
      if (u == v) {
        ++self_loops_dropped_;
        continue;
      }
      canon.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(canon.begin(), canon.end());
    auto last = std::unique(canon.begin(), canon.end());
    duplicates_collapsed_ = static_cast<std::size_t>(canon.end() - last);
    canon.erase(last, canon.end());
    edges_ = std::move(canon);

    offsets_.assign(n + 1, 0);
    for (const auto& [u, v] : edges_) {
      ++offsets_[u + 1];
      ++offsets_[v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
    adj_.resize(offsets_[n]);
    slot_edge_.resize(offsets_[n]);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      auto [u, v] = edges_[e];
      adj_[cursor[u]] = v;
      slot_edge_[cursor[u]++] = e;
      adj_[cursor[v]] = u;
      slot_edge_[cursor[v]++] = e;
    }
    // Canonical edge order is sorted, so each adjacency list comes out ascending.
  }

  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adj_;
  std::vector<std::size_t> slot_edge_;
  std::vector<std::pair<NodeId, NodeId>> edges_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> label_index_;
  std::size_t self_loops_dropped_ = 0;
  std::size_t duplicates_collapsed_ = 0;
};

/// Sorted intersection of the two neighbor lists, by linear merge.
inline std::vector<NodeId> common_neighbors(const Graph& g, NodeId x, NodeId y) {
  auto a = g.neighbors(x);
  auto b = g.neighbors(y);
  std::vector<NodeId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Node-to-community assignment with dense community ids [0, community_count).
class Partition {
 public:
  Partition() = default;

  /// Takes a per-node community assignment; community ids are renumbered
  /// densely in order of first appearance by node index.
  explicit Partition(std::vector<std::uint32_t> assignment) {
    std::unordered_map<std::uint32_t, std::uint32_t> remap;
    assignment_.reserve(assignment.size());
    for (auto c : assignment) {
      auto [it, inserted] = remap.emplace(c, static_cast<std::uint32_t>(remap.size()));
      assignment_.push_back(it->second);
    }
    community_count_ = static_cast<std::uint32_t>(remap.size());
  }

  std::size_t node_count() const noexcept { return assignment_.size(); }
  std::uint32_t community_count() const noexcept { return community_count_; }

  std::uint32_t community_of(NodeId x) const {
    if (x >= assignment_.size()) throw std::out_of_range("node index out of range");
    return assignment_[x];
  }

  std::span<const std::uint32_t> assignment() const noexcept { return assignment_; }

  /// Member lists grouped by community, each sorted ascending.
  std::vector<std::vector<NodeId>> communities() const {
    std::vector<std::vector<NodeId>> out(community_count_);
    for (NodeId v = 0; v < assignment_.size(); ++v) out[assignment_[v]].push_back(v);
    return out;
  }

  bool operator==(const Partition& other) const = default;

  /// Parses a ground-truth stream: one community per line, whitespace-separated
  /// node labels, '#'/'%' comments ignored. Every node of `g` must appear in
  /// exactly one community.
  static Partition load_ground_truth(std::istream& in, const Graph& g) {
    constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> assignment(g.node_count(), kUnassigned);
    std::string line;
    std::size_t line_no = 0;
    std::uint32_t next_community = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (detail::is_comment_or_blank(line)) continue;
      auto tokens = detail::split_ws(line);
      if (tokens.empty()) continue;
      for (const auto& tok : tokens) {
        auto id = g.find(tok);
        if (!id) throw ParseError("unknown node label '" + tok + "'", line_no);
        if (assignment[*id] != kUnassigned)
          throw ParseError("node '" + tok + "' listed in more than one community", line_no);
        assignment[*id] = next_community;
      }
      ++next_community;
    }
    if (next_community == 0) throw std::invalid_argument("empty ground-truth file");
    for (NodeId v = 0; v < assignment.size(); ++v) {
      if (assignment[v] == kUnassigned)
        throw std::invalid_argument("node '" + g.label(v) + "' missing from every community");
    }
    return Partition(std::move(assignment));
  }

  /// Writes the partition in the ground-truth format (one community per line).
  void write_communities(std::ostream& out, const Graph& g) const {
    if (g.node_count() != assignment_.size())
      throw std::invalid_argument("partition/graph size mismatch");
    for (const auto& members : communities()) {
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) out << ' ';
        out << g.label(members[i]);
      }
      out << '\n';
    }
  }

 private:
  std::vector<std::uint32_t> assignment_;
  std::uint32_t community_count_ = 0;
};

}  // namespace edgesim
