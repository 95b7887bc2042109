#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace wlaudit {

using NodeId = std::uint32_t;
using NodeLabel = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Immutable undirected simple graph with optional integer node labels.
///
/// Edges are stored canonically (u < v, sorted, deduplicated) next to a CSR
/// adjacency structure whose per-node neighbor lists are sorted ascending.
/// Instances are safe to share across threads once built.
class Graph {
 public:
  Graph() = default;

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(NodeId u, NodeId v) const noexcept;

  bool has_node_labels() const noexcept { return node_labels_.has_value(); }
  const std::optional<std::vector<NodeLabel>>& node_labels() const noexcept {
    return node_labels_;
  }

  std::uint64_t graph_id() const noexcept { return graph_id_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(std::size_t, std::span<const Edge>,
                           std::optional<std::vector<NodeLabel>>, std::uint64_t);

  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;
  std::optional<std::vector<NodeLabel>> node_labels_;
  std::uint64_t graph_id_ = 0;
};

/// Builds a canonical graph. Duplicate edges in either orientation collapse
/// to one. Throws SelfLoopError, IndexOutOfRangeError or
/// LabelLengthMismatchError.
Graph build_graph(std::size_t node_count, std::span<const Edge> edge_list,
                  std::optional<std::vector<NodeLabel>> node_labels = std::nullopt,
                  std::uint64_t graph_id = 0);

/// Same structure, labels replaced (or removed with nullopt).
Graph with_node_labels(const Graph& g, std::optional<std::vector<NodeLabel>> node_labels);

/// Relabels nodes: node v of `g` becomes node perm[v] of the result.
Graph permute_nodes(const Graph& g, std::span<const NodeId> perm);

std::vector<std::size_t> degree_sequence(const Graph& g);

// Connected components as a per-node component index (0-based, first-seen order).
std::vector<std::size_t> connected_components(const Graph& g);

}  // namespace wlaudit
