#include "wlaudit/graph.hpp"

#include <algorithm>

#include "wlaudit/errors.hpp"

namespace wlaudit {

bool Graph::has_edge(NodeId u, NodeId v) const noexcept {
  if (u >= node_count_ || v >= node_count_) return false;
  // Search the shorter list.
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Graph build_graph(std::size_t node_count, std::span<const Edge> edge_list,
                  std::optional<std::vector<NodeLabel>> node_labels, std::uint64_t graph_id) {
  if (node_labels && node_labels->size() != node_count) {
    throw LabelLengthMismatchError(node_labels->size(), node_count);
  }

  Graph g;
  g.node_count_ = node_count;
  g.graph_id_ = graph_id;
  g.node_labels_ = std::move(node_labels);

  g.edges_.reserve(edge_list.size());
  for (auto [u, v] : edge_list) {
    if (u >= node_count) throw IndexOutOfRangeError(u, node_count);
    if (v >= node_count) throw IndexOutOfRangeError(v, node_count);
    if (u == v) throw SelfLoopError(u);
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  std::vector<std::size_t> degree(node_count, 0);
  for (auto [u, v] : g.edges_) {
    ++degree[u];
    ++degree[v];
  }
  g.offsets_.assign(node_count + 1, 0);
  for (std::size_t v = 0; v < node_count; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.adjacency_.resize(g.offsets_[node_count]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v), so each list comes out sorted once both
  // passes have run: smaller neighbors arrive through the second coordinate first.
  for (auto [u, v] : g.edges_) g.adjacency_[fill[v]++] = u;
  for (auto [u, v] : g.edges_) g.adjacency_[fill[u]++] = v;
  return g;
}

Graph with_node_labels(const Graph& g, std::optional<std::vector<NodeLabel>> node_labels) {
  return build_graph(g.node_count(), g.edges(), std::move(node_labels), g.graph_id());
}

Graph permute_nodes(const Graph& g, std::span<const NodeId> perm) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  std::optional<std::vector<NodeLabel>> labels;
  if (g.node_labels()) {
    labels.emplace(g.node_count());
    for (std::size_t v = 0; v < g.node_count(); ++v) (*labels)[perm[v]] = (*g.node_labels())[v];
  }
  return build_graph(g.node_count(), edges, std::move(labels), g.graph_id());
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> degrees(g.node_count());
  for (std::size_t v = 0; v < g.node_count(); ++v) degrees[v] = g.degree(static_cast<NodeId>(v));
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

std::vector<std::size_t> connected_components(const Graph& g) {
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> component(g.node_count(), kUnset);
  std::vector<NodeId> stack;
  std::size_t next = 0;
  for (std::size_t s = 0; s < g.node_count(); ++s) {
    if (component[s] != kUnset) continue;
    component[s] = next;
    stack.push_back(static_cast<NodeId>(s));
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      for (NodeId u : g.neighbors(v)) {
        if (component[u] == kUnset) {
          component[u] = next;
          stack.push_back(u);
        }
      }
    }
    ++next;
  }
  return component;
}

}  // namespace wlaudit
