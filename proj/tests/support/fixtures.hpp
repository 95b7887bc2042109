#pragma once

// Small named graphs, random generators and brute-force reference
// implementations shared by the unit and property tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wlaudit/dataset.hpp"
#include "wlaudit/graph.hpp"

namespace fixtures {

using wlaudit::Edge;
using wlaudit::Graph;
using wlaudit::NodeId;
using wlaudit::NodeLabel;

inline Graph make(std::size_t n, std::vector<Edge> edges,
                  std::optional<std::vector<NodeLabel>> labels = std::nullopt) {
  return wlaudit::build_graph(n, edges, std::move(labels));
}

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return make(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId v = 0; v < n; ++v) e.emplace_back(v, static_cast<NodeId>((v + 1) % n));
  return make(n, e);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return make(n, e);
}

inline Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (NodeId v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return make(leaves + 1, e);
}

inline Graph two_triangles() { return make(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}); }

inline Graph edgeless(std::size_t n) { return make(n, {}); }

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p,
                          std::size_t label_values = 0) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  std::optional<std::vector<NodeLabel>> labels;
  if (label_values > 0) {
    std::uniform_int_distribution<NodeLabel> pick(0, static_cast<NodeLabel>(label_values - 1));
    labels.emplace(n);
    for (auto& l : *labels) l = pick(rng);
  }
  return make(n, e, std::move(labels));
}

inline std::vector<NodeId> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Uniform labeled tree from a random Pruefer sequence.
inline Graph random_tree(std::mt19937_64& rng, std::size_t n) {
  if (n <= 1) return edgeless(n);
  if (n == 2) return make(2, {{0, 1}});
  std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
  std::vector<NodeId> code(n - 2);
  for (auto& c : code) c = pick(rng);
  std::vector<std::size_t> degree(n, 1);
  for (NodeId c : code) ++degree[c];
  std::vector<Edge> e;
  for (NodeId c : code) {
    NodeId leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    e.emplace_back(leaf, c);
    --degree[leaf];
    --degree[c];
  }
  std::vector<NodeId> rest;
  for (NodeId v = 0; v < n; ++v)
    if (degree[v] == 1) rest.push_back(v);
  e.emplace_back(rest[0], rest[1]);
  return make(n, e);
}

inline std::vector<std::vector<bool>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<bool>> a(g.node_count(), std::vector<bool>(g.node_count(), false));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

// Isomorphism by trying every bijection.
inline bool permutation_oracle(const Graph& g, const Graph& h, bool labels) {
  const std::size_t n = g.node_count();
  if (n != h.node_count() || g.edge_count() != h.edge_count()) return false;
  const auto a = adjacency_matrix(g), b = adjacency_matrix(h);
  std::vector<NodeId> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    if (labels) {
      for (std::size_t v = 0; v < n && ok; ++v)
        ok = (*g.node_labels())[v] == (*h.node_labels())[p[v]];
    }
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = u + 1; v < n && ok; ++v) ok = a[u][v] == b[p[u]][p[v]];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Canonical string of an unrooted tree: AHU encoding rooted at each center,
// smallest taken.
inline std::string tree_canonical(const Graph& t) {
  const std::size_t n = t.node_count();
  if (n == 0) return "";
  std::vector<std::size_t> degree(n);
  std::vector<NodeId> layer;
  for (NodeId v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<NodeId> next;
    for (NodeId v : layer)
      for (NodeId u : t.neighbors(v))
        if (--degree[u] == 1) next.push_back(u);
    layer = next;
  }
  std::function<std::string(NodeId, NodeId)> encode = [&](NodeId v, NodeId parent) {
    std::vector<std::string> children;
    for (NodeId u : t.neighbors(v))
      if (u != parent) children.push_back(encode(u, v));
    std::sort(children.begin(), children.end());
    std::string s = "(";
    for (auto& c : children) s += c;
    return s + ")";
  };
  std::string best;
  for (NodeId c : layer) {
    std::string s = encode(c, c);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

// Induced connected subgraph counts by checking every vertex subset of size
// 2..4, classified by edge count and degree sequence.
struct SubsetCounts {
  std::uint64_t edge = 0, path3 = 0, triangle = 0, path4 = 0, claw = 0, cycle4 = 0, paw = 0,
                diamond = 0, clique4 = 0;
};

inline SubsetCounts subset_oracle(const Graph& g) {
  const auto a = adjacency_matrix(g);
  const std::size_t n = g.node_count();
  SubsetCounts c;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (pick.size() >= 2) {
      const std::size_t k = pick.size();
      std::vector<std::size_t> deg(k, 0);
      std::size_t edges = 0;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
          if (a[pick[i]][pick[j]]) ++deg[i], ++deg[j], ++edges;
      // Connected iff a search from the first node reaches all.
      std::vector<bool> seen(k, false);
      std::vector<std::size_t> stack = {0};
      seen[0] = true;
      while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        for (std::size_t y = 0; y < k; ++y)
          if (!seen[y] && a[pick[x]][pick[y]]) seen[y] = true, stack.push_back(y);
      }
      if (std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
        std::sort(deg.begin(), deg.end());
        if (k == 2) ++c.edge;
        if (k == 3) (edges == 3 ? c.triangle : c.path3)++;
        if (k == 4) {
          if (edges == 3) (deg[3] == 3 ? c.claw : c.path4)++;
          if (edges == 4) (deg[3] == 3 ? c.paw : c.cycle4)++;
          if (edges == 5) ++c.diamond;
          if (edges == 6) ++c.clique4;
        }
      }
    }
    if (pick.size() == 4) return;
    for (std::size_t v = start; v < n; ++v) {
      pick.push_back(v);
      rec(v + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return c;
}

// Best accuracy over every assignment of one class per group.
inline double majority_oracle(const std::vector<std::size_t>& group_of,
                              const std::vector<wlaudit::ClassLabel>& labels,
                              std::size_t num_classes) {
  const std::size_t groups = *std::max_element(group_of.begin(), group_of.end()) + 1;
  std::vector<std::size_t> assign(groups, 0);
  std::size_t best = 0;
  while (true) {
    std::size_t correct = 0;
    for (std::size_t g = 0; g < group_of.size(); ++g) correct += assign[group_of[g]] == labels[g];
    best = std::max(best, correct);
    std::size_t i = 0;
    while (i < groups && ++assign[i] == num_classes) assign[i++] = 0;
    if (i == groups) break;
  }
  return 100.0 * static_cast<double>(best) / static_cast<double>(group_of.size());
}

// Color refinement with nested strings as colors; a slow reference for the
// interned engine. Returns the sorted multiset of color strings per iteration.
inline std::vector<std::vector<std::string>> string_refinement(const Graph& g, std::size_t k,
                                                               bool labels) {
  std::vector<std::string> colors(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v)
    colors[v] = labels ? std::to_string((*g.node_labels())[v]) : "0";
  std::vector<std::vector<std::string>> out;
  for (std::size_t it = 0;; ++it) {
    auto sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(sorted);
    if (it == k) break;
    std::vector<std::string> next(colors.size());
    for (NodeId v = 0; v < g.node_count(); ++v) {
      std::vector<std::string> nb;
      for (NodeId u : g.neighbors(v)) nb.push_back(colors[u]);
      std::sort(nb.begin(), nb.end());
      std::string s = "[" + colors[v] + "|";
      for (auto& x : nb) s += x + ",";
      next[v] = s + "]";
    }
    colors = std::move(next);
  }
  return out;
}

inline wlaudit::Dataset dataset_of(std::vector<Graph> graphs, std::vector<std::int64_t> labels,
                                   std::string name = "synthetic") {
  return wlaudit::make_dataset(std::move(name), std::move(graphs), labels);
}

}  // namespace fixtures
