#include "wlaudit/motif.hpp"

#include <algorithm>

#include "wlaudit/errors.hpp"

namespace wlaudit {
namespace {

// Pair index of (i, j), i < j, within a 4-node mask.
constexpr unsigned pair_bit(unsigned i, unsigned j) {
  constexpr unsigned kIndex[4][4] = {{0, 0, 1, 2}, {0, 0, 3, 4}, {1, 3, 0, 5}, {2, 4, 5, 0}};
  return kIndex[i][j];
}

constexpr Graphlet classify_mask(unsigned mask) {
  unsigned degree[4] = {0, 0, 0, 0};
  unsigned edges = 0;
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = i + 1; j < 4; ++j) {
      if (mask >> pair_bit(i, j) & 1u) {
        ++degree[i];
        ++degree[j];
        ++edges;
      }
    }
  }
  // Connectivity by closure from node 0.
  unsigned reached = 1;
  for (unsigned round = 0; round < 3; ++round) {
    for (unsigned i = 0; i < 4; ++i) {
      if (!(reached >> i & 1u)) continue;
      for (unsigned j = 0; j < 4; ++j) {
        if (i != j && (mask >> pair_bit(i < j ? i : j, i < j ? j : i) & 1u)) reached |= 1u << j;
      }
    }
  }
  if (reached != 0xF) return Graphlet::kNone;
  unsigned max_degree = 0;
  for (unsigned d : degree) max_degree = d > max_degree ? d : max_degree;
  switch (edges) {
    case 3: return max_degree == 3 ? Graphlet::kClaw : Graphlet::kPath4;
    case 4: return max_degree == 3 ? Graphlet::kPaw : Graphlet::kCycle4;
    case 5: return Graphlet::kDiamond;
    case 6: return Graphlet::kClique4;
    default: return Graphlet::kNone;
  }
}

constexpr std::array<Graphlet, 64> kFourNodeTypes = [] {
  std::array<Graphlet, 64> table{};
  for (unsigned mask = 0; mask < 64; ++mask) table[mask] = classify_mask(mask);
  return table;
}();

// Adjacency test: a bit matrix for graphs up to kDenseLimit nodes, sorted
// neighbor lists otherwise.
class Adjacency {
 public:
  static constexpr std::size_t kDenseLimit = 8192;

  explicit Adjacency(const Graph& g) : g_(g) {
    if (g.node_count() <= kDenseLimit) {
      words_ = (g.node_count() + 63) / 64;
      bits_.assign(words_ * g.node_count(), 0);
      for (auto [u, v] : g.edges()) {
        bits_[u * words_ + v / 64] |= 1ULL << (v % 64);
        bits_[v * words_ + u / 64] |= 1ULL << (u % 64);
      }
    }
  }

  bool operator()(NodeId u, NodeId v) const noexcept {
    if (!bits_.empty()) return bits_[u * words_ + v / 64] >> (v % 64) & 1ULL;
    return g_.has_edge(u, v);
  }

 private:
  const Graph& g_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

class Census {
 public:
  Census(const Graph& g, std::size_t max_size, std::uint64_t budget)
      : g_(g), adjacent_(g), max_size_(max_size), budget_(budget) {}

  MotifVector run() {
    out_.max_size = max_size_;
    out_.node_count = g_.node_count();
    std::vector<NodeId> extension;
    for (NodeId v = 0; v < g_.node_count(); ++v) {
      extension.clear();
      for (NodeId u : g_.neighbors(v)) {
        if (u > v) extension.push_back(u);
      }
      subgraph_[0] = v;
      extend(1, extension, v);
    }
    return out_;
  }

 private:
  void record(std::size_t size) {
    if (size == 2) {
      ++out_.edge_count;
      return;
    }
    if (++enumerated_ > budget_) throw CountingInfeasibleError(budget_, 0);
    if (size == 3) {
      const unsigned edges = adjacent_(subgraph_[0], subgraph_[1]) +
                             adjacent_(subgraph_[0], subgraph_[2]) +
                             adjacent_(subgraph_[1], subgraph_[2]);
      if (edges == 3) {
        ++out_.triangle;
      } else {
        ++out_.path3;
      }
      return;
    }
    unsigned mask = 0;
    for (unsigned i = 0; i < 4; ++i) {
      for (unsigned j = i + 1; j < 4; ++j) {
        if (adjacent_(subgraph_[i], subgraph_[j])) mask |= 1u << pair_bit(i, j);
      }
    }
    switch (kFourNodeTypes[mask]) {
      case Graphlet::kPath4: ++out_.path4; break;
      case Graphlet::kClaw: ++out_.claw; break;
      case Graphlet::kCycle4: ++out_.cycle4; break;
      case Graphlet::kPaw: ++out_.paw; break;
      case Graphlet::kDiamond: ++out_.diamond; break;
      case Graphlet::kClique4: ++out_.clique4; break;
      default: break;  // unreachable: ESU only emits connected sets
    }
  }

  // ESU step: subgraph_[0, size) is connected, `extension` holds candidate
  // nodes greater than `root` outside the exclusive neighborhood already used.
  void extend(std::size_t size, std::vector<NodeId> extension, NodeId root) {
    if (size >= 2) record(size);
    if (size == max_size_) return;
    while (!extension.empty()) {
      const NodeId w = extension.back();
      extension.pop_back();
      std::vector<NodeId> next = extension;
      if (size + 1 < max_size_) {
        for (NodeId u : g_.neighbors(w)) {
          // Nodes outside N[subgraph] cannot already be in the extension.
          if (u > root && !exclusive_blocked(u, size)) next.push_back(u);
        }
      }
      subgraph_[size] = w;
      extend(size + 1, std::move(next), root);
    }
  }

  // True if u is in the current subgraph or adjacent to any of its nodes.
  bool exclusive_blocked(NodeId u, std::size_t size) const {
    for (std::size_t i = 0; i < size; ++i) {
      if (subgraph_[i] == u || adjacent_(subgraph_[i], u)) return true;
    }
    return false;
  }

  const Graph& g_;
  Adjacency adjacent_;
  std::size_t max_size_;
  std::uint64_t budget_;
  std::uint64_t enumerated_ = 0;
  std::array<NodeId, 4> subgraph_{};
  MotifVector out_;
};

}  // namespace

Graphlet classify_four(unsigned mask) { return kFourNodeTypes[mask & 63u]; }

std::vector<std::uint64_t> MotifVector::columns() const {
  std::vector<std::uint64_t> c = {node_count, edge_count};
  if (max_size >= 3) c.insert(c.end(), {path3, triangle});
  if (max_size >= 4) c.insert(c.end(), {path4, claw, cycle4, paw, diamond, clique4});
  return c;
}

std::vector<std::uint64_t> MotifVector::largest_size_counts() const {
  switch (max_size) {
    case 2: return {edge_count};
    case 3: return {path3, triangle};
    default: return {path4, claw, cycle4, paw, diamond, clique4};
  }
}

std::vector<std::string_view> motif_column_names(std::size_t max_size) {
  std::vector<std::string_view> names = {"node_count", "edge_count"};
  if (max_size >= 3) names.insert(names.end(), {"p3", "triangle"});
  if (max_size >= 4) names.insert(names.end(), {"p4", "claw", "c4", "paw", "diamond", "k4"});
  return names;
}

MotifVector motif_vector(const Graph& g, std::size_t max_size, std::uint64_t budget) {
  if (max_size < 2 || max_size > 4) {
    throw Error(ErrorKind::kCompute, "motif size must be 2, 3 or 4, got " + std::to_string(max_size));
  }
  return Census(g, max_size, budget).run();
}

}  // namespace wlaudit
