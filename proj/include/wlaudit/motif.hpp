#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "wlaudit/graph.hpp"

namespace wlaudit {

inline constexpr std::uint64_t kDefaultMotifBudget = 100'000'000;

/// Connected graphlet types with 2..4 nodes.
enum class Graphlet : std::uint8_t {
  kEdge,
  kPath3,     // P3
  kTriangle,
  kPath4,     // P4
  kClaw,      // K1,3
  kCycle4,    // C4
  kPaw,       // triangle with a pendant
  kDiamond,   // K4 minus an edge
  kClique4,   // K4
  kNone,      // disconnected 4-node set
};

/// Induced connected graphlet counts of one graph, up to `max_size` nodes.
/// Counts for sizes above max_size are zero and not reported.
struct MotifVector {
  std::size_t max_size = 4;
  std::uint64_t node_count = 0;
  std::uint64_t edge_count = 0;
  std::uint64_t path3 = 0;
  std::uint64_t triangle = 0;
  std::uint64_t path4 = 0;
  std::uint64_t claw = 0;
  std::uint64_t cycle4 = 0;
  std::uint64_t paw = 0;
  std::uint64_t diamond = 0;
  std::uint64_t clique4 = 0;

  /// Present counts in the fixed report order:
  /// node_count, edge_count, p3, triangle, p4, claw, c4, paw, diamond, k4.
  std::vector<std::uint64_t> columns() const;
  /// Counts of the graphlets with exactly max_size nodes.
  std::vector<std::uint64_t> largest_size_counts() const;

  friend bool operator==(const MotifVector&, const MotifVector&) = default;
  friend auto operator<=>(const MotifVector&, const MotifVector&) = default;
};

/// Column names matching MotifVector::columns() for a given max_size.
std::vector<std::string_view> motif_column_names(std::size_t max_size);

/// Type of the graph induced on 4 nodes by a 6-bit edge mask. Bit order:
/// (0,1) (0,2) (0,3) (1,2) (1,3) (2,3).
Graphlet classify_four(unsigned mask);

/// Counts every connected induced subgraph with at most max_size (2..4)
/// nodes by ESU enumeration. Throws CountingInfeasibleError once more than
/// `budget` subgraphs of size >= 3 have been enumerated.
MotifVector motif_vector(const Graph& g, std::size_t max_size = 4,
                         std::uint64_t budget = kDefaultMotifBudget);

}  // namespace wlaudit
