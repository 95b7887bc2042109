#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wlaudit/audit.hpp"
#include "wlaudit/dataset.hpp"
#include "wlaudit/iso.hpp"
#include "wlaudit/motif.hpp"

namespace wlaudit {

/// Which counts make up the motif representation of a graph.
enum class MotifKey {
  // Counts of the graphlets with exactly max_size nodes (six types at size 4).
  kLargestSize,
  // Every reported column, node and edge counts included.
  kFullVector,
};

const char* to_string(MotifKey key);

struct MotifOptions {
  std::size_t max_size = 4;
  std::uint64_t budget = kDefaultMotifBudget;
  MotifKey key = MotifKey::kLargestSize;
  Identifiability convention = Identifiability::kUniqueGraphs;
  std::size_t iso_budget = kDefaultIsoBudget;
  unsigned threads = 1;
};

/// Motif vector of every graph, in dataset order. Throws
/// CountingInfeasibleError naming the first graph that exceeds the budget.
std::vector<MotifVector> motif_vectors(const Dataset& d, std::size_t max_size,
                                       std::uint64_t budget = kDefaultMotifBudget,
                                       unsigned threads = 1);

struct MotifReport {
  std::string dataset;
  std::size_t graph_count = 0;
  std::size_t max_size = 4;
  MotifKey key = MotifKey::kLargestSize;
  bool skipped = false;
  std::string skip_reason;  // set when skipped
  Percentage identifiable;
  Percentage upper_bound;
  std::vector<MotifVector> vectors;
};

/// Identifiable share and majority-vote bound with graphs grouped by motif
/// representation. Node labels never enter the vectors; uniqueness follows
/// the dataset (labeled isomorphism when node labels exist). Pass `classes`
/// to reuse a precomputed index.
MotifReport motif_identifiability(const Dataset& d, const MotifOptions& options = {},
                                  const IsoClassIndex* classes = nullptr);

/// Same as motif_identifiability but a budget overrun yields a skipped report
/// instead of an exception.
MotifReport motif_identifiability_or_skip(const Dataset& d, const MotifOptions& options = {});

}  // namespace wlaudit
