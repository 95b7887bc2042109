#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wlaudit/dataset.hpp"
#include "wlaudit/graph.hpp"
#include "wlaudit/wl.hpp"

namespace wlaudit {

inline constexpr std::size_t kDefaultIsoBudget = 2'000'000;

struct WlTestResult {
  enum class Verdict { kDistinguished, kIndistinguishable };
  Verdict verdict = Verdict::kIndistinguishable;
  // First differing iteration when distinguished; otherwise the iteration at
  // which both colorings were stable (or max_k).
  std::size_t iteration = 0;
  // Histograms of both graphs for iterations 0..iteration under the shared table.
  std::vector<WlSignature> first_signatures;
  std::vector<WlSignature> second_signatures;

  bool distinguished() const noexcept { return verdict == Verdict::kDistinguished; }
};

/// Pairwise 1-WL test with a shared color table. Stops at the first
/// iteration whose histograms differ, or once both partitions are stable.
WlTestResult wl_test(const Graph& g, const Graph& h, bool use_labels, std::size_t max_k);

struct IsoOptions {
  // Require label preservation when both graphs carry labels.
  bool use_labels = true;
  // Cap on search-tree nodes; exceeding it throws IsoTimeoutError.
  std::size_t budget = kDefaultIsoBudget;
};

struct IsoResult {
  bool isomorphic = false;
  // When isomorphic: witness[v] is the node of h matched to node v of g.
  std::optional<std::vector<NodeId>> witness;
  std::size_t expansions = 0;
};

/// Exact isomorphism by individualization-refinement: both graphs are
/// refined jointly to a stable coloring, then nodes of the smallest
/// non-trivial cell are individualized pairwise with re-refinement after
/// each choice. Throws IsoTimeoutError, or MissingLabelsError when labels are
/// requested and exactly one graph has them.
IsoResult exact_isomorphic(const Graph& g, const Graph& h, const IsoOptions& options = {});

/// Checks that `mapping` is an edge- and (optionally) label-preserving bijection.
bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<NodeId>& mapping,
                    bool check_labels);

/// Partition of a dataset into exact-isomorphism classes.
struct IsoClassIndex {
  // Members in ascending order; classes ordered by their smallest member.
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of;

  std::size_t class_size_of(std::size_t graph) const { return classes[class_of[graph]].size(); }
  bool is_unique(std::size_t graph) const { return class_size_of(graph) == 1; }
  std::size_t unique_count() const;
};

/// Buckets graphs by (node count, edge count, stable WL signature) and splits
/// each bucket with exact_isomorphic. Labels participate when use_labels.
/// IsoTimeoutError names the offending pair of dataset indices.
IsoClassIndex isomorphism_classes(const Dataset& d, bool use_labels,
                                  std::size_t budget = kDefaultIsoBudget, unsigned threads = 1);

/// Share of graphs whose class is a singleton, in [0, 1].
double unique_fraction(const IsoClassIndex& idx, std::size_t n);

}  // namespace wlaudit
