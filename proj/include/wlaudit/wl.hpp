#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wlaudit/dataset.hpp"
#include "wlaudit/graph.hpp"

namespace wlaudit {

using ColorId = std::uint32_t;

/// Exact interner behind 1-WL recoloring.
///
/// A refinement key is the pair (previous color, sorted multiset of neighbor
/// colors); every distinct key gets the next dense id, identical keys always
/// get the same id. Raw node labels are seeded into the same id space, so ids
/// are unique across iterations and a color determines its whole history.
/// Sharing one table across a dataset makes signatures comparable between
/// graphs. Not thread-safe for writers; see compute_signatures() for the
/// parallel path.
class ColorTable {
 public:
  ColorTable();

  /// Initial color for a raw node label (label 0 doubles as the constant color).
  ColorId seed(NodeLabel raw_label);

  /// Color for (parent, neighbor multiset); `sorted_neighbors` must be ascending.
  ColorId intern(ColorId parent, std::span<const ColorId> sorted_neighbors);

  /// Number of ids handed out so far; ids are exactly [0, size()).
  std::size_t size() const noexcept { return hashes_.size(); }

  /// The key an id was assigned for: parent followed by neighbor colors.
  /// Seed ids return {kSeedParent, raw_label}.
  std::span<const ColorId> key(ColorId id) const noexcept;

  static constexpr ColorId kSeedParent = 0xFFFFFFFFu;

 private:
  ColorId intern_key(std::span<const ColorId> key);
  void grow();

  std::vector<ColorId> arena_;          // concatenated keys
  std::vector<std::size_t> offsets_;    // key of id i is arena_[offsets_[i], offsets_[i+1])
  std::vector<std::uint64_t> hashes_;   // per id
  std::vector<ColorId> slots_;          // open addressing over ids, kEmpty when free
  static constexpr ColorId kEmpty = 0xFFFFFFFFu;
};

/// Node colors after `iteration` refinement steps.
struct Coloring {
  std::size_t iteration = 0;
  std::vector<ColorId> colors;
};

/// Sparse color histogram of one graph at one iteration, sorted by color id.
struct WlSignature {
  std::size_t iteration = 0;
  std::vector<std::pair<ColorId, std::uint32_t>> histogram;

  std::size_t node_count() const noexcept;
  /// "color:count" pairs separated by single spaces, e.g. "3:1 4:2".
  std::string to_string() const;

  friend bool operator==(const WlSignature&, const WlSignature&) = default;
  friend auto operator<=>(const WlSignature&, const WlSignature&) = default;
};

struct WlSignatureHash {
  std::size_t operator()(const WlSignature& s) const noexcept;
};

/// Throws MissingLabelsError if use_labels and the graph is unlabeled.
Coloring initial_coloring(const Graph& g, bool use_labels, ColorTable& table);

/// One recoloring step: new color of v = intern(old(v), sorted old colors of N(v)).
Coloring refine_step(const Graph& g, const Coloring& coloring, ColorTable& table);

WlSignature histogram_of(const Coloring& coloring);

/// Histograms for iterations 0..k. Always runs exactly k steps.
std::vector<WlSignature> signature(const Graph& g, std::size_t k, bool use_labels,
                                   ColorTable& table);

/// Dense vector: entry j counts color j. Throws DimensionTooSmallError.
std::vector<std::uint32_t> to_vector(const WlSignature& sig, std::size_t dim);

/// Union of per-iteration histograms (the "all iterations" histogram).
/// Ids are unique across iterations, so this is a plain merge.
WlSignature concatenated(std::span<const WlSignature> per_iteration);

/// Smallest k <= max_k whose partition equals the one at k+1, else max_k.
std::size_t stable_iteration(const Graph& g, bool use_labels, ColorTable& table,
                             std::size_t max_k);

/// Number of color classes.
std::size_t class_count(const Coloring& coloring);

/// True iff both colorings induce the same node partition, ignoring ids.
bool same_partition(std::span<const ColorId> a, std::span<const ColorId> b);

/// Per-graph, per-iteration signatures of a whole dataset under one table:
/// result[g][k] for k in 0..k_max.
///
/// With threads > 1 each step is split in two phases: refinement keys are
/// built per graph in parallel, then interned sequentially in dataset order,
/// so color ids do not depend on the thread count.
std::vector<std::vector<WlSignature>> compute_signatures(const Dataset& d, std::size_t k_max,
                                                         bool use_labels, ColorTable& table,
                                                         unsigned threads = 1);

}  // namespace wlaudit
