#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wlaudit/dataset.hpp"
#include "wlaudit/iso.hpp"
#include "wlaudit/wl.hpp"

namespace wlaudit {

/// Exact ratio reported as a percentage with two decimals.
class Percentage {
 public:
  Percentage() = default;
  Percentage(std::uint64_t numerator, std::uint64_t denominator)
      : numerator_(numerator), denominator_(denominator) {}

  std::uint64_t numerator() const noexcept { return numerator_; }
  std::uint64_t denominator() const noexcept { return denominator_; }
  double value() const noexcept;
  /// Hundredths of a percent, rounded half away from zero (32.3170... -> 3232).
  std::int64_t hundredths() const noexcept;
  /// Two-decimal string, e.g. "32.32".
  std::string to_string() const;

 private:
  std::uint64_t numerator_ = 0;
  std::uint64_t denominator_ = 1;
};

/// Which population the identifiable share is measured over.
enum class Identifiability {
  // Graphs with no isomorphic duplicate; a graph counts when no other graph of
  // the dataset shares its representation. Reproduces the published tables.
  kUniqueGraphs,
  // One representative per isomorphism class.
  kIsoClasses,
  // Every graph, duplicates included.
  kRawGraphs,
};

enum class LabelMode { kWithLabels, kWithoutLabels };

const char* to_string(Identifiability convention);
const char* to_string(LabelMode mode);

/// Graphs (or class representatives) grouped by equal iteration-k signature.
/// Groups appear in order of their first member.
struct SignatureGrouping {
  std::size_t k = 0;
  std::vector<WlSignature> keys;
  std::vector<std::vector<std::size_t>> groups;
};

/// Dense group id per item, numbering distinct keys in first-seen order.
template <typename Key>
std::vector<std::size_t> group_ids(std::span<const Key> keys) {
  std::map<Key, std::size_t> ids;
  std::vector<std::size_t> out;
  out.reserve(keys.size());
  for (const auto& key : keys) out.push_back(ids.try_emplace(key, ids.size()).first->second);
  return out;
}

/// Identifiable share given each graph's representation group.
Percentage identifiable_share(std::span<const std::size_t> group_of, const IsoClassIndex& classes,
                              Identifiability convention);

/// Majority-vote accuracy: sum over groups of the most frequent class count,
/// divided by the number of graphs.
Percentage majority_vote_share(std::span<const std::size_t> group_of,
                               std::span<const ClassLabel> labels);

/// Class predicted for a group: most frequent, smallest id on ties.
ClassLabel majority_class(std::span<const std::size_t> members, std::span<const ClassLabel> labels);

/// Groups graphs by iteration-k signature. With `dedup` only the first member
/// of each isomorphism class takes part. Throws MissingLabelsError.
SignatureGrouping group_by_signature(const Dataset& d, std::size_t k, bool use_labels,
                                     const IsoClassIndex* dedup = nullptr);

Percentage identifiable_fraction(const Dataset& d, std::size_t k, bool use_labels,
                                 Identifiability convention = Identifiability::kUniqueGraphs);

Percentage upper_bound_accuracy(const Dataset& d, std::size_t k, bool use_labels);

struct BaselineResult {
  Percentage identifiable;
  Percentage upper_bound;
};

/// Both metrics on iteration-0 signatures (label histogram, or node count).
BaselineResult k0_baseline(const Dataset& d, bool use_labels);

struct AuditOptions {
  std::size_t k_max = 3;
  // Modes to report; label modes are skipped for datasets without node labels.
  std::vector<LabelMode> label_modes = {LabelMode::kWithLabels, LabelMode::kWithoutLabels};
  Identifiability convention = Identifiability::kUniqueGraphs;
  std::size_t iso_budget = kDefaultIsoBudget;
  unsigned threads = 1;
};

struct AuditRow {
  LabelMode label_mode = LabelMode::kWithoutLabels;
  std::size_t k = 0;
  Percentage identifiable;
  Percentage upper_bound;
  // Share of graphs without an isomorphic duplicate, labels respected in
  // kWithLabels rows.
  Percentage unique;
};

struct AuditReport {
  std::string dataset;
  std::size_t graph_count = 0;
  std::size_t num_classes = 0;
  std::size_t node_label_values = 0;
  bool has_node_labels = false;
  std::size_t k_max = 0;
  Identifiability convention = Identifiability::kUniqueGraphs;
  std::vector<AuditRow> rows;
  double seconds = 0.0;

  const AuditRow* row(LabelMode mode, std::size_t k) const;
};

/// Rows for k = 0..k_max in every applicable label mode. Throws
/// EmptyDatasetError, MissingLabelsError when labels are explicitly the only
/// requested mode of an unlabeled dataset, and IsoTimeoutError.
AuditReport run_audit(const Dataset& d, const AuditOptions& options = {});

}  // namespace wlaudit
