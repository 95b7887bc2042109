#include "wlaudit/motif_audit.hpp"

#include <mutex>

#include "parallel.hpp"
#include "wlaudit/errors.hpp"

namespace wlaudit {

const char* to_string(MotifKey key) {
  return key == MotifKey::kLargestSize ? "largest-size" : "full-vector";
}

std::vector<MotifVector> motif_vectors(const Dataset& d, std::size_t max_size,
                                       std::uint64_t budget, unsigned threads) {
  std::vector<MotifVector> out(d.size());
  std::mutex mutex;
  std::optional<std::size_t> failed;
  detail::parallel_for(d.size(), threads, [&](std::size_t g) {
    try {
      out[g] = motif_vector(d.graphs[g], max_size, budget);
    } catch (const CountingInfeasibleError&) {
      std::lock_guard lock(mutex);
      if (!failed || g < *failed) failed = g;
    }
  });
  if (failed) throw CountingInfeasibleError(budget, *failed);
  return out;
}

MotifReport motif_identifiability(const Dataset& d, const MotifOptions& options,
                                  const IsoClassIndex* classes) {
  if (d.empty()) throw EmptyDatasetError(d.name);
  MotifReport report;
  report.dataset = d.name;
  report.graph_count = d.size();
  report.max_size = options.max_size;
  report.key = options.key;
  report.vectors = motif_vectors(d, options.max_size, options.budget, options.threads);

  std::vector<std::vector<std::uint64_t>> keys;
  keys.reserve(d.size());
  for (const auto& v : report.vectors) {
    keys.push_back(options.key == MotifKey::kLargestSize ? v.largest_size_counts() : v.columns());
  }
  const auto groups = group_ids<std::vector<std::uint64_t>>(keys);

  std::optional<IsoClassIndex> own;
  if (!classes) {
    own = isomorphism_classes(d, d.has_node_labels, options.iso_budget, options.threads);
    classes = &*own;
  }
  report.identifiable = identifiable_share(groups, *classes, options.convention);
  report.upper_bound = majority_vote_share(groups, d.class_labels);
  return report;
}

MotifReport motif_identifiability_or_skip(const Dataset& d, const MotifOptions& options) {
  try {
    return motif_identifiability(d, options);
  } catch (const CountingInfeasibleError&) {
    MotifReport report;
    report.dataset = d.name;
    report.graph_count = d.size();
    report.max_size = options.max_size;
    report.key = options.key;
    report.skipped = true;
    report.skip_reason = "CountingInfeasible";
    return report;
  }
}

}  // namespace wlaudit
