#include "wlaudit/audit.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "wlaudit/errors.hpp"

namespace wlaudit {

// An empty population (e.g. no graph without duplicates) reads as 100%:
// nothing in it is misidentified.
double Percentage::value() const noexcept {
  if (denominator_ == 0) return 100.0;
  return 100.0 * static_cast<double>(numerator_) / static_cast<double>(denominator_);
}

std::int64_t Percentage::hundredths() const noexcept {
  if (denominator_ == 0) return 10000;
  return static_cast<std::int64_t>((numerator_ * 20000 + denominator_) / (2 * denominator_));
}

std::string Percentage::to_string() const {
  const std::int64_t h = hundredths();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%lld.%02lld", static_cast<long long>(h / 100),
                static_cast<long long>(h % 100));
  return buf;
}

const char* to_string(Identifiability convention) {
  switch (convention) {
    case Identifiability::kUniqueGraphs: return "unique-graphs";
    case Identifiability::kIsoClasses: return "iso-classes";
    case Identifiability::kRawGraphs: return "raw-graphs";
  }
  return "?";
}

const char* to_string(LabelMode mode) {
  return mode == LabelMode::kWithLabels ? "with" : "without";
}

const AuditRow* AuditReport::row(LabelMode mode, std::size_t k) const {
  for (const auto& r : rows) {
    if (r.label_mode == mode && r.k == k) return &r;
  }
  return nullptr;
}

Percentage identifiable_share(std::span<const std::size_t> group_of, const IsoClassIndex& classes,
                              Identifiability convention) {
  const std::size_t n = group_of.size();
  const std::size_t group_count =
      n == 0 ? 0 : *std::max_element(group_of.begin(), group_of.end()) + 1;

  switch (convention) {
    case Identifiability::kRawGraphs:
    case Identifiability::kUniqueGraphs: {
      std::vector<std::size_t> size(group_count, 0);
      for (std::size_t g : group_of) ++size[g];
      std::uint64_t hits = 0, population = 0;
      for (std::size_t g = 0; g < n; ++g) {
        if (convention == Identifiability::kUniqueGraphs && !classes.is_unique(g)) continue;
        ++population;
        if (size[group_of[g]] == 1) ++hits;
      }
      return {hits, population};
    }
    case Identifiability::kIsoClasses: {
      std::vector<std::size_t> reps_in_group(group_count, 0);
      for (const auto& cls : classes.classes) ++reps_in_group[group_of[cls.front()]];
      std::uint64_t hits = 0;
      for (const auto& cls : classes.classes) {
        if (reps_in_group[group_of[cls.front()]] == 1) ++hits;
      }
      return {hits, classes.classes.size()};
    }
  }
  return {};
}

ClassLabel majority_class(std::span<const std::size_t> members,
                          std::span<const ClassLabel> labels) {
  std::map<ClassLabel, std::size_t> counts;
  for (std::size_t g : members) ++counts[labels[g]];
  ClassLabel best = 0;
  std::size_t best_count = 0;
  // std::map iterates ascending, so the first maximum is the smallest id.
  for (const auto& [label, count] : counts) {
    if (count > best_count) {
      best = label;
      best_count = count;
    }
  }
  return best;
}

Percentage majority_vote_share(std::span<const std::size_t> group_of,
                               std::span<const ClassLabel> labels) {
  std::map<std::pair<std::size_t, ClassLabel>, std::size_t> counts;
  for (std::size_t g = 0; g < group_of.size(); ++g) ++counts[{group_of[g], labels[g]}];
  std::map<std::size_t, std::size_t> best;
  for (const auto& [key, count] : counts) {
    auto& b = best[key.first];
    b = std::max(b, count);
  }
  std::uint64_t correct = 0;
  for (const auto& [group, count] : best) correct += count;
  return {correct, group_of.size()};
}

namespace {

std::vector<std::size_t> signature_groups(const Dataset& d, std::size_t k, bool use_labels) {
  ColorTable table;
  const auto sigs = compute_signatures(d, k, use_labels, table);
  std::vector<WlSignature> at_k;
  at_k.reserve(sigs.size());
  for (const auto& per_graph : sigs) at_k.push_back(per_graph[k]);
  return group_ids<WlSignature>(at_k);
}

void require_nonempty(const Dataset& d) {
  if (d.empty()) throw EmptyDatasetError(d.name);
}

}  // namespace

SignatureGrouping group_by_signature(const Dataset& d, std::size_t k, bool use_labels,
                                     const IsoClassIndex* dedup) {
  ColorTable table;
  const auto sigs = compute_signatures(d, k, use_labels, table);
  std::vector<std::size_t> members;
  if (dedup) {
    for (const auto& cls : dedup->classes) members.push_back(cls.front());
    std::sort(members.begin(), members.end());
  } else {
    for (std::size_t g = 0; g < d.size(); ++g) members.push_back(g);
  }
  SignatureGrouping grouping;
  grouping.k = k;
  std::map<WlSignature, std::size_t> index;
  for (std::size_t g : members) {
    const auto [it, fresh] = index.try_emplace(sigs[g][k], grouping.groups.size());
    if (fresh) {
      grouping.keys.push_back(sigs[g][k]);
      grouping.groups.emplace_back();
    }
    grouping.groups[it->second].push_back(g);
  }
  return grouping;
}

Percentage identifiable_fraction(const Dataset& d, std::size_t k, bool use_labels,
                                 Identifiability convention) {
  require_nonempty(d);
  const auto groups = signature_groups(d, k, use_labels);
  const IsoClassIndex classes = isomorphism_classes(d, use_labels);
  return identifiable_share(groups, classes, convention);
}

Percentage upper_bound_accuracy(const Dataset& d, std::size_t k, bool use_labels) {
  require_nonempty(d);
  return majority_vote_share(signature_groups(d, k, use_labels), d.class_labels);
}

BaselineResult k0_baseline(const Dataset& d, bool use_labels) {
  return {identifiable_fraction(d, 0, use_labels), upper_bound_accuracy(d, 0, use_labels)};
}

AuditReport run_audit(const Dataset& d, const AuditOptions& options) {
  require_nonempty(d);
  const auto start = std::chrono::steady_clock::now();

  AuditReport report;
  report.dataset = d.name;
  report.graph_count = d.size();
  report.num_classes = d.num_classes;
  report.has_node_labels = d.has_node_labels;
  report.node_label_values = distinct_node_labels(d);
  report.k_max = options.k_max;
  report.convention = options.convention;

  std::vector<LabelMode> modes;
  for (LabelMode mode : options.label_modes) {
    if (std::find(modes.begin(), modes.end(), mode) != modes.end()) continue;
    if (mode == LabelMode::kWithLabels && !d.has_node_labels) {
      if (options.label_modes.size() == 1) throw MissingLabelsError();
      continue;
    }
    modes.push_back(mode);
  }

  for (LabelMode mode : modes) {
    const bool use_labels = mode == LabelMode::kWithLabels;
    const IsoClassIndex classes =
        isomorphism_classes(d, use_labels, options.iso_budget, options.threads);
    const Percentage unique(classes.unique_count(), d.size());
    ColorTable table;
    const auto sigs = compute_signatures(d, options.k_max, use_labels, table, options.threads);
    for (std::size_t k = 0; k <= options.k_max; ++k) {
      std::vector<WlSignature> at_k;
      at_k.reserve(d.size());
      for (const auto& per_graph : sigs) at_k.push_back(per_graph[k]);
      const auto groups = group_ids<WlSignature>(at_k);
      report.rows.push_back({mode, k, identifiable_share(groups, classes, options.convention),
                             majority_vote_share(groups, d.class_labels), unique});
    }
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace wlaudit
