#pragma once

#include <iosfwd>
#include <span>

#include <json.hpp>

#include "wlaudit/audit.hpp"
#include "wlaudit/motif_audit.hpp"

namespace wlaudit {

/// CSV, one row per (dataset, label mode, k):
///   dataset,label_mode,k,identifiable_pct,upper_bound_pct,unique_pct
/// label_mode is "with" or "without"; percentages carry two decimals.
void write_audit_csv(std::ostream& out, std::span<const AuditReport> reports);

/// {"datasets": [{"dataset", "graphs", "classes", "node_label_values",
///   "has_node_labels", "k_max", "identifiability", "rows": [{"label_mode",
///   "k", "identifiable_pct", "upper_bound_pct", "unique_pct",
///   "identifiable": [num, den], "upper_bound": [num, den],
///   "unique": [num, den]}]}]}
/// "seconds" is added per dataset only with include_timing, so default output
/// is byte-stable across runs.
nlohmann::ordered_json audit_json(std::span<const AuditReport> reports, bool include_timing = false);

/// Human-readable summary: one line per metric and label mode with values
/// for k = 0..k_max separated by single spaces.
void write_audit_table(std::ostream& out, const AuditReport& report);

/// dataset,max_size,key,status,identifiable_pct,upper_bound_pct
/// status is "ok" or "skipped: <reason>" with empty percentages.
void write_motif_csv(std::ostream& out, std::span<const MotifReport> reports);

/// dataset,graph,class,<motif columns...> for every graph of every
/// non-skipped report.
void write_motif_vectors_csv(std::ostream& out, std::span<const MotifReport> reports,
                             std::span<const Dataset* const> datasets);

nlohmann::ordered_json motif_json(std::span<const MotifReport> reports);

void write_motif_table(std::ostream& out, const MotifReport& report);

}  // namespace wlaudit
