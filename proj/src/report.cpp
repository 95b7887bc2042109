#include "wlaudit/report.hpp"

#include <ostream>

namespace wlaudit {
namespace {

nlohmann::ordered_json pct_value(const Percentage& p) {
  return static_cast<double>(p.hundredths()) / 100.0;
}

nlohmann::ordered_json ratio(const Percentage& p) {
  return nlohmann::ordered_json::array({p.numerator(), p.denominator()});
}

// Two-decimal fraction in [0, 1], e.g. 87.23% -> "0.87".
std::string fraction(const Percentage& p) {
  return Percentage(p.numerator(), p.denominator() * 100).to_string();
}

}  // namespace

void write_audit_csv(std::ostream& out, std::span<const AuditReport> reports) {
  out << "dataset,label_mode,k,identifiable_pct,upper_bound_pct,unique_pct\n";
  for (const auto& report : reports) {
    for (const auto& row : report.rows) {
      out << report.dataset << ',' << to_string(row.label_mode) << ',' << row.k << ','
          << row.identifiable.to_string() << ',' << row.upper_bound.to_string() << ','
          << row.unique.to_string() << '\n';
    }
  }
}

nlohmann::ordered_json audit_json(std::span<const AuditReport> reports, bool include_timing) {
  nlohmann::ordered_json datasets = nlohmann::ordered_json::array();
  for (const auto& report : reports) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
      rows.push_back({{"label_mode", to_string(row.label_mode)},
                      {"k", row.k},
                      {"identifiable_pct", pct_value(row.identifiable)},
                      {"upper_bound_pct", pct_value(row.upper_bound)},
                      {"unique_pct", pct_value(row.unique)},
                      {"identifiable", ratio(row.identifiable)},
                      {"upper_bound", ratio(row.upper_bound)},
                      {"unique", ratio(row.unique)}});
    }
    nlohmann::ordered_json entry = {{"dataset", report.dataset},
                                    {"graphs", report.graph_count},
                                    {"classes", report.num_classes},
                                    {"node_label_values", report.node_label_values},
                                    {"has_node_labels", report.has_node_labels},
                                    {"k_max", report.k_max},
                                    {"identifiability", to_string(report.convention)},
                                    {"rows", std::move(rows)}};
    if (include_timing) entry["seconds"] = report.seconds;
    datasets.push_back(std::move(entry));
  }
  return {{"datasets", std::move(datasets)}};
}

void write_audit_table(std::ostream& out, const AuditReport& report) {
  out << report.dataset << ": " << report.graph_count << " graphs, " << report.num_classes
      << " classes, ";
  if (report.has_node_labels) {
    out << report.node_label_values << " node labels";
  } else {
    out << "no node labels";
  }
  out << " (identifiability over " << to_string(report.convention) << ")\n";

  for (LabelMode mode : {LabelMode::kWithLabels, LabelMode::kWithoutLabels}) {
    if (!report.row(mode, 0)) continue;
    const std::string suffix = mode == LabelMode::kWithLabels ? "with labels" : "without labels";
    out << "  unique fraction, " << suffix << ": " << fraction(report.row(mode, 0)->unique)
        << '\n';
    out << "  k:                              ";
    for (std::size_t k = 0; k <= report.k_max; ++k) out << (k ? " " : "") << k;
    out << '\n';
    out << "  identifiable %, " << suffix << (mode == LabelMode::kWithLabels ? ":    " : ": ");
    for (std::size_t k = 0; k <= report.k_max; ++k) {
      out << (k ? " " : "") << report.row(mode, k)->identifiable.to_string();
    }
    out << '\n';
    out << "  upper bound %, " << suffix << (mode == LabelMode::kWithLabels ? ":     " : ":  ");
    for (std::size_t k = 0; k <= report.k_max; ++k) {
      out << (k ? " " : "") << report.row(mode, k)->upper_bound.to_string();
    }
    out << '\n';
  }
}

void write_motif_csv(std::ostream& out, std::span<const MotifReport> reports) {
  out << "dataset,max_size,key,status,identifiable_pct,upper_bound_pct\n";
  for (const auto& r : reports) {
    out << r.dataset << ',' << r.max_size << ',' << to_string(r.key) << ',';
    if (r.skipped) {
      out << "skipped: " << r.skip_reason << ",,\n";
    } else {
      out << "ok," << r.identifiable.to_string() << ',' << r.upper_bound.to_string() << '\n';
    }
  }
}

void write_motif_vectors_csv(std::ostream& out, std::span<const MotifReport> reports,
                             std::span<const Dataset* const> datasets) {
  const std::size_t max_size = reports.empty() ? 4 : reports.front().max_size;
  out << "dataset,graph,class";
  for (auto name : motif_column_names(max_size)) out << ',' << name;
  out << '\n';
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    if (r.skipped) continue;
    for (std::size_t g = 0; g < r.vectors.size(); ++g) {
      out << r.dataset << ',' << g << ',' << datasets[i]->class_label_values[datasets[i]->class_labels[g]];
      for (auto c : r.vectors[g].columns()) out << ',' << c;
      out << '\n';
    }
  }
}

nlohmann::ordered_json motif_json(std::span<const MotifReport> reports) {
  nlohmann::ordered_json datasets = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json entry = {{"dataset", r.dataset},
                                    {"graphs", r.graph_count},
                                    {"max_size", r.max_size},
                                    {"key", to_string(r.key)}};
    if (r.skipped) {
      entry["status"] = "skipped: " + r.skip_reason;
    } else {
      entry["status"] = "ok";
      entry["identifiable_pct"] = pct_value(r.identifiable);
      entry["upper_bound_pct"] = pct_value(r.upper_bound);
      entry["identifiable"] = ratio(r.identifiable);
      entry["upper_bound"] = ratio(r.upper_bound);
    }
    datasets.push_back(std::move(entry));
  }
  return {{"datasets", std::move(datasets)}};
}

void write_motif_table(std::ostream& out, const MotifReport& r) {
  out << r.dataset << ": motifs up to " << r.max_size << " nodes (" << to_string(r.key) << "): ";
  if (r.skipped) {
    out << "skipped: " << r.skip_reason << '\n';
    return;
  }
  out << "identifiable " << r.identifiable.to_string() << ", upper bound "
      << r.upper_bound.to_string() << '\n';
}

}  // namespace wlaudit
