// wlaudit: audit graph-classification datasets for 1-WL expressiveness.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "parallel.hpp"
#include "wlaudit/audit.hpp"
#include "wlaudit/edgelist.hpp"
#include "wlaudit/errors.hpp"
#include "wlaudit/fetch.hpp"
#include "wlaudit/iso.hpp"
#include "wlaudit/motif_audit.hpp"
#include "wlaudit/report.hpp"
#include "wlaudit/wl.hpp"

namespace fs = std::filesystem;
using namespace wlaudit;

namespace {

constexpr int kExitFetch = 2;
constexpr int kExitParse = 3;
constexpr int kExitCompute = 4;
constexpr int kExitBudget = 5;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kFetch: return kExitFetch;
    case ErrorKind::kParse:
    case ErrorKind::kInvalidGraph: return kExitParse;
    case ErrorKind::kCompute: return kExitCompute;
    case ErrorKind::kBudget: return kExitBudget;
  }
  return kExitCompute;
}

// Error raised while working on one dataset, kept with its name.
struct DatasetFailure {
  std::string dataset;
  std::string message;
  ErrorKind kind;
};

struct SourceOptions {
  std::vector<std::string> datasets;
  std::vector<std::string> data_dirs;
  std::string cache_dir;
  std::string base_url;
  unsigned parallel = 1;

  FetchConfig fetch_config() const {
    FetchConfig cfg = fetch_config_from_env();
    if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
    if (!base_url.empty()) cfg.base_url = base_url;
    return cfg;
  }

  std::vector<fs::path> roots() const {
    std::vector<fs::path> out(data_dirs.begin(), data_dirs.end());
    if (const char* env = std::getenv("WLAUDIT_DATA_DIR"); env && *env) out.emplace_back(env);
    return out;
  }
};

void add_source_options(CLI::App* cmd, SourceOptions& src) {
  cmd->add_option("-d,--dataset", src.datasets, "TU dataset name (repeatable)")->required();
  cmd->add_option("--data-dir", src.data_dirs,
                  "Directory searched for NAME/NAME_A.txt before the cache (repeatable)");
  cmd->add_option("--cache-dir", src.cache_dir,
                  "Download cache (default $WLAUDIT_CACHE_DIR or ~/.cache/wlaudit)");
  cmd->add_option("--base-url", src.base_url, "Dataset archive server");
  cmd->add_option("--parallel", src.parallel, "Worker threads")->check(CLI::PositiveNumber);
}

std::uint64_t parse_budget(const std::string& text) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || value < 1 || value > 1e18) {
    throw CLI::ValidationError("--budget", "expected a positive count such as 1e6, got " + text);
  }
  return static_cast<std::uint64_t>(value);
}

// Runs `work` for every dataset, datasets in parallel when threads allow.
// Either every dataset succeeds or the first failure (in input order) is
// returned, so no partial report is written.
template <typename Result, typename Work>
std::optional<DatasetFailure> for_each_dataset(const SourceOptions& src, std::vector<Result>& results,
                                               std::vector<Dataset>& datasets, Work work) {
  const FetchConfig cfg = src.fetch_config();
  const auto roots = src.roots();
  const std::size_t n = src.datasets.size();
  results.assign(n, Result{});
  datasets.assign(n, Dataset{});
  std::vector<std::optional<DatasetFailure>> failures(n);
  const unsigned outer = static_cast<unsigned>(std::min<std::size_t>(src.parallel, n));
  const unsigned inner = std::max(1u, src.parallel / std::max(1u, outer));
  detail::parallel_for(n, outer, [&](std::size_t i) {
    const std::string& name = src.datasets[i];
    try {
      datasets[i] = load_dataset(name, cfg, roots);
      results[i] = work(datasets[i], inner);
    } catch (const Error& e) {
      failures[i] = DatasetFailure{name, e.what(), e.kind()};
    } catch (const std::exception& e) {
      failures[i] = DatasetFailure{name, e.what(), ErrorKind::kCompute};
    }
  });
  for (auto& f : failures) {
    if (f) return f;
  }
  return std::nullopt;
}

int report_failure(const DatasetFailure& f) {
  std::cerr << "error: " << f.dataset << ": " << f.message << '\n';
  return exit_code_for(f.kind);
}

bool write_file(const std::string& path, const std::string& content) {
  if (path.empty()) return true;
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) {
    std::cerr << "error: cannot write " << path << '\n';
    return false;
  }
  return true;
}

Identifiability parse_convention(const std::string& s) {
  if (s == "classes") return Identifiability::kIsoClasses;
  if (s == "raw") return Identifiability::kRawGraphs;
  return Identifiability::kUniqueGraphs;
}

struct AuditArgs {
  SourceOptions src;
  std::size_t k = 3;
  bool no_node_labels = false;
  std::string labels = "both";
  std::string identifiability = "unique";
  std::string format = "table";
  std::string csv_path, json_path;
  bool timing = false;
  std::size_t iso_budget = kDefaultIsoBudget;
};

int cmd_audit(const AuditArgs& a) {
  AuditOptions options;
  options.k_max = a.k;
  options.convention = parse_convention(a.identifiability);
  options.iso_budget = a.iso_budget;
  if (a.no_node_labels || a.labels == "without") {
    options.label_modes = {LabelMode::kWithoutLabels};
  } else if (a.labels == "with") {
    options.label_modes = {LabelMode::kWithLabels};
  }

  std::vector<AuditReport> reports;
  std::vector<Dataset> datasets;
  if (auto failure = for_each_dataset(a.src, reports, datasets, [&](const Dataset& d, unsigned t) {
        AuditOptions o = options;
        o.threads = t;
        return run_audit(d, o);
      })) {
    return report_failure(*failure);
  }

  std::ostringstream csv, table;
  write_audit_csv(csv, reports);
  const std::string json = audit_json(reports, a.timing).dump(2) + "\n";
  for (const auto& r : reports) write_audit_table(table, r);

  if (!write_file(a.csv_path, csv.str()) || !write_file(a.json_path, json)) return kExitCompute;
  if (a.format == "csv") {
    std::cout << csv.str();
  } else if (a.format == "json") {
    std::cout << json;
  } else {
    std::cout << table.str();
  }
  return 0;
}

struct MotifArgs {
  SourceOptions src;
  std::size_t max_size = 4;
  std::string budget = "1e8";
  std::string key = "largest";
  std::string identifiability = "unique";
  std::string format = "table";
  std::string csv_path, json_path, vectors_path;
  std::size_t iso_budget = kDefaultIsoBudget;
};

int cmd_motifs(const MotifArgs& a) {
  MotifOptions options;
  options.max_size = a.max_size;
  options.budget = parse_budget(a.budget);
  options.key = a.key == "full" ? MotifKey::kFullVector : MotifKey::kLargestSize;
  options.convention = parse_convention(a.identifiability);
  options.iso_budget = a.iso_budget;

  std::vector<MotifReport> reports;
  std::vector<Dataset> datasets;
  if (auto failure = for_each_dataset(a.src, reports, datasets, [&](const Dataset& d, unsigned t) {
        MotifOptions o = options;
        o.threads = t;
        return motif_identifiability_or_skip(d, o);
      })) {
    return report_failure(*failure);
  }

  std::ostringstream csv, table, vectors;
  write_motif_csv(csv, reports);
  const std::string json = motif_json(reports).dump(2) + "\n";
  for (const auto& r : reports) write_motif_table(table, r);
  std::vector<const Dataset*> dataset_ptrs;
  for (const auto& d : datasets) dataset_ptrs.push_back(&d);
  if (!a.vectors_path.empty()) write_motif_vectors_csv(vectors, reports, dataset_ptrs);

  if (!write_file(a.csv_path, csv.str()) || !write_file(a.json_path, json) ||
      !write_file(a.vectors_path, vectors.str())) {
    return kExitCompute;
  }
  if (a.format == "csv") {
    std::cout << csv.str();
  } else if (a.format == "json") {
    std::cout << json;
  } else {
    std::cout << table.str();
  }
  return 0;
}

struct PairArgs {
  std::string first, second;
  bool no_node_labels = false;
  std::optional<std::size_t> k;
  std::size_t iso_budget = kDefaultIsoBudget;
};

int cmd_pair(const PairArgs& a) {
  try {
    const Graph g = read_edge_list(a.first);
    const Graph h = read_edge_list(a.second);
    const bool labels = !a.no_node_labels && g.has_node_labels() && h.has_node_labels();
    // Refinement stabilizes within n iterations, so n + 1 always suffices.
    const std::size_t max_k = a.k.value_or(std::max(g.node_count(), h.node_count()) + 1);
    const WlTestResult wl = wl_test(g, h, labels, max_k);
    const IsoResult iso = exact_isomorphic(g, h, {labels, a.iso_budget});

    std::cout << "WL: ";
    if (wl.distinguished()) {
      std::cout << "distinguished at k=" << wl.iteration;
    } else {
      std::cout << "indistinguishable";
    }
    std::cout << "; exact: " << (iso.isomorphic ? "isomorphic" : "non-isomorphic") << '\n';
    if (!wl.distinguished()) std::cout << "stable after k=" << wl.iteration << '\n';
    std::cout << "labels: " << (labels ? "used" : "ignored") << '\n';
    for (std::size_t k = 0; k < wl.first_signatures.size(); ++k) {
      std::cout << "k=" << k << " A: " << wl.first_signatures[k].to_string() << '\n';
      std::cout << "k=" << k << " B: " << wl.second_signatures[k].to_string() << '\n';
    }
    if (iso.witness) {
      std::cout << "mapping:";
      for (std::size_t v = 0; v < iso.witness->size(); ++v) {
        std::cout << ' ' << v << "->" << (*iso.witness)[v];
      }
      std::cout << '\n';
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1-WL expressiveness audit for graph-classification datasets"};
  app.require_subcommand(1);

  AuditArgs audit;
  auto* audit_cmd = app.add_subcommand("audit", "Identifiable fractions and upper bounds per k");
  add_source_options(audit_cmd, audit.src);
  audit_cmd->add_option("-k,--k", audit.k, "Report rows for k = 0..K");
  audit_cmd->add_flag("--no-node-labels", audit.no_node_labels, "Only the run without node labels");
  audit_cmd->add_option("--labels", audit.labels, "Label modes to report")
      ->check(CLI::IsMember({"with", "without", "both"}));
  audit_cmd->add_option("--identifiability", audit.identifiability,
                        "Population for the identifiable share")
      ->check(CLI::IsMember({"unique", "classes", "raw"}));
  audit_cmd->add_option("--format", audit.format, "Output on stdout")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  audit_cmd->add_option("--csv", audit.csv_path, "Also write the CSV report here");
  audit_cmd->add_option("--json", audit.json_path, "Also write the JSON report here");
  audit_cmd->add_flag("--timing", audit.timing, "Include wall-clock seconds in JSON");
  audit_cmd->add_option("--iso-budget", audit.iso_budget, "Search-node cap per isomorphism test");

  MotifArgs motifs;
  auto* motif_cmd = app.add_subcommand("motifs", "Identifiability of graphlet-count vectors");
  add_source_options(motif_cmd, motifs.src);
  motif_cmd->add_option("--max-size", motifs.max_size, "Largest graphlet size")
      ->check(CLI::Range(2, 4));
  motif_cmd->add_option("--budget", motifs.budget, "Enumerated subgraphs allowed per graph");
  motif_cmd->add_option("--key", motifs.key, "largest: graphlets of max size; full: all columns")
      ->check(CLI::IsMember({"largest", "full"}));
  motif_cmd->add_option("--identifiability", motifs.identifiability,
                        "Population for the identifiable share")
      ->check(CLI::IsMember({"unique", "classes", "raw"}));
  motif_cmd->add_option("--format", motifs.format, "Output on stdout")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  motif_cmd->add_option("--csv", motifs.csv_path, "Also write the CSV summary here");
  motif_cmd->add_option("--json", motifs.json_path, "Also write the JSON summary here");
  motif_cmd->add_option("--vectors", motifs.vectors_path, "Write per-graph motif counts here");
  motif_cmd->add_option("--iso-budget", motifs.iso_budget, "Search-node cap per isomorphism test");

  PairArgs pair;
  auto* pair_cmd = app.add_subcommand("pair", "Compare two graphs given as edge-list files");
  pair_cmd->add_option("first", pair.first, "Edge list of the first graph")->required();
  pair_cmd->add_option("second", pair.second, "Edge list of the second graph")->required();
  pair_cmd->add_flag("--no-node-labels", pair.no_node_labels, "Ignore label lines");
  pair_cmd->add_option("-k,--k", pair.k, "Maximum WL iterations (default: until stable)");
  pair_cmd->add_option("--iso-budget", pair.iso_budget, "Search-node cap");

  CLI11_PARSE(app, argc, argv);

  try {
    if (audit_cmd->parsed()) return cmd_audit(audit);
    if (motif_cmd->parsed()) return cmd_motifs(motifs);
    return cmd_pair(pair);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  }
}
