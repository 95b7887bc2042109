#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "wlaudit/graph.hpp"

namespace wlaudit {

using ClassLabel = std::uint32_t;

/// A graph-classification dataset: graphs plus one dense class label each.
struct Dataset {
  std::string name;
  std::vector<Graph> graphs;
  std::vector<ClassLabel> class_labels;  // dense, in [0, num_classes)
  bool has_node_labels = false;
  std::size_t num_classes = 0;

  // Raw class label for each dense id (sorted ascending), e.g. {-1, 1}.
  std::vector<std::int64_t> class_label_values;
  // Self-loop rows dropped while parsing.
  std::size_t dropped_self_loops = 0;

  std::size_t size() const noexcept { return graphs.size(); }
  bool empty() const noexcept { return graphs.empty(); }
};

/// Assembles a Dataset from graphs and raw class labels, densifying the labels.
/// has_node_labels is derived from the graphs. Throws EmptyDatasetError.
Dataset make_dataset(std::string name, std::vector<Graph> graphs,
                     const std::vector<std::int64_t>& raw_class_labels);

/// Parses a TU-format dataset from `dir`:
///   NAME_A.txt               "u, v" per line, 1-based global node ids
///   NAME_graph_indicator.txt graph id (1-based) of node i on line i
///   NAME_graph_labels.txt    class label of graph i on line i
///   NAME_node_labels.txt     optional, node label of node i on line i
/// Attribute and edge-label files are ignored.
Dataset parse_tu_dataset(const std::filesystem::path& dir, const std::string& name);

/// Every node label replaced by 0; unlabeled graphs pass through unchanged.
Dataset strip_node_labels(const Dataset& d);

/// Number of distinct node label values across the dataset (0 if unlabeled).
std::size_t distinct_node_labels(const Dataset& d);

}  // namespace wlaudit
