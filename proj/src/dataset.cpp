#include "wlaudit/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <string_view>

#include "wlaudit/errors.hpp"

namespace wlaudit {
namespace {

namespace fs = std::filesystem;

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n\v\f";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

template <typename Int>
std::optional<Int> parse_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  Int value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

// Non-blank lines of a file with their 1-based line numbers. Blank lines are
// tolerated only after the last non-blank line.
struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> read_lines(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFileError(path.string());
  std::vector<Line> lines;
  std::string text;
  std::size_t number = 0;
  std::optional<std::size_t> first_blank;
  while (std::getline(in, text)) {
    ++number;
    if (trim(text).empty()) {
      if (!first_blank) first_blank = number;
      continue;
    }
    if (first_blank) {
      throw MalformedLineError(path.filename().string(), *first_blank, "blank line inside data");
    }
    lines.push_back({number, std::move(text)});
  }
  return lines;
}

std::vector<std::int64_t> read_int_column(const fs::path& path) {
  std::vector<std::int64_t> values;
  for (const auto& line : read_lines(path)) {
    auto v = parse_int<std::int64_t>(line.text);
    if (!v) throw MalformedLineError(path.filename().string(), line.number, "expected an integer");
    values.push_back(*v);
  }
  return values;
}

}  // namespace

Dataset make_dataset(std::string name, std::vector<Graph> graphs,
                     const std::vector<std::int64_t>& raw_class_labels) {
  if (graphs.empty()) throw EmptyDatasetError(name);
  if (graphs.size() != raw_class_labels.size()) {
    throw Error(ErrorKind::kParse, "dataset " + name + ": " + std::to_string(graphs.size()) +
                                       " graphs but " + std::to_string(raw_class_labels.size()) +
                                       " class labels");
  }
  Dataset d;
  d.name = std::move(name);
  const std::set<std::int64_t> distinct(raw_class_labels.begin(), raw_class_labels.end());
  d.class_label_values.assign(distinct.begin(), distinct.end());
  d.num_classes = d.class_label_values.size();
  d.class_labels.reserve(raw_class_labels.size());
  for (auto raw : raw_class_labels) {
    const auto it = std::lower_bound(d.class_label_values.begin(), d.class_label_values.end(), raw);
    d.class_labels.push_back(static_cast<ClassLabel>(it - d.class_label_values.begin()));
  }
  d.has_node_labels = std::all_of(graphs.begin(), graphs.end(),
                                  [](const Graph& g) { return g.has_node_labels(); });
  d.graphs = std::move(graphs);
  return d;
}

Dataset parse_tu_dataset(const fs::path& dir, const std::string& name) {
  const auto file = [&](std::string_view suffix) { return dir / (name + std::string(suffix)); };
  const std::string indicator_name = name + "_graph_indicator.txt";
  const std::string edges_name = name + "_A.txt";
  const std::string node_labels_name = name + "_node_labels.txt";

  const auto graph_labels = read_int_column(file("_graph_labels.txt"));
  const std::size_t graph_count = graph_labels.size();
  if (graph_count == 0) throw EmptyDatasetError(name);

  // Node i (global, 0-based) -> (graph, local index).
  std::vector<std::uint32_t> graph_of;
  std::vector<NodeId> local_of;
  std::vector<std::size_t> nodes_per_graph(graph_count, 0);
  for (const auto& line : read_lines(file("_graph_indicator.txt"))) {
    auto g = parse_int<std::int64_t>(line.text);
    if (!g || *g < 1 || static_cast<std::size_t>(*g) > graph_count) {
      throw MalformedLineError(indicator_name, line.number,
                               "graph id must be an integer in [1, " +
                                   std::to_string(graph_count) + "]");
    }
    const auto graph = static_cast<std::uint32_t>(*g - 1);
    graph_of.push_back(graph);
    local_of.push_back(static_cast<NodeId>(nodes_per_graph[graph]++));
  }
  const std::size_t total_nodes = graph_of.size();

  std::vector<std::vector<Edge>> edges(graph_count);
  std::size_t self_loops = 0;
  for (const auto& line : read_lines(file("_A.txt"))) {
    const std::string_view text = line.text;
    const auto comma = text.find(',');
    std::optional<std::int64_t> u, v;
    if (comma != std::string_view::npos) {
      u = parse_int<std::int64_t>(text.substr(0, comma));
      v = parse_int<std::int64_t>(text.substr(comma + 1));
    }
    if (!u || !v) throw MalformedLineError(edges_name, line.number, "expected \"u, v\"");
    if (*u < 1 || *v < 1 || static_cast<std::size_t>(*u) > total_nodes ||
        static_cast<std::size_t>(*v) > total_nodes) {
      throw MalformedLineError(edges_name, line.number,
                               "node id out of range [1, " + std::to_string(total_nodes) + "]");
    }
    const auto gu = static_cast<std::size_t>(*u - 1);
    const auto gv = static_cast<std::size_t>(*v - 1);
    if (graph_of[gu] != graph_of[gv]) {
      throw DanglingEdgeError(line.number, static_cast<std::size_t>(*u),
                              static_cast<std::size_t>(*v));
    }
    if (gu == gv) {
      ++self_loops;
      continue;
    }
    edges[graph_of[gu]].emplace_back(local_of[gu], local_of[gv]);
  }

  std::vector<std::optional<std::vector<NodeLabel>>> labels(graph_count);
  const auto node_labels_path = file("_node_labels.txt");
  if (fs::exists(node_labels_path)) {
    const auto lines = read_lines(node_labels_path);
    if (lines.size() != total_nodes) {
      const std::size_t at = lines.empty() ? 1 : lines.back().number;
      throw MalformedLineError(node_labels_name, at,
                               "expected " + std::to_string(total_nodes) + " node labels, got " +
                                   std::to_string(lines.size()));
    }
    for (std::size_t g = 0; g < graph_count; ++g) labels[g].emplace(nodes_per_graph[g]);
    for (std::size_t i = 0; i < total_nodes; ++i) {
      // Some releases carry extra comma-separated columns; the first is the label.
      std::string_view text = lines[i].text;
      text = text.substr(0, text.find(','));
      auto label = parse_int<std::int64_t>(text);
      if (!label || *label < 0 || *label > std::numeric_limits<NodeLabel>::max()) {
        throw MalformedLineError(node_labels_name, lines[i].number,
                                 "expected a non-negative integer label");
      }
      (*labels[graph_of[i]])[local_of[i]] = static_cast<NodeLabel>(*label);
    }
  }

  std::vector<Graph> graphs;
  graphs.reserve(graph_count);
  for (std::size_t g = 0; g < graph_count; ++g) {
    graphs.push_back(build_graph(nodes_per_graph[g], edges[g], std::move(labels[g]), g + 1));
  }
  Dataset d = make_dataset(name, std::move(graphs), graph_labels);
  d.dropped_self_loops = self_loops;
  return d;
}

Dataset strip_node_labels(const Dataset& d) {
  Dataset out = d;
  for (auto& g : out.graphs) {
    if (g.has_node_labels()) g = with_node_labels(g, std::vector<NodeLabel>(g.node_count(), 0));
  }
  return out;
}

std::size_t distinct_node_labels(const Dataset& d) {
  std::set<NodeLabel> seen;
  for (const auto& g : d.graphs) {
    if (g.node_labels()) seen.insert(g.node_labels()->begin(), g.node_labels()->end());
  }
  return seen.size();
}

}  // namespace wlaudit
