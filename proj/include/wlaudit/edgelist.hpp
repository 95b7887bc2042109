#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "wlaudit/graph.hpp"

namespace wlaudit {

/// Reads a single graph from a plain edge list:
///
///   # comment
///   nodes 6        optional; otherwise one more than the largest node id
///   0 1            one undirected edge per line, 0-based node ids
///   label 0 3      optional node label; unlisted nodes get label 0
///
/// Duplicate edges collapse. Errors (MalformedLineError) carry the line number.
Graph parse_edge_list(std::istream& in, const std::string& source = "<input>");
Graph read_edge_list(const std::filesystem::path& path);

}  // namespace wlaudit
