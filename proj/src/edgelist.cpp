#include "wlaudit/edgelist.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <vector>

#include "wlaudit/errors.hpp"

namespace wlaudit {
namespace {

std::uint32_t parse_id(const std::string& token, const std::string& source, std::size_t line_no) {
  std::uint32_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw MalformedLineError(source, line_no, "expected a non-negative integer, got '" + token + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::istream& in, const std::string& source) {
  std::vector<Edge> edges;
  std::map<NodeId, NodeLabel> labels;
  std::optional<std::size_t> declared;
  std::size_t needed = 0;

  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;

    if (tokens[0] == "nodes") {
      if (tokens.size() != 2) throw MalformedLineError(source, line_no, "expected 'nodes N'");
      declared = parse_id(tokens[1], source, line_no);
    } else if (tokens[0] == "label") {
      if (tokens.size() != 3) throw MalformedLineError(source, line_no, "expected 'label u l'");
      const NodeId u = parse_id(tokens[1], source, line_no);
      labels[u] = parse_id(tokens[2], source, line_no);
      needed = std::max<std::size_t>(needed, u + 1);
    } else {
      if (tokens.size() != 2) throw MalformedLineError(source, line_no, "expected 'u v'");
      const NodeId u = parse_id(tokens[0], source, line_no);
      const NodeId v = parse_id(tokens[1], source, line_no);
      if (u == v) throw MalformedLineError(source, line_no, "self-loop on node " + tokens[0]);
      edges.emplace_back(u, v);
      needed = std::max<std::size_t>(needed, std::max(u, v) + std::size_t{1});
    }
  }
  if (in.bad()) throw Error(ErrorKind::kParse, source + ": read error");
  if (declared && *declared < needed) {
    throw MalformedLineError(source, 0,
                             "'nodes " + std::to_string(*declared) + "' is smaller than the node ids used");
  }
  const std::size_t n = declared.value_or(needed);

  std::optional<std::vector<NodeLabel>> node_labels;
  if (!labels.empty()) {
    node_labels.emplace(n, 0);
    for (auto [u, l] : labels) (*node_labels)[u] = l;
  }
  return build_graph(n, edges, std::move(node_labels));
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MissingFileError(path.string());
  return parse_edge_list(in, path.string());
}

}  // namespace wlaudit
