#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>

#include "wlaudit/dataset.hpp"
#include "wlaudit/errors.hpp"

namespace fs = std::filesystem;
using namespace wlaudit;

namespace {

// Writes NAME_<suffix>.txt files into a fresh temporary directory.
struct TuDir {
  fs::path dir;
  explicit TuDir(const std::map<std::string, std::string>& files) {
    dir = fs::temp_directory_path() / ("wlaudit_tu_" + std::to_string(counter++));
    fs::remove_all(dir);
    fs::create_directories(dir);
    for (const auto& [suffix, content] : files) std::ofstream(dir / ("T_" + suffix + ".txt")) << content;
  }
  ~TuDir() { fs::remove_all(dir); }
  static inline int counter = 0;
};

}  // namespace

TEST_CASE("single P3 graph") {
  TuDir t({{"A", "1, 2\n2, 1\n2, 3\n3, 2\n"}, {"graph_indicator", "1\n1\n1\n"}, {"graph_labels", "1\n"}});
  const Dataset d = parse_tu_dataset(t.dir, "T");
  REQUIRE(d.size() == 1);
  CHECK(d.num_classes == 1);
  CHECK(d.class_labels == std::vector<ClassLabel>{0});
  CHECK_FALSE(d.has_node_labels);
  const Graph& g = d.graphs[0];
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(degree_sequence(g) == std::vector<std::size_t>{1, 1, 2});
  CHECK(g.graph_id() == 1);
}

TEST_CASE("nodes are split per graph with local ids and labels") {
  TuDir t({{"A", "1,2\n2,1\n3,4\n4,3\n4,5\n5,4\n"},
           {"graph_indicator", "1\n1\n2\n2\n2\n"},
           {"graph_labels", "-1\n1\n"},
           {"node_labels", "0\n1\n2\n2\n3\n"}});
  const Dataset d = parse_tu_dataset(t.dir, "T");
  REQUIRE(d.size() == 2);
  CHECK(d.class_label_values == std::vector<std::int64_t>{-1, 1});
  CHECK(d.class_labels == std::vector<ClassLabel>{0, 1});
  CHECK(d.has_node_labels);
  CHECK(d.graphs[1].node_count() == 3);
  CHECK(d.graphs[1].has_edge(0, 1));
  CHECK(d.graphs[1].has_edge(1, 2));
  CHECK(*d.graphs[1].node_labels() == std::vector<NodeLabel>{2, 2, 3});
  CHECK(distinct_node_labels(d) == 4);
}

TEST_CASE("isolated nodes and trailing blank lines") {
  TuDir t({{"A", "1, 2\n\n"}, {"graph_indicator", "1\n1\n1\n"}, {"graph_labels", " 3 \n"}});
  const Dataset d = parse_tu_dataset(t.dir, "T");
  CHECK(d.graphs[0].node_count() == 3);
  CHECK(d.graphs[0].degree(2) == 0);
}

TEST_CASE("self-loop rows are dropped and counted") {
  TuDir t({{"A", "1, 1\n1, 2\n"}, {"graph_indicator", "1\n1\n"}, {"graph_labels", "0\n"}});
  const Dataset d = parse_tu_dataset(t.dir, "T");
  CHECK(d.dropped_self_loops == 1);
  CHECK(d.graphs[0].edge_count() == 1);
}

TEST_CASE("malformed input reports file and line") {
  TuDir t({{"A", "1, 2\n2; 1\n"}, {"graph_indicator", "1\n1\n"}, {"graph_labels", "0\n"}});
  try {
    parse_tu_dataset(t.dir, "T");
    FAIL("expected MalformedLineError");
  } catch (const MalformedLineError& e) {
    CHECK(e.file() == "T_A.txt");
    CHECK(e.line_no() == 2);
    CHECK(e.kind() == ErrorKind::kParse);
  }
}

TEST_CASE("indicator out of range") {
  TuDir t({{"A", "1, 2\n"}, {"graph_indicator", "1\n2\n"}, {"graph_labels", "0\n"}});
  CHECK_THROWS_AS(parse_tu_dataset(t.dir, "T"), MalformedLineError);
}

TEST_CASE("edge joining two graphs") {
  TuDir t({{"A", "1, 2\n2, 3\n"}, {"graph_indicator", "1\n1\n2\n"}, {"graph_labels", "0\n1\n"}});
  CHECK_THROWS_AS(parse_tu_dataset(t.dir, "T"), DanglingEdgeError);
}

TEST_CASE("node label count mismatch") {
  TuDir t({{"A", "1, 2\n"}, {"graph_indicator", "1\n1\n"}, {"graph_labels", "0\n"}, {"node_labels", "1\n"}});
  CHECK_THROWS_AS(parse_tu_dataset(t.dir, "T"), MalformedLineError);
}

TEST_CASE("missing files") {
  TuDir t({{"A", "1, 2\n"}, {"graph_labels", "0\n"}});
  CHECK_THROWS_AS(parse_tu_dataset(t.dir, "T"), MissingFileError);
  CHECK_THROWS_AS(parse_tu_dataset(t.dir / "nowhere", "T"), MissingFileError);
}

TEST_CASE("empty dataset") {
  TuDir t({{"A", ""}, {"graph_indicator", ""}, {"graph_labels", ""}});
  CHECK_THROWS_AS(parse_tu_dataset(t.dir, "T"), EmptyDatasetError);
  CHECK_THROWS_AS(make_dataset("x", {}, {}), EmptyDatasetError);
}

TEST_CASE("MUTAG fixture") {
  const Dataset d = parse_tu_dataset(fs::path(WLAUDIT_TEST_DATA) / "MUTAG", "MUTAG");
  CHECK(d.size() == 188);
  CHECK(d.num_classes == 2);
  CHECK(d.has_node_labels);
  CHECK(distinct_node_labels(d) == 7);
  std::size_t nodes = 0, edges = 0;
  for (const auto& g : d.graphs) nodes += g.node_count(), edges += g.edge_count();
  CHECK(nodes == 3371);
  CHECK(edges == 7442 / 2);
  CHECK(d.dropped_self_loops == 0);
}

TEST_CASE("strip_node_labels") {
  const Graph p3 = build_graph(3, std::vector<Edge>{{0, 1}, {1, 2}}, std::vector<NodeLabel>{5, 2, 5});
  const Dataset d = make_dataset("x", {p3}, {1});
  const Dataset s = strip_node_labels(d);
  CHECK(*s.graphs[0].node_labels() == std::vector<NodeLabel>{0, 0, 0});
  CHECK(distinct_node_labels(s) == 1);

  const Dataset plain = make_dataset("y", {build_graph(2, std::vector<Edge>{{0, 1}})}, {0});
  CHECK(strip_node_labels(plain).graphs == plain.graphs);
}
