#include <doctest.h>

#include "support/fixtures.hpp"
#include "wlaudit/errors.hpp"
#include "wlaudit/motif.hpp"
#include "wlaudit/motif_audit.hpp"

using namespace wlaudit;
using fixtures::make;

namespace {

void check_against_oracle(const Graph& g) {
  const MotifVector m = motif_vector(g, 4);
  const auto o = fixtures::subset_oracle(g);
  CHECK(m.node_count == g.node_count());
  CHECK(m.edge_count == o.edge);
  CHECK(m.path3 == o.path3);
  CHECK(m.triangle == o.triangle);
  CHECK(m.path4 == o.path4);
  CHECK(m.claw == o.claw);
  CHECK(m.cycle4 == o.cycle4);
  CHECK(m.paw == o.paw);
  CHECK(m.diamond == o.diamond);
  CHECK(m.clique4 == o.clique4);
}

}  // namespace

TEST_CASE("four-node lookup table") {
  // Bit order: (0,1) (0,2) (0,3) (1,2) (1,3) (2,3).
  CHECK(classify_four(0b000000) == Graphlet::kNone);
  CHECK(classify_four(0b111111) == Graphlet::kClique4);
  CHECK(classify_four(0b000111) == Graphlet::kClaw);                // 0 joined to all
  CHECK(classify_four(0b101001) == Graphlet::kPath4);               // 0-1, 1-2, 2-3
  CHECK(classify_four(0b101101) == Graphlet::kCycle4);              // + 0-3
  CHECK(classify_four(0b001111) == Graphlet::kPaw);                 // triangle 0-1-2 plus 0-3
  CHECK(classify_four(0b111110) == Graphlet::kDiamond);             // all but 0-1
  CHECK(classify_four(0b100001) == Graphlet::kNone);                // 0-1 and 2-3
  CHECK(classify_four(0b000011) == Graphlet::kNone);                // 0-1, 0-2 leave 3 out
  std::size_t connected = 0;
  for (unsigned mask = 0; mask < 64; ++mask) connected += classify_four(mask) != Graphlet::kNone;
  CHECK(connected == 38);  // labeled connected graphs on 4 nodes
}

TEST_CASE("named graphs") {
  const MotifVector k3 = motif_vector(fixtures::complete(3));
  CHECK(k3.triangle == 1);
  CHECK(k3.path3 == 0);
  CHECK(k3.largest_size_counts() == std::vector<std::uint64_t>(6, 0));

  const MotifVector c4 = motif_vector(fixtures::cycle(4));
  CHECK(c4.path3 == 4);
  CHECK(c4.triangle == 0);
  CHECK(c4.cycle4 == 1);
  CHECK(c4.path4 + c4.claw + c4.paw + c4.diamond + c4.clique4 == 0);

  const MotifVector k4 = motif_vector(fixtures::complete(4));
  CHECK(k4.triangle == 4);
  CHECK(k4.path3 == 0);
  CHECK(k4.clique4 == 1);
  CHECK(k4.diamond + k4.cycle4 + k4.path4 + k4.claw + k4.paw == 0);

  const MotifVector empty = motif_vector(fixtures::edgeless(5));
  CHECK(empty.node_count == 5);
  CHECK(empty.columns() == std::vector<std::uint64_t>{5, 0, 0, 0, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("paw, diamond, claw and path fixtures") {
  check_against_oracle(make(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}));
  check_against_oracle(make(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 0}}));
  check_against_oracle(fixtures::star(3));
  check_against_oracle(fixtures::path(4));
  CHECK(motif_vector(make(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}})).paw == 1);
  CHECK(motif_vector(make(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 0}})).diamond == 1);
}

TEST_CASE("smaller maximum sizes truncate the columns") {
  const Graph g = fixtures::complete(5);
  const MotifVector two = motif_vector(g, 2);
  CHECK(two.columns() == std::vector<std::uint64_t>{5, 10});
  CHECK(two.largest_size_counts() == std::vector<std::uint64_t>{10});
  const MotifVector three = motif_vector(g, 3);
  CHECK(three.columns() == std::vector<std::uint64_t>{5, 10, 0, 10});
  CHECK(three.clique4 == 0);
  CHECK(motif_column_names(3).size() == 4);
  CHECK(motif_column_names(4).size() == 10);
  CHECK_THROWS(motif_vector(g, 5));
  CHECK_THROWS(motif_vector(g, 1));
}

TEST_CASE("triangle count matches the trace of the cubed adjacency matrix") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 20; ++i) {
    const Graph g = fixtures::random_graph(rng, 12, 0.6);
    const auto a = fixtures::adjacency_matrix(g);
    const std::size_t n = g.node_count();
    std::uint64_t trace = 0;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) trace += a[x][y] && a[y][z] && a[z][x];
    CHECK(motif_vector(g).triangle == trace / 6);
    CHECK(motif_vector(g).edge_count == g.edge_count());
  }
}

TEST_CASE("budget overrun") {
  try {
    motif_vector(fixtures::complete(12), 4, 100);
    FAIL("expected CountingInfeasibleError");
  } catch (const CountingInfeasibleError& e) {
    CHECK(e.kind() == ErrorKind::kBudget);
    CHECK(e.budget() == 100);
  }
  const Dataset d = fixtures::dataset_of({fixtures::path(3), fixtures::complete(12)}, {0, 1});
  try {
    motif_vectors(d, 4, 100, 2);
    FAIL("expected CountingInfeasibleError");
  } catch (const CountingInfeasibleError& e) {
    CHECK(e.graph_index() == 1);
  }
  MotifOptions options;
  options.budget = 100;
  const MotifReport skipped = motif_identifiability_or_skip(d, options);
  CHECK(skipped.skipped);
  CHECK(skipped.skip_reason == "CountingInfeasible");
}

TEST_CASE("motif identifiability on small datasets") {
  const Dataset d = fixtures::dataset_of({fixtures::complete(3), fixtures::cycle(4)}, {0, 1});
  MotifOptions full;
  full.key = MotifKey::kFullVector;
  const MotifReport r = motif_identifiability(d, full);
  CHECK(r.identifiable.to_string() == "100.00");
  CHECK(r.upper_bound.to_string() == "100.00");
  // K3 and P3 have no 4-node graphlets, so the size-4 key cannot tell them apart.
  const Dataset small = fixtures::dataset_of({fixtures::complete(3), fixtures::path(3)}, {0, 1});
  const MotifReport s = motif_identifiability(small);
  CHECK(s.identifiable.to_string() == "0.00");
  CHECK(s.upper_bound.to_string() == "50.00");
  CHECK(motif_identifiability(small, full).identifiable.to_string() == "100.00");
}

TEST_CASE("MUTAG motif table") {
  const Dataset d = parse_tu_dataset(std::string(WLAUDIT_TEST_DATA) + "/MUTAG", "MUTAG");
  const MotifReport r = motif_identifiability(d);
  CHECK(r.identifiable.to_string() == "15.85");
  CHECK(r.upper_bound.to_string() == "92.55");
  CHECK(r.vectors.size() == 188);
}
