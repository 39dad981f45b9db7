#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "thresh/errors.hpp"
#include "thresh/generators.hpp"
#include "thresh/graph.hpp"

using namespace thresh;

namespace {

NodeSet set_of(std::size_t n, std::initializer_list<NodeId> ids) {
  return NodeSet(n, std::vector<NodeId>(ids));
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  auto edges = oracle::random_edges(n, p, rng);
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("graph construction rejects loops, duplicates and bad ids") {
  const std::vector<Edge> loop{{0, 0}};
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  const std::vector<Edge> out_of_range{{0, 3}};
  CHECK_THROWS_AS(Graph(3, loop), PreconditionError);
  CHECK_THROWS_AS(Graph(3, dup), PreconditionError);
  CHECK_THROWS_AS(Graph(3, out_of_range), PreconditionError);
}

TEST_CASE("adjacency is symmetric and sorted, degrees sum to 2m") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(1 + trial % 30, 0.3, rng);
    std::size_t total = 0;
    std::size_t lo = g.num_nodes() ? g.degree(0) : 0;
    std::size_t hi = lo;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      auto nb = g.neighbors(v);
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      for (NodeId u : nb) CHECK(g.has_edge(u, v));
      total += g.degree(v);
      lo = std::min(lo, g.degree(v));
      hi = std::max(hi, g.degree(v));
    }
    CHECK(total == 2 * g.num_edges());
    CHECK(g.min_degree() == lo);
    CHECK(g.max_degree() == hi);
  }
}

TEST_CASE("node set size tracks membership") {
  NodeSet s(130);
  s.insert(3);
  s.insert(3);
  s.insert(129);
  CHECK(s.size() == 2);
  s.erase(3);
  s.erase(3);
  CHECK(s.size() == 1);
  CHECK(s.members() == std::vector<NodeId>{129});
  CHECK_THROWS_AS(s.insert(130), std::out_of_range);
  CHECK(NodeSet::full(130).size() == 130);
  CHECK(NodeSet::full(130).members().back() == 129);
  CHECK(set_of(5, {1, 2}).is_subset_of(set_of(5, {0, 1, 2})));
  CHECK_FALSE(set_of(5, {1, 4}).is_subset_of(set_of(5, {0, 1, 2})));
}

TEST_CASE("degree_in") {
  const Graph k3 = complete_graph(3);
  CHECK(degree_in(k3, 0, set_of(3, {1, 2})) == 2);

  const Graph petersen = petersen_graph();
  CHECK(degree_in(petersen, 4, NodeSet(10)) == 0);
  auto nb = petersen.neighbors(0);
  const NodeSet around(10, std::vector<NodeId>(nb.begin(), nb.end()));
  // Triangle-free: no neighbor of 0 touches another neighbor of 0, and in
  // particular node 0 sees none of them... as neighbors of each other.
  for (NodeId u : nb) CHECK(degree_in(petersen, u, around) == 0);
  CHECK(degree_in(petersen, 0, NodeSet(10)) == 0);
  CHECK(degree_in(petersen, 0, NodeSet::full(10)) == 3);
  CHECK_THROWS_AS((void)degree_in(petersen, 10, around), std::out_of_range);
}

TEST_CASE("edge_boundary_count") {
  CHECK(edge_boundary_count(complete_graph(4), set_of(4, {0}), set_of(4, {1, 2})) == 2);
  const Graph c4 = cycle_graph(4);
  CHECK(edge_boundary_count(c4, set_of(4, {0, 1}), set_of(4, {2, 3})) == 2);
  CHECK(edge_boundary_count(c4, NodeSet::full(4), NodeSet::full(4)) == 8);
  // Overlap counts internal edges in both directions.
  CHECK(edge_boundary_count(c4, set_of(4, {0, 1}), set_of(4, {0, 1})) == 2);
}

TEST_CASE("edge_boundary_count is symmetric and sums degrees against V") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 40;
    const Graph g = random_graph(n, 0.25, rng);
    NodeSet a(n);
    NodeSet b(n);
    std::bernoulli_distribution coin(0.4);
    std::uint64_t degree_sum = 0;
    for (NodeId v = 0; v < n; ++v) {
      if (coin(rng)) {
        a.insert(v);
        degree_sum += g.degree(v);
      }
      if (coin(rng)) b.insert(v);
    }
    CHECK(edge_boundary_count(g, a, b) == edge_boundary_count(g, b, a));
    CHECK(edge_boundary_count(g, a, NodeSet::full(n)) == degree_sum);
  }
}

TEST_CASE("girth examples") {
  CHECK(girth(cycle_graph(5)) == 5);
  CHECK(girth(petersen_graph()) == 5);
  CHECK_FALSE(girth(path_graph(4)).has_value());
  CHECK(girth(complete_graph(4)) == 3);
  CHECK(girth(cycle_graph(4)) == 4);
}

TEST_CASE("girth agrees with cycle enumeration for n <= 8") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + trial % 8;
    auto edges = oracle::random_edges(n, 0.15 + 0.1 * (trial % 5), rng);
    const Graph g(n, edges);
    const auto expected = oracle::girth(oracle::matrix(n, edges));
    CHECK(girth(g) == expected);
    if (auto cycle = shortest_cycle(g)) {
      // Consecutive nodes (cyclically) are adjacent and all distinct.
      std::vector<NodeId> sorted = *cycle;
      std::sort(sorted.begin(), sorted.end());
      CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
      for (std::size_t i = 0; i < cycle->size(); ++i) {
        CHECK(g.has_edge((*cycle)[i], (*cycle)[(i + 1) % cycle->size()]));
      }
    }
  }
}

TEST_CASE("bfs ball") {
  const Graph c5 = cycle_graph(5);
  CHECK(bfs_ball(c5, 0, 0).members() == std::vector<NodeId>{0});
  CHECK(bfs_ball(c5, 0, 1).members() == std::vector<NodeId>{0, 1, 4});
  CHECK(bfs_ball(c5, 0, 2).size() == 5);
}

TEST_CASE("edge list reader and writer") {
  SUBCASE("comments, blank lines and canonical output") {
    std::istringstream in("# a triangle plus a pendant\n4 4\n\n0 1\n1 2 # trailing\n0 2\n2 3\n");
    const Graph g = read_edge_list(in);
    CHECK(g.num_nodes() == 4);
    CHECK(g.num_edges() == 4);
    std::ostringstream out;
    write_edge_list(out, g);
    CHECK(out.str() == "4 4\n0 1\n0 2\n1 2\n2 3\n");
    std::istringstream again(out.str());
    std::ostringstream out2;
    write_edge_list(out2, read_edge_list(again));
    CHECK(out2.str() == out.str());
  }
  SUBCASE("malformed input") {
    for (const char* text : {"", "3\n", "3 1\n1 0\n", "3 1\n0 3\n", "3 2\n0 1\n", "3 1\n0 1 2\n",
                             "3 2\n0 1\n0 1\n", "3 1\n0 x\n"}) {
      std::istringstream in(text);
      CHECK_THROWS_AS(read_edge_list(in), ParseError);
    }
  }
}
