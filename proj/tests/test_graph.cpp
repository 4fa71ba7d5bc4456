#include <doctest.h>

#include <stdexcept>

#include "cliquemerge/graph.hpp"
#include "cliquemerge/generators.hpp"
#include "test_support.hpp"

using namespace cliquemerge;
using testing::id;
using testing::ids;

namespace {

void check_invariants(const Graph& g) {
  std::size_t degree_sum = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    CHECK_FALSE(g.are_adjacent(v, v));
    for (NodeId u : g.neighbors(v)) {
      CHECK(u != v);
      CHECK(g.are_adjacent(u, v));
    }
    degree_sum += g.degree(v);
  }
  CHECK(degree_sum == 2 * g.edge_count());
}

}  // namespace

TEST_CASE("new graph is empty and add_node assigns dense ids") {
  Graph g = new_graph();
  CHECK(g.node_count() == 0);
  CHECK(g.edge_count() == 0);
  for (NodeId expect = 0; expect < 5; ++expect) CHECK(g.add_node() == expect);
  CHECK(g.edge_count() == 0);
  CHECK(g.degree(0) == 0);
  CHECK(g.add_node() == 5);
}

TEST_CASE("connect is symmetric and idempotent") {
  Graph g;
  g.add_node();
  g.add_node();
  g.connect(0, 1);
  CHECK(std::vector<NodeId>(g.neighbors(0).begin(), g.neighbors(0).end()) == std::vector<NodeId>{1});
  CHECK(std::vector<NodeId>(g.neighbors(1).begin(), g.neighbors(1).end()) == std::vector<NodeId>{0});
  CHECK(g.edge_count() == 1);
  g.connect(0, 1);
  g.connect(1, 0);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("connect rejects self-loops and unknown ids") {
  Graph g;
  g.add_node();
  CHECK_THROWS_AS(g.connect(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.connect(0, 1), std::out_of_range);
  CHECK_THROWS_AS(g.neighbors(3), std::out_of_range);
  CHECK_THROWS_AS(g.are_adjacent(0, 9), std::out_of_range);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("new_complete_subgraph") {
  Graph g;
  CHECK(g.new_complete_subgraph(1).size() == 1);
  CHECK(g.edge_count() == 0);

  Graph k5;
  auto nodes = k5.new_complete_subgraph(5);
  CHECK(nodes == std::vector<NodeId>{0, 1, 2, 3, 4});
  CHECK(k5.edge_count() == 10);

  Graph two;
  two.new_complete_subgraph(3);
  two.new_complete_subgraph(3);
  CHECK(two.node_count() == 6);
  CHECK(two.edge_count() == 6);
  CHECK_FALSE(two.are_adjacent(2, 3));

  CHECK_THROWS_AS(g.new_complete_subgraph(0), std::invalid_argument);
}

TEST_CASE("fixture neighborhoods") {
  Graph g3 = testing::fig3a();
  auto nc = g3.neighbors(id('C'));
  CHECK(std::vector<NodeId>(nc.begin(), nc.end()) == ids("ABDEF"));
  auto na = g3.neighbors(id('A'));
  CHECK(std::vector<NodeId>(na.begin(), na.end()) == ids("BCD"));
  CHECK(g3.are_adjacent(id('A'), id('B')));
  CHECK_FALSE(g3.are_adjacent(id('A'), id('E')));
  CHECK_FALSE(g3.are_adjacent(id('A'), id('A')));

  Graph g4 = testing::fig4a();
  auto ne = g4.neighbors(id('E'));
  CHECK(std::vector<NodeId>(ne.begin(), ne.end()) == ids("ABCDFG"));

  Graph iso;
  iso.add_node();
  CHECK(iso.neighbors(0).empty());
}

TEST_CASE("random construction sequences keep the graph invariants") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g;
    const std::size_t n = 1 + rng.next() % 12;
    for (std::size_t i = 0; i < n; ++i) g.add_node();
    for (int step = 0; step < 40; ++step) {
      const auto a = static_cast<NodeId>(rng.next() % n);
      const auto b = static_cast<NodeId>(rng.next() % n);
      if (a == b) {
        CHECK_THROWS(g.connect(a, b));
      } else {
        g.connect(a, b);
      }
      if (rng.next() % 10 == 0) g.new_complete_subgraph(1 + rng.next() % 3);
      if (rng.next() % 10 == 0) g.add_node();
    }
    check_invariants(g);
    CHECK(g.edges().size() == g.edge_count());
  }
}

TEST_CASE("clique canonical form") {
  CHECK(Clique{1, 0, 2} == Clique{0, 1, 2});
  const Clique c{1, 0, 2};
  auto m = c.members();
  CHECK(std::vector<NodeId>(m.begin(), m.end()) == std::vector<NodeId>{0, 1, 2});
  CHECK_THROWS_AS(Clique({1, 1, 2}), std::invalid_argument);
  CHECK(Clique{3, 1}.contains(3));
  CHECK_FALSE(Clique{3, 1}.contains(2));

  CliqueSet set;
  set.insert(Clique{2, 0, 1});
  set.insert(Clique{0, 1, 2});
  CHECK(set.size() == 1);
}

TEST_CASE("larger_clique orders by size then lexicographically") {
  CHECK(larger_clique(Clique{5, 6, 7}, Clique{0, 1}));
  CHECK(larger_clique(Clique{0, 1, 2}, Clique{3, 4, 5}));
  CHECK_FALSE(larger_clique(Clique{3, 4, 5}, Clique{0, 1, 2}));
}

TEST_CASE("is_clique and is_maximal") {
  Graph g = testing::fig3a();
  CHECK(is_clique(g, testing::letters("ABCD")));
  CHECK(is_maximal(g, testing::letters("ABCD")));
  CHECK(is_clique(g, testing::letters("ABC")));
  CHECK_FALSE(is_maximal(g, testing::letters("ABC")));
  CHECK_FALSE(is_clique(g, testing::letters("ACE")));
  CHECK_FALSE(is_clique(g, Clique{0, 17}));
}

TEST_CASE("format_clique uses names only when they cover every member") {
  std::vector<std::string> names{"A", "B", "C"};
  CHECK(format_clique(Clique{2, 0}, names) == "[A,C]");
  CHECK(format_clique(Clique{2, 5}, names) == "[2,5]");
  CHECK(format_clique(Clique{4, 1}) == "[1,4]");
}
