#include <doctest.h>

#include "cliquemerge/oracles.hpp"
#include "cliquemerge/queries.hpp"
#include "test_support.hpp"

using namespace cliquemerge;
using testing::letter_set;
using testing::letters;

TEST_CASE("do_calculation on the fixtures") {
  CalcResult r3 = do_calculation(testing::fig3a());
  CHECK(r3.all_cliques == letter_set({"ABCD", "CEF"}));
  REQUIRE(r3.largest);
  CHECK(*r3.largest == letters("ABCD"));
  CHECK_FALSE(r3.break_witness);

  Graph g4 = testing::fig4a();
  CalcResult r4 = do_calculation(g4);
  CHECK(r4.all_cliques == bron_kerbosch_pivot(g4));
  CHECK(largest_found_clique(r4) == letters("ABCDE"));
  CHECK(r4.counters.phase1 > 0);
  CHECK(r4.counters.phase2 > 0);
}

TEST_CASE("do_calculation on degenerate graphs") {
  CalcResult empty = do_calculation(Graph{});
  CHECK(empty.all_cliques.empty());
  CHECK_FALSE(empty.largest);
  CHECK_THROWS_AS(largest_found_clique(empty), std::logic_error);

  Graph one;
  one.add_node();
  CHECK(do_calculation(one).all_cliques == CliqueSet{Clique{0}});
  CHECK(do_calculation(one, {.include_singletons = false}).all_cliques.empty());

  Graph path;
  for (int i = 0; i < 3; ++i) path.add_node();
  path.connect(0, 1);
  path.connect(1, 2);
  CHECK(do_calculation(path).all_cliques == CliqueSet{Clique{0, 1}, Clique{1, 2}});

  CHECK(do_calculation(testing::complete(6)).all_cliques == CliqueSet{Clique{0, 1, 2, 3, 4, 5}});
}

TEST_CASE("ties for the largest clique go to the lexicographically smallest") {
  Graph g;
  g.new_complete_subgraph(3);
  g.new_complete_subgraph(3);
  CalcResult r = do_calculation(g);
  CHECK(largest_found_clique(r) == Clique{0, 1, 2});
}

TEST_CASE("per_node_report") {
  auto gen = generate({.kind = GeneratorKind::Fig3a});
  CalcResult r = do_calculation(gen.graph);
  CHECK(per_node_report(r, gen.names) ==
        "A: [A,B,C,D]\n"
        "B: [A,B,C,D]\n"
        "C: [A,B,C,D] [C,E,F]\n"
        "D: [A,B,C,D]\n"
        "E: [C,E,F]\n"
        "F: [C,E,F]\n");

  Graph g;
  g.add_node();
  g.add_node();
  g.add_node();
  g.connect(0, 1);
  CHECK(per_node_report(do_calculation(g)) == "0: [0,1]\n1: [0,1]\n2: [2]\n");
}

TEST_CASE("has_clique_of_size") {
  Graph g4 = testing::fig4a();
  Decision yes = has_clique_of_size(g4, 5);
  CHECK(yes.found);
  REQUIRE(yes.witness);
  CHECK(*yes.witness == letters("ABCDE"));

  Decision three = has_clique_of_size(g4, 3);
  CHECK(three.found);
  CHECK(testing::verified_clique(g4, *three.witness));
  CHECK(three.witness->size() >= 3);

  Decision no = has_clique_of_size(g4, 6);
  CHECK_FALSE(no.found);
  CHECK_FALSE(no.witness);

  CHECK_THROWS_AS(has_clique_of_size(g4, 0), std::invalid_argument);

  Graph one;
  one.add_node();
  CHECK(has_clique_of_size(one, 1).found);
  CHECK_FALSE(has_clique_of_size(one, 2).found);
  CHECK_FALSE(has_clique_of_size(Graph{}, 1).found);

  Graph edge;
  edge.add_node();
  edge.add_node();
  edge.connect(0, 1);
  Decision two = has_clique_of_size(edge, 2);
  CHECK(two.found);
  CHECK(*two.witness == Clique{0, 1});
}

TEST_CASE("a positive decision on random graphs always carries a verified witness") {
  for (const Graph& g : testing::gnp_corpus(60, 3000)) {
    const std::size_t best = max_clique_size_oracle(g);
    for (std::size_t k = 1; k <= best + 1; ++k) {
      Decision d = has_clique_of_size(g, k);
      if (k > best) CHECK_FALSE(d.found);
      if (d.found) {
        REQUIRE(d.witness);
        CHECK(d.witness->size() >= k);
        CHECK(testing::verified_clique(g, *d.witness));
      }
    }
  }
}

TEST_CASE("planted clique is found") {
  Graph g = generate({.kind = GeneratorKind::PlantedClique,
                      .n = 15,
                      .p = 0.25,
                      .k = 5,
                      .seed = testing::pinned::kPlanted15Seed})
                .graph;
  CHECK(max_clique_size_oracle(g) == 5);
  Decision d = has_clique_of_size(g, 5);
  CHECK(d.found);
  if (d.witness) CHECK(testing::verified_clique(g, *d.witness));
}

TEST_CASE("calculation output is independent of worker count") {
  Graph g = testing::gnp(50, 0.4, 21);
  CalcResult serial = do_calculation(g);
  CalcResult parallel = do_calculation(g, {.workers = 3});
  CHECK(serial.all_cliques == parallel.all_cliques);
  CHECK(serial.per_node == parallel.per_node);
  CHECK(serial.counters == parallel.counters);
}

TEST_CASE("four groups of two: the calculation misses one of sixteen maximal cliques") {
  // Smallest divergence found by the default audit campaign, shrunk from
  // moon_moser(4). Every pair of nodes from different groups is adjacent.
  Graph g;
  for (int i = 0; i < 8; ++i) g.add_node();
  for (NodeId a = 0; a < 8; ++a)
    for (NodeId b = a + 1; b < 8; ++b)
      if (a / 2 != b / 2) g.connect(a, b);

  const CliqueSet oracle = bron_kerbosch_pivot(g);
  CHECK(oracle.size() == 16);
  for (KeyNodeStrategy key : {KeyNodeStrategy::FirstOfPair, KeyNodeStrategy::SecondOfPair, KeyNodeStrategy::Both}) {
    CalcResult r = do_calculation(g, {.merge = {.key_node = key}});
    CHECK(r.all_cliques.size() == 15);
    CHECK_FALSE(r.all_cliques.contains(Clique{1, 3, 5, 7}));
    for (const Clique& c : r.all_cliques) CHECK(oracle.contains(c));
  }
  CHECK(has_clique_of_size(g, 4).found);
}
