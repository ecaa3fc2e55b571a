#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "eidepth/forest.hpp"
#include "oracle_helpers.hpp"

using namespace eidepth;

TEST_CASE("from_edge_list builds and validates") {
  const Forest p3 = Forest::from_edge_list({{1, 2}, {2, 3}}, 3);
  CHECK(p3.num_vertices == 3);
  CHECK(p3.edges.size() == 2);
  CHECK(p3.degree(2) == 2);

  CHECK_THROWS_AS(Forest::from_edge_list({{1, 1}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(Forest::from_edge_list({{1, 4}}, 3), std::invalid_argument);
  CHECK_THROWS_AS(Forest::from_edge_list({{1, 2}, {2, 1}}, 2), std::invalid_argument);

  const Forest spider = Forest::from_edge_list(
      {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}, {6, 7}, {3, 8}, {8, 9}, {3, 10}, {10, 11}},
      11);
  CHECK(spider.num_vertices == 11);
  CHECK(spider.edges.size() == 10);
  CHECK(is_acyclic(spider));
}

TEST_CASE("path_graph") {
  CHECK(path_graph(1).edges.empty());
  CHECK(path_graph(2).edges.size() == 1);
  const Forest p6 = path_graph(6);
  CHECK(p6.edges.size() == 5);
  CHECK(diameter(p6, components(p6).front()) == 5);
  CHECK_THROWS_AS(path_graph(0), std::invalid_argument);
}

TEST_CASE("diameter") {
  const Forest p6 = path_graph(6);
  CHECK(diameter(p6, components(p6).front()) == 5);

  const Forest star = Forest::from_edge_list({{1, 2}, {1, 3}, {1, 4}}, 4);
  CHECK(diameter(star, components(star).front()) == 2);

  const Forest caterpillar = Forest::from_edge_list(
      {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {4, 8}, {8, 9}}, 9);
  CHECK(diameter(caterpillar, components(caterpillar).front()) == 6);

  // disconnected vertex set rejected
  const Forest two = Forest::from_edge_list({{1, 2}, {3, 4}}, 4);
  CHECK_THROWS_AS(diameter(two, {1, 2, 3, 4}), std::invalid_argument);
}

TEST_CASE("diameter agrees with all-pairs oracle on random trees") {
  for (int n = 2; n <= 16; ++n)
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Forest t = random_tree(n, seed * 77 + static_cast<std::uint64_t>(n));
      const auto comp = components(t).front();
      CHECK(diameter(t, comp) == testoracle::diameter_all_pairs(t, comp));
    }
}

TEST_CASE("near_leaves") {
  const Forest spider = Forest::from_edge_list(
      {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}, {6, 7}, {3, 8}, {8, 9}, {3, 10}, {10, 11}},
      11);
  CHECK(near_leaves(spider, components(spider).front()).size() == 5);

  const Forest caterpillar = Forest::from_edge_list(
      {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {4, 8}, {8, 9}}, 9);
  CHECK(near_leaves(caterpillar, components(caterpillar).front()).size() == 3);

  const Forest p4 = path_graph(4);
  CHECK(near_leaves(p4, components(p4).front()) == std::vector<int>{2, 3});
}

TEST_CASE("stats") {
  // two disjoint edges plus one isolated vertex
  const Forest f = Forest::from_edge_list({{1, 2}, {3, 4}}, 5);
  const ForestStats s = stats(f);
  CHECK(s.p == 2);
  CHECK(s.d == 1);
  CHECK(s.isolated_vertices == std::vector<int>{5});

  const ForestStats p7 = stats(path_graph(7));
  CHECK(p7.p == 1);
  CHECK(p7.d == 6);

  const Forest spider = Forest::from_edge_list(
      {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}, {6, 7}, {3, 8}, {8, 9}, {3, 10}, {10, 11}},
      11);
  const ForestStats ss = stats(spider);
  CHECK(ss.p == 1);
  CHECK(ss.d == 4);
  CHECK(ss.q == 5);

  const ForestStats empty = stats(Forest::from_edge_list({}, 3));
  CHECK(empty.p == 0);
  CHECK_FALSE(empty.d.has_value());

  const Forest k3 = Forest::from_edge_list({{1, 2}, {1, 3}, {2, 3}}, 3);
  CHECK_THROWS_AS(stats(k3), std::invalid_argument);
}

TEST_CASE("stats tie-break picks the component with the smallest vertex") {
  // two paths of equal diameter; q must be read from the one containing 1
  const Forest f = Forest::from_edge_list({{1, 2}, {2, 3}, {3, 4}, {5, 6}, {6, 7}, {7, 8}}, 8);
  const ForestStats s = stats(f);
  CHECK(s.p == 2);
  CHECK(s.d == 3);
  CHECK(s.components.front().front() == 1);
  CHECK(s.q == 2);
}

TEST_CASE("bipartition") {
  const Forest p7 = path_graph(7);
  const Bipartition bp = bipartition(p7);
  CHECK(bp.bipartite);
  for (auto [u, v] : p7.edges)
    CHECK(bp.color[static_cast<size_t>(u) - 1] != bp.color[static_cast<size_t>(v) - 1]);
  CHECK(bipartition(random_tree(15, 3)).bipartite);

  const Forest k3 = Forest::from_edge_list({{1, 2}, {1, 3}, {2, 3}}, 3);
  const Bipartition b = bipartition(k3);
  CHECK_FALSE(b.bipartite);
  CHECK(b.odd_cycle.size() == 3);

  const Forest c4 = Forest::from_edge_list({{1, 2}, {2, 3}, {3, 4}, {1, 4}}, 4);
  CHECK(bipartition(c4).bipartite);

  const Forest c5 = Forest::from_edge_list({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}, 5);
  const Bipartition b5 = bipartition(c5);
  CHECK_FALSE(b5.bipartite);
  CHECK(b5.odd_cycle.size() % 2 == 1);
}

TEST_CASE("random_tree structure") {
  CHECK(random_tree(1, 9).edges.empty());
  CHECK(random_tree(2, 9).edges.size() == 1);
  const Forest t = random_tree(8, 42);
  CHECK(t.edges.size() == 7);
  CHECK(components(t).size() == 1);
  CHECK(is_acyclic(t));
  // determinism
  CHECK(format_edge_list(random_tree(8, 42)) == format_edge_list(t));
  CHECK(format_edge_list(random_tree(8, 43)) != format_edge_list(t));
}

TEST_CASE("random trees: n-1 edges, connected, acyclic") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 1 + static_cast<int>(seed % 30);
    const Forest t = random_tree(n, seed);
    CHECK(static_cast<int>(t.edges.size()) == n - 1);
    CHECK(components(t).size() == 1);
    CHECK(is_acyclic(t));
  }
}

TEST_CASE("maximal_diameter_path") {
  const DiameterPath p5 = maximal_diameter_path(path_graph(5));
  CHECK(p5.path.size() == 5);
  CHECK(p5.leaf_end == p5.path.front());
  CHECK(p5.y == p5.path[1]);

  const Forest star = Forest::from_edge_list({{1, 2}, {1, 3}, {1, 4}}, 4);
  const DiameterPath sp = maximal_diameter_path(star);
  CHECK(sp.path.size() == 3);
  // the returned path is one of the longest paths of the tree
  const auto longest = testoracle::all_longest_paths(star);
  CHECK(std::find(longest.begin(), longest.end(), sp.path) != longest.end());

  const Forest caterpillar = Forest::from_edge_list(
      {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {4, 8}, {8, 9}}, 9);
  const DiameterPath cp = maximal_diameter_path(caterpillar);
  CHECK(cp.path.size() == 7);
  int non_leaves = 0;
  for (int w : caterpillar.neighbors(cp.path[cp.path.size() - 2]))
    if (!caterpillar.is_leaf(w)) ++non_leaves;
  CHECK(non_leaves <= 1);

  CHECK_THROWS_AS(maximal_diameter_path(Forest::from_edge_list({{1, 2}, {3, 4}}, 4)),
                  std::invalid_argument);
}

TEST_CASE("diameter-path properties on 1000 random trees") {
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 1000; ++seed) {
    const int n = 2 + static_cast<int>(seed % 29);
    const Forest t = random_tree(n, seed * 1315423911ULL + 7);
    const DiameterPath dp = maximal_diameter_path(t);  // throws if the far-end
                                                       // non-leaf bound fails
    const int d = static_cast<int>(dp.path.size()) - 1;
    if (d >= 2) {
      CHECK(t.is_leaf(dp.path.front()));
      CHECK(t.is_leaf(dp.path.back()));
    }
    if (d >= 3) {
      const auto nl = near_leaves(t, components(t).front());
      CHECK(nl.size() >= 2);
      const std::set<int> nl_set(nl.begin(), nl.end());
      CHECK(nl_set.count(dp.path[1]) == 1);
      CHECK(nl_set.count(dp.path[dp.path.size() - 2]) == 1);
    }
    ++checked;
  }
}

TEST_CASE("edge-list text round trip") {
  std::istringstream in("# a comment\nn 4\n1 2\n2 3   # trailing comment\n\n3 4\n");
  const Forest f = parse_edge_list(in);
  CHECK(f.num_vertices == 4);
  CHECK(f.edges.size() == 3);
  CHECK(format_edge_list(f) == "n 4\n1 2\n2 3\n3 4\n");

  std::istringstream missing("1 2\n");
  CHECK_THROWS_AS(parse_edge_list(missing), std::invalid_argument);
  std::istringstream selfloop("n 2\n1 1\n");
  CHECK_THROWS_AS(parse_edge_list(selfloop), std::invalid_argument);
  std::istringstream empty("");
  CHECK_THROWS_AS(parse_edge_list(empty), std::invalid_argument);
}
