#include <doctest.h>

#include <sstream>

#include "stgr/errors.hpp"
#include "stgr/graph.hpp"

using namespace stgr;

TEST_CASE("make_graph validates its input") {
  CHECK_THROWS_WITH_AS(make_graph(2, {{1, 1}}), doctest::Contains("self-loop"), error);
  CHECK_THROWS_WITH_AS(make_graph(4, {{1, 2}, {3, 4}}), doctest::Contains("disconnected"), error);
  CHECK_THROWS_WITH_AS(make_graph(2, {{1, 3}}), doctest::Contains("out of range"), error);
  CHECK_THROWS_WITH_AS(make_graph(3, {{1, 2}, {2, 3}, {1, 2}}), doctest::Contains("duplicate"),
                       error);
  CHECK_THROWS_AS(make_graph(0, {}), error);
}

TEST_CASE("adjacency and edge lookup") {
  Graph g = make_graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  CHECK(g.m() == 4);
  CHECK(g.degree(1) == 2);
  CHECK(g.has_edge(1, 4));
  CHECK(g.has_edge(4, 1));
  CHECK_FALSE(g.has_edge(1, 3));
  // Edges are stored in canonical sorted order: {1,2},{1,4},{2,3},{3,4}.
  CHECK(g.edge_index(2, 3) == 2);
  CHECK(g.edge_index(3, 2) == 2);
  CHECK(g.edge_index(1, 4) == 1);
  CHECK(g.edge_index(1, 3) == -1);
}

TEST_CASE("distance matrix on standard shapes") {
  Graph p3 = make_graph(3, {{1, 2}, {2, 3}});
  CHECK(all_pairs_distances(p3).at(1, 3) == 2);

  Graph k4 = make_graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  DistanceMatrix dk4 = all_pairs_distances(k4);
  for (int u = 1; u <= 4; ++u)
    for (int v = 1; v <= 4; ++v) CHECK(dk4.at(u, v) == (u == v ? 0 : 1));

  Graph c6 = make_graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
  CHECK(all_pairs_distances(c6).at(1, 4) == 3);
}

TEST_CASE("distance matrix satisfies the triangle inequality") {
  Graph g = make_graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 5}, {1, 6}});
  DistanceMatrix d = all_pairs_distances(g);
  for (int u = 1; u <= g.n; ++u)
    for (int v = 1; v <= g.n; ++v)
      for (int w = 1; w <= g.n; ++w) CHECK(d.at(u, v) <= d.at(u, w) + d.at(w, v));
}

TEST_CASE("metrics on standard shapes") {
  Graph star = make_graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
  Metrics ms = metrics(star);
  CHECK(ms.radius == 1);
  CHECK(ms.diameter == 2);
  CHECK(ms.ecc[1] == 1);

  Graph p5 = make_graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
  Metrics mp = metrics(p5);
  CHECK(mp.radius == 2);
  CHECK(mp.diameter == 4);

  Graph c6 = make_graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
  Metrics mc = metrics(c6);
  CHECK(mc.radius == 3);
  CHECK(mc.diameter == 3);
  CHECK(mc.radius <= mc.diameter);
  CHECK(mc.diameter <= 2 * mc.radius);
}

TEST_CASE("bfs layering") {
  Graph p5 = make_graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
  Layering lay = bfs_layers(p5, 3);
  CHECK(lay.layer[1] == 2);
  CHECK(lay.layer[2] == 1);
  CHECK(lay.layer[3] == 0);
  CHECK(lay.layer[4] == 1);
  CHECK(lay.layer[5] == 2);
  CHECK(lay.depth == 2);

  Graph k4 = make_graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  Layering lk = bfs_layers(k4, 2);
  CHECK(lk.layer[2] == 0);
  CHECK(lk.depth == 1);

  Graph c6 = make_graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
  CHECK(bfs_layers(c6, 1).depth == 3);

  // adjacent vertices differ by at most one layer
  Layering lc = bfs_layers(c6, 2);
  for (const auto& [u, v] : c6.edges) CHECK(std::abs(lc.layer[u] - lc.layer[v]) <= 1);
}

TEST_CASE("parsing a periodic instance") {
  ParsedGraph pg = parse_graph_string(
      "c comment line\n"
      "p stgr 3 2 5\n"
      "e 1 2\n"
      "e 2 3\n");
  CHECK(pg.g.n == 3);
  CHECK(pg.g.m() == 2);
  CHECK(pg.delta == 5);
  CHECK_FALSE(pg.labels.has_value());
  CHECK_FALSE(pg.coloring_input);
}

TEST_CASE("parsing a labeled instance") {
  ParsedGraph pg = parse_graph_string(
      "p stgr 3 2 3\n"
      "e 1 2 1\n"
      "e 2 3 2\n");
  REQUIRE(pg.labels.has_value());
  CHECK((*pg.labels)[0] == 1);
  CHECK((*pg.labels)[1] == 2);
}

TEST_CASE("parsing a coloring input") {
  ParsedGraph pg = parse_graph_string(
      "p col 3 2\n"
      "e 1 2\n"
      "e 2 3\n");
  CHECK(pg.coloring_input);
  CHECK(pg.delta == 0);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_graph_string("p stgr 2 1 3\ne 1 1\n"),
                       doctest::Contains("self-loop"), error);
  CHECK_THROWS_WITH_AS(parse_graph_string("e 1 2\n"), doctest::Contains("line 1"), error);
  CHECK_THROWS_WITH_AS(parse_graph_string("p stgr 3 2 3\ne 1 2\n"),
                       doctest::Contains("expected"), error);
  CHECK_THROWS_WITH_AS(parse_graph_string("p stgr 3 2 3\ne 2 1\ne 2 3\n"),
                       doctest::Contains("u < v"), error);
  CHECK_THROWS_WITH_AS(parse_graph_string("p stgr 3 2 3\ne 1 2 9\ne 2 3 1\n"),
                       doctest::Contains("label out of range"), error);
  CHECK_THROWS_WITH_AS(parse_graph_string("p stgr 3 2 3\ne 1 2 1\ne 2 3\n"),
                       doctest::Contains("all edges carry labels or none"), error);
  CHECK_THROWS_WITH_AS(parse_graph_string("p col 3 2\ne 1 2 1\ne 2 3\n"),
                       doctest::Contains("labels not allowed"), error);
  CHECK_THROWS_WITH_AS(parse_graph_string("p wat 3 2\n"), doctest::Contains("unknown format"),
                       error);
}

TEST_CASE("serialization round-trips byte-identically") {
  std::vector<int> labels{1, 3, 2};
  Graph g = make_graph(4, {{1, 2}, {2, 3}, {3, 4}});
  std::string text = serialize_graph(g, 3, &labels);
  ParsedGraph pg = parse_graph_string(text);
  CHECK(pg.delta == 3);
  REQUIRE(pg.labels.has_value());
  CHECK(*pg.labels == labels);
  CHECK(serialize_graph(pg.g, pg.delta, &*pg.labels) == text);

  std::string bare = serialize_graph(g, 7);
  ParsedGraph pg2 = parse_graph_string(bare);
  CHECK_FALSE(pg2.labels.has_value());
  CHECK(serialize_graph(pg2.g, pg2.delta) == bare);

  std::string col = serialize_coloring_graph(g);
  ParsedGraph pg3 = parse_graph_string(col);
  CHECK(pg3.coloring_input);
  CHECK(serialize_coloring_graph(pg3.g) == col);
}
