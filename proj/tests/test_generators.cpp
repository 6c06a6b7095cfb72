#include <doctest.h>

#include <set>

#include "stgr/errors.hpp"
#include "stgr/generators.hpp"
#include "stgr/graph.hpp"

using namespace stgr;

TEST_CASE("deterministic shapes") {
  Graph p5 = gen_path(5);
  CHECK(p5.n == 5);
  CHECK(p5.m() == 4);
  CHECK(p5.degree(1) == 1);
  CHECK(p5.degree(3) == 2);

  Graph p1 = gen_path(1);
  CHECK(p1.n == 1);
  CHECK(p1.m() == 0);

  Graph c6 = gen_cycle(6);
  CHECK(c6.m() == 6);
  for (int v = 1; v <= 6; ++v) CHECK(c6.degree(v) == 2);

  Graph star = gen_star(5);
  CHECK(star.degree(1) == 4);
  for (int v = 2; v <= 5; ++v) CHECK(star.degree(v) == 1);

  CHECK_THROWS_AS(gen_cycle(2), error);
  CHECK_THROWS_AS(gen_star(1), error);
  CHECK_THROWS_AS(gen_path(0), error);
}

TEST_CASE("random trees are trees and depend only on the seed") {
  for (std::uint64_t seed : {1ull, 7ull, 42ull}) {
    Graph t1 = gen_tree(8, seed);
    Graph t2 = gen_tree(8, seed);
    CHECK(t1.m() == 7);  // connectivity enforced by construction
    CHECK(t1.edges == t2.edges);
  }
}

TEST_CASE("gnp sampling is reproducible and respects connectivity") {
  Probability p{2, 5};
  Graph a = gen_gnp(8, p, 7);
  Graph b = gen_gnp(8, p, 7);
  CHECK(a.edges == b.edges);

  Graph full = gen_gnp(5, Probability{1, 1}, 3);
  CHECK(full.m() == 10);

  CHECK_THROWS_WITH_AS(gen_gnp(4, Probability{0, 1}, 1), doctest::Contains("disconnected"),
                       error);
}

TEST_CASE("probability parsing is exact") {
  Probability p1 = parse_probability("0.4");
  CHECK(p1.num == 4);
  CHECK(p1.den == 10);

  Probability p2 = parse_probability("1/3");
  CHECK(p2.num == 1);
  CHECK(p2.den == 3);

  Probability p3 = parse_probability("1");
  CHECK(p3.num == 1);
  CHECK(p3.den == 1);

  Probability p4 = parse_probability("0.25");
  CHECK(p4.num == 25);
  CHECK(p4.den == 100);

  CHECK(parse_probability("0").num == 0);

  CHECK_THROWS_AS(parse_probability(""), error);
  CHECK_THROWS_AS(parse_probability("x"), error);
  CHECK_THROWS_AS(parse_probability("5/4"), error);   // above one
  CHECK_THROWS_AS(parse_probability("-1/2"), error);
  CHECK_THROWS_AS(parse_probability("1.5"), error);
  CHECK_THROWS_AS(parse_probability("1/0"), error);
}

TEST_CASE("rng streams are seed-deterministic and in range") {
  Rng a(12345), b(12345);
  for (int i = 0; i < 200; ++i) {
    std::uint64_t bound = 1 + static_cast<std::uint64_t>(i) * 37;
    std::uint64_t x = a.below(bound);
    CHECK(x == b.below(bound));
    CHECK(x < bound);
  }
  Rng c(1);
  for (int i = 0; i < 100; ++i) {
    int v = c.range(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
  }
}

TEST_CASE("random connected graphs and labelings are reproducible") {
  Rng r1(9), r2(9);
  Graph g1 = random_connected_graph(7, 3, r1);
  Graph g2 = random_connected_graph(7, 3, r2);
  CHECK(g1.edges == g2.edges);
  CHECK(g1.m() == 9);  // spanning tree plus the requested extras

  Labeling l1 = random_labeling(g1, 5, r1);
  Labeling l2 = random_labeling(g2, 5, r2);
  CHECK(l1.labels == l2.labels);
  for (int lab : l1.labels) {
    CHECK(lab >= 1);
    CHECK(lab <= 5);
  }
}
