#include <doctest.h>

#include <sstream>

#include "bwl/families.hpp"
#include "bwl/graphs.hpp"
#include "bwl/hyper.hpp"
#include "bwl/io.hpp"
#include "bwl/iso.hpp"
#include "support.hpp"

using namespace bwl;

TEST_CASE("parse_rational and format_rational") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-1/3") == Rational(-1, 3));
  CHECK(format_rational(Rational(4, 2)) == "2");
  CHECK(format_rational(Rational(-2, 6)) == "-1/3");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("weighted graph validation") {
  WeightedGraph g(3);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(1, 0), Error);
  CHECK_THROWS_AS(g.add_edge(1, 1), Error);
  CHECK_THROWS_AS(g.add_edge(0, 3), Error);
  CHECK_THROWS_AS(g.add_edge(1, 2, Rational(0)), Error);
  CHECK_FALSE(g.is_connected());
  CHECK_THROWS_AS(apsp(g), Error);
}

TEST_CASE("apsp examples") {
  const auto p3 = apsp(build(path_spec(3)));
  CHECK(p3.at(0, 2) == 2);

  // S_5^4: x_1..x_3 -> 0..2, y -> 3, z -> 4.
  const auto s = build(s_spec(5, 4));
  const auto d = apsp(s);
  const auto ref = support::floyd(s);
  CHECK(d.at(3, 4) == ref[3][4]);

  const auto k23 = apsp(build(bipartite_spec(2, 3)));
  for (Point a = 0; a < 2; ++a)
    for (Point b = 2; b < 5; ++b) CHECK(k23.at(a, b) == 1);
  CHECK(k23.at(0, 1) == 2);
  CHECK(k23.at(2, 4) == 2);
}

TEST_CASE("apsp agrees with an independent Floyd-Warshall and yields a metric") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = support::uniform(rng, 2, 8);
    const auto g = support::random_connected_graph(rng, n, 8);
    const auto d = apsp(g);
    const auto ref = support::floyd(g);
    for (Point x = 0; x < n; ++x)
      for (Point y = 0; y < n; ++y) REQUIRE(d.at(x, y) == ref[x][y]);
    CHECK(support::is_metric(d));
    CHECK(d.is_valid());
  }
}

TEST_CASE("metric validation reports broken axioms") {
  RationalMetric m(3);
  m.set(0, 1, 1);
  m.set(1, 2, 1);
  m.set(0, 2, 3);
  CHECK(m.violation().has_value());
  m.set(0, 2, 2);
  CHECK(m.is_valid());
  m.set(0, 1, Rational(0));
  CHECK(m.violation().has_value());
}

TEST_CASE("induce examples") {
  const auto c4 = induce_graph(build(cycle_spec(4)));
  CHECK(cosize(c4) == 0);
  CHECK(c4.between(0, 1, 2));
  CHECK(c4.between(0, 3, 2));
  CHECK(c4.between(1, 0, 3));
  CHECK(c4.between(1, 2, 3));
  CHECK(cosize(induce_graph(build(complete_spec(3)))) == 1);

  const auto h = triangle_hypergraph(induce_graph(build(t_spec(7, 1))));
  CHECK(is_isomorphic(h, seven_point_case(1)));
}

TEST_CASE("induce reads betweenness from the distances exactly") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = support::uniform(rng, 3, 7);
    const auto d = apsp(support::random_connected_graph(rng, n, 8));
    const auto b = induce(d);
    CHECK(support::induces(d, b));
    CHECK(support::frp_holds(b));
    CHECK(check_frp(b));
  }
}

TEST_CASE("adjacency graph examples") {
  for (int n = 2; n <= 7; ++n)
    CHECK(adjacency_graph(induced_structure(path_spec(n))) == build(path_spec(n)).skeleton());
  CHECK(adjacency_graph(induced_structure(cycle_spec(4))) == build(cycle_spec(4)).skeleton());
  CHECK(adjacency_graph(induced_structure(bipartite_spec(2, 3))) == build(bipartite_spec(2, 3)).skeleton());
}

TEST_CASE("adjacency graph properties on random graphs") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = support::uniform(rng, 3, 7);
    const auto g = support::random_connected_graph(rng, n, 8);
    const auto b = induce_graph(g);
    const auto adj = adjacency_graph(b);
    CHECK(adj.is_connected());
    // The adjacency graph is a subgraph of every spanner.
    CHECK(adj.is_subgraph_of(g.skeleton()));

    // Restricting can only add adjacencies.
    auto perm = support::random_perm(rng, n);
    std::vector<Point> y(perm.begin(), perm.begin() + support::uniform(rng, 1, n));
    std::sort(y.begin(), y.end());
    const auto local = adjacency_graph(restrict_to(b, y));
    for (std::size_t i = 0; i < y.size(); ++i)
      for (std::size_t j = i + 1; j < y.size(); ++j)
        if (adj.has_edge(y[i], y[j])) CHECK(local.has_edge(static_cast<Point>(i), static_cast<Point>(j)));
  }
}

TEST_CASE("scaling the weights scales distances and keeps the structure") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = support::uniform(rng, 3, 7);
    const auto g = support::random_connected_graph(rng, n, 8);
    const Rational lambda = support::random_weight(rng, 8);
    const auto d = apsp(g);
    const auto ds = apsp(g.scaled(lambda));
    for (Point x = 0; x < n; ++x)
      for (Point y = 0; y < n; ++y) REQUIRE(ds.at(x, y) == lambda * d.at(x, y));
    CHECK(induce(ds) == induce(d));
  }
}

TEST_CASE("spanner graph reproduces the metric") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = support::uniform(rng, 3, 7);
    const auto d = apsp(support::random_connected_graph(rng, n, 8));
    const auto sp = spanner_graph(d);
    CHECK(apsp(sp) == d);
    CHECK(sp.skeleton() == adjacency_graph(induce(d)));
  }
}

TEST_CASE("text formats round trip") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = support::uniform(rng, 3, 7);
    const auto g = support::random_connected_graph(rng, n, 8);
    const auto d = apsp(g);
    const auto b = induce(d);
    const auto h = triangle_hypergraph(b);
    std::istringstream wg(write_wg(g)), bws(write_bws(b)), th(write_th(h)), met(write_metric(d));
    CHECK(apsp(read_wg(wg)) == d);
    CHECK(read_bws(bws) == b);
    CHECK(read_th(th) == h);
    CHECK(read_metric(met) == d);
  }
}

TEST_CASE("text formats reject malformed input") {
  auto bws = [](const std::string& s) {
    std::istringstream in(s);
    return read_bws(in);
  };
  auto wg = [](const std::string& s) {
    std::istringstream in(s);
    return read_wg(in);
  };
  CHECK_NOTHROW(bws("# comment\nn 3\n\nc 0 1 2 1\n"));
  CHECK_THROWS_AS(bws("c 0 1 2 1\n"), FormatError);
  CHECK_THROWS_AS(bws("n 3\nc 0 1 2 5\n"), FormatError);
  CHECK_THROWS_AS(bws("n 3\nc 0 1 3 1\n"), FormatError);
  CHECK_THROWS_AS(bws("n 3\nc 0 1 2 1\nc 0 1 2 0\n"), FormatError);
  CHECK_THROWS_AS(bws("n 3\nx 0 1 2\n"), FormatError);
  CHECK_THROWS_AS(wg("n 3\ne 0 1 -1\n"), Error);
  CHECK_THROWS_AS(wg("n 3\ne 0 1 1/0\n"), Error);
}
