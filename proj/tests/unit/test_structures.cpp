#include <doctest.h>

#include <bit>
#include <numeric>
#include <set>

#include "bwl/enumerate.hpp"
#include "bwl/families.hpp"
#include "bwl/hyper.hpp"
#include "bwl/iso.hpp"
#include "support.hpp"

using namespace bwl;

namespace {

std::set<std::tuple<Point, Point, std::string>> edge_set(const WeightedGraph& g) {
  std::set<std::tuple<Point, Point, std::string>> out;
  for (const auto& e : g.edges()) out.insert({e.u, e.v, format_rational(e.weight)});
  return out;
}

// Automorphism count by scanning all n! relabelings.
std::uint64_t brute_automorphisms(const BetweennessStructure& b) {
  std::vector<Point> perm(static_cast<std::size_t>(b.size()));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do count += support::permuted(b, perm) == b;
  while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

TriangleHypergraph hyper_of(std::initializer_list<std::array<Point, 3>> edges, int n) {
  TriangleHypergraph h(n);
  for (const auto& e : edges) h.add_edge(e[0], e[1], e[2]);
  return h;
}

}  // namespace

TEST_CASE("family graphs") {
  // S_6^4: x_1..x_4 -> 0..3, y -> 4, z -> 5.
  CHECK(edge_set(build(s_spec(6, 4))) ==
        std::set<std::tuple<Point, Point, std::string>>{
            {0, 1, "1"}, {1, 2, "1"}, {2, 3, "1"}, {0, 4, "1"}, {3, 5, "1"}, {4, 5, "3"}});
  // T_{7,1}: x_1..x_3 -> 0..2, y, z, u, v -> 3..6.
  CHECK(edge_set(build(t_spec(7, 1))) == std::set<std::tuple<Point, Point, std::string>>{{1, 2, "1"},
                                                                                         {0, 3, "1"},
                                                                                         {0, 4, "1"},
                                                                                         {3, 5, "1"},
                                                                                         {3, 6, "1"},
                                                                                         {4, 5, "1"},
                                                                                         {4, 6, "1"},
                                                                                         {1, 5, "1"},
                                                                                         {1, 6, "1"}});
  CHECK(cosize(induced_structure(q_spec(3, 2))) == 1);
}

TEST_CASE("family parameter ranges") {
  CHECK_THROWS_AS(build(q_spec(3, 3)), Error);
  CHECK_THROWS_AS(build(q_spec(2, 2)), Error);
  CHECK_THROWS_AS(build(q_spec(5, 4)), Error);
  CHECK_THROWS_AS(build(r_spec(4, 1, 4)), Error);
  CHECK_THROWS_AS(build(r_spec(3, 1, 3)), Error);
  CHECK_THROWS_AS(build(r_spec(7, 3, 4)), Error);  // I_7^4 = {1, 2}
  CHECK_THROWS_AS(build(r_spec(7, 0, 3)), Error);
  CHECK_THROWS_AS(build(s_spec(4, 4)), Error);
  CHECK_THROWS_AS(build(s_spec(2, 2)), Error);
  CHECK_THROWS_AS(build(t_spec(5, 1)), Error);
  CHECK_THROWS_AS(build(t_spec(8, 3)), Error);  // ceil(3/2) = 2
  CHECK_NOTHROW(build(t_spec(8, 2)));
  CHECK(r_index_count(7, 4) == 2);
  CHECK(r_index_count(8, 3) == 5);
  CHECK(r_index_count(8, 2) == 3);
  CHECK(t_index_count(6) == 1);
  CHECK(t_index_count(10) == 3);
  CHECK_THROWS_AS(parse_family_kind("Z"), Error);
}

TEST_CASE("family co-sizes and hypergraph shapes") {
  for (const auto& spec : qrs_specs(10)) {
    CAPTURE(spec.name());
    const auto b = induced_structure(spec);
    CHECK(check_frp(b));
    CHECK(cosize(b) == static_cast<std::size_t>(spec.n - spec.c));
    CHECK(is_tight_star(triangle_hypergraph(b)).has_value());
  }
  for (int n = 6; n <= 12; ++n)
    for (int i = 1; i <= t_index_count(n); ++i) {
      const auto b = induced_structure(t_spec(n, i));
      CHECK(cosize(b) == static_cast<std::size_t>(2 * n - 10));
      const auto h = triangle_hypergraph(b);
      CHECK_FALSE(is_tight_star(h).has_value());
      if (n <= kTightKStarMaxPoints) CHECK(is_tight_k_star(h, 2));
    }
}

TEST_CASE("members of one family are pairwise non-isomorphic") {
  for (int n = 3; n <= 9; ++n)
    for (int c = 2; c <= 4; ++c) {
      std::vector<FamilySpec> specs;
      for (const auto& s : qrs_specs(9))
        if (s.n == n && s.c == c) specs.push_back(s);
      std::set<CanonicalForm> forms;
      std::size_t distinct_graphs = 0;
      for (const auto& s : specs) {
        // Q_3^2 = S_3^2 = K_3 and R_{4,1}^3 = S_4^3; other coincidences would be a bug.
        if (forms.insert(canonical_form(induced_structure(s))).second) ++distinct_graphs;
      }
      const bool known_coincidence = (n == 3 && c == 2) || (n == 4 && c == 3);
      CAPTURE(n);
      CAPTURE(c);
      CHECK(distinct_graphs + (known_coincidence ? 1 : 0) == specs.size());
    }
  CHECK_FALSE(is_isomorphic(induced_structure(r_spec(6, 1, 4)), induced_structure(r_spec(6, 2, 4))));
  CHECK_FALSE(is_isomorphic(induced_structure(t_spec(9, 1)), induced_structure(t_spec(9, 2))));
}

TEST_CASE("exceptional catalog") {
  const auto cat = exceptional_catalog();
  REQUIRE(cat.size() == exceptional_labels().size());
  CHECK(is_isomorphic(induce_graph(exceptional_graph("A_5^1")), induced_structure(bipartite_spec(2, 3))));
  CHECK(is_isomorphic(induce_graph(exceptional_graph("A_6_1")), induced_structure(cycle_spec(6))));
  CHECK(is_isomorphic(induce_graph(exceptional_graph("A_6_4")), induced_structure(bipartite_spec(3, 3))));
  CHECK(is_isomorphic(induce_graph(exceptional_graph("A_4_1")), induced_structure(q_spec(4, 3))));
  CHECK(is_isomorphic(induce_graph(exceptional_graph("A_4_2")), induced_structure(s_spec(4, 3))));

  const std::set<CanonicalForm> named = {canonical_form(induced_structure(r_spec(6, 1, 4))),
                                         canonical_form(induced_structure(r_spec(6, 2, 4))),
                                         canonical_form(induced_structure(s_spec(6, 4))),
                                         canonical_form(induced_structure(cycle_spec(6))),
                                         canonical_form(induced_structure(bipartite_spec(3, 3)))};
  std::set<CanonicalForm> rest;
  for (const auto& c : enumerate_structures(6, 2, PropertyFilter::Trivial).classes)
    if (!named.count(c.form)) rest.insert(c.form);
  REQUIRE(rest.size() == 2);
  const std::set<CanonicalForm> shipped = {canonical_form(induce_graph(exceptional_graph("A_6_2"))),
                                           canonical_form(induce_graph(exceptional_graph("A_6_3")))};
  CHECK(shipped == rest);
  CHECK_THROWS_AS(exceptional_graph("A_9_9"), Error);
  CHECK_THROWS_AS(exceptional_catalog("/nonexistent"), Error);
}

TEST_CASE("hypergraph predicates") {
  const auto single = hyper_of({{0, 1, 2}}, 5);
  const auto k = is_tight_star(single);
  REQUIRE(k.has_value());
  CHECK(*k == std::array<Point, 2>{0, 1});

  // S_6^4 kernel is {y, z}.
  const auto s = triangle_hypergraph(induced_structure(s_spec(6, 4)));
  CHECK(is_tight_star(s) == std::array<Point, 2>{4, 5});
  CHECK(is_delta_star(s) == std::vector<Point>{4, 5});

  const auto h1 = seven_point_case(1);
  CHECK_FALSE(is_delta_star(h1).has_value());
  CHECK_FALSE(is_tight_star(h1).has_value());

  const auto t = triangle_hypergraph(induced_structure(t_spec(7, 1)));
  CHECK(is_tight_k_star(t, 2));
  CHECK_FALSE(is_tight_k_star(t, 1));
  CHECK(is_tight_k_star(s, 1));
  CHECK_FALSE(is_tight_k_star(fano_complement_hypergraph(), 2));
  CHECK(fano_complement_hypergraph().edge_count() == 28);

  CHECK_THROWS_AS(is_tight_star(TriangleHypergraph(4)), Error);
  CHECK_THROWS_AS(is_tight_k_star(t, kTightKStarMaxK + 1), Error);
  CHECK_THROWS_AS(TriangleHypergraph(4).add_edge(0, 0, 1), Error);
}

TEST_CASE("delta-star kernels agree with brute-force intersections") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = support::uniform(rng, 3, 7);
    TriangleHypergraph h(n);
    const int m = support::uniform(rng, 1, 5);
    for (int e = 0; e < m; ++e) {
      const auto r = static_cast<std::size_t>(support::uniform(rng, 0, static_cast<int>(triple_count(n)) - 1));
      if (!h.has_edge(r)) {
        const Triple t = triple_unrank(r);
        h.add_edge(t.a, t.b, t.c);
      }
    }
    std::optional<std::set<Point>> common;
    bool consistent = true;
    const auto& es = h.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = i + 1; j < es.size(); ++j) {
        std::set<Point> inter;
        for (int s = 0; s < 3; ++s)
          if (es[j].contains(es[i][s])) inter.insert(es[i][s]);
        if (!common) common = inter;
        else if (*common != inter) consistent = false;
      }
    const auto d = is_delta_star(h);
    if (es.size() >= 2) {
      CHECK(d.has_value() == consistent);
      if (d && consistent) CHECK(std::set<Point>(d->begin(), d->end()) == *common);
      CHECK(is_tight_star(h).has_value() == (consistent && common->size() == 2));
    }
  }
}

TEST_CASE("link graph") {
  const auto h = hyper_of({{0, 1, 2}, {0, 3, 4}, {1, 3, 4}}, 5);
  const auto g = link_graph(h, 0);
  CHECK(g.size() == 5);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(3, 4));
  CHECK(g.edge_count() == 2);
  CHECK(link_graph(h, 2).edge_count() == 1);
}

TEST_CASE("canonical form is invariant under random relabelings") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = support::uniform(rng, 3, 8);
    const auto b = induce_graph(support::random_connected_graph(rng, n, 8));
    const auto form = canonical_form(b);
    const auto hform = canonical_form(triangle_hypergraph(b));
    for (int k = 0; k < 120; ++k) {
      const auto perm = support::random_perm(rng, n);
      const auto moved = support::permuted(b, perm);
      REQUIRE(canonical_form(moved) == form);
      REQUIRE(canonical_form(triangle_hypergraph(moved)) == hform);
    }
    CHECK(canonical_form(structure_from_form(form)) == form);
    CHECK(is_isomorphic(structure_from_form(form), b));
    CHECK(CanonicalForm::from_hex(form.hex()) == form);
  }
}

TEST_CASE("canonical form separates examples and counts automorphisms") {
  CHECK(canonical_form(induced_structure(path_spec(4))) != canonical_form(induced_structure(cycle_spec(4))));
  CHECK(canonical_form(induced_structure(r_spec(5, 1, 4))) != canonical_form(induced_structure(s_spec(5, 4))));

  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = support::uniform(rng, 3, 6);
    const auto b = induce_graph(support::random_connected_graph(rng, n, 3));
    CHECK(canonize(b).automorphisms == brute_automorphisms(b));
    const auto c = canonize(b);
    CHECK(relabel(b, c.labeling) == structure_from_form(c.form));
  }
}

TEST_CASE("dedupe collapses relabelings") {
  const auto k23 = induced_structure(bipartite_spec(2, 3));
  std::vector<BetweennessStructure> all;
  std::vector<Point> perm = {0, 1, 2, 3, 4};
  do all.push_back(support::permuted(k23, perm));
  while (std::next_permutation(perm.begin(), perm.end()));
  const auto classes = dedupe(all);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].multiplicity == 120);
  CHECK(classes[0].representative == k23);

  std::vector<BetweennessStructure> two = {k23, induced_structure(path_spec(5)), k23};
  CHECK(dedupe(two).size() == 2);
  CHECK_THROWS_AS(canonical_form(BetweennessStructure(kCanonicalMaxPoints + 1)), GuardError);
}

TEST_CASE("hypergraph isomorphism classes match a brute-force count") {
  // Non-isomorphic 3-uniform hypergraphs on 5 points with m edges.
  for (int m = 0; m <= 10; ++m) {
    std::set<std::vector<bool>> seen;
    std::size_t classes = 0;
    for (unsigned mask = 0; mask < (1u << 10); ++mask) {
      if (std::popcount(mask) != m) continue;
      std::vector<bool> bits(10);
      for (int r = 0; r < 10; ++r) bits[static_cast<std::size_t>(r)] = (mask >> r) & 1u;
      if (seen.count(bits)) continue;
      ++classes;
      std::vector<Point> perm = {0, 1, 2, 3, 4};
      do {
        std::vector<bool> img(10);
        for (std::size_t r = 0; r < 10; ++r)
          if (bits[r]) {
            const Triple t = triple_unrank(r);
            img[triple_rank(perm[t.a], perm[t.b], perm[t.c])] = true;
          }
        seen.insert(img);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    CAPTURE(m);
    CHECK(hypergraph_classes(5, m).size() == classes);
  }
}
