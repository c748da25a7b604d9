#include <doctest.h>

#include <map>

#include "bwl/core.hpp"
#include "bwl/families.hpp"
#include "bwl/graphs.hpp"
#include "support.hpp"

using namespace bwl;

namespace {

BetweennessStructure path(int n) { return induced_structure(path_spec(n)); }
BetweennessStructure cycle4() { return induced_structure(cycle_spec(4)); }

// True iff b restricted to seq (in that order) is the ordered structure on seq.
bool ordered_along(const BetweennessStructure& b, const std::vector<Point>& seq) {
  for (std::size_t a = 0; a < seq.size(); ++a)
    for (std::size_t m = a + 1; m < seq.size(); ++m)
      for (std::size_t c = m + 1; c < seq.size(); ++c)
        if (!b.between(seq[a], seq[m], seq[c])) return false;
  return true;
}

}  // namespace

TEST_CASE("triple and pair ranks are bijections") {
  for (int n = 3; n <= kMaxPoints; ++n) {
    std::size_t expect = 0;
    for (int c = 2; c < n; ++c)
      for (int b = 1; b < c; ++b)
        for (int a = 0; a < b; ++a) {
          (void)a;
          ++expect;
        }
    CHECK(triple_count(n) == expect);
  }
  for (std::size_t r = 0; r < triple_count(kMaxPoints); ++r) {
    const Triple t = triple_unrank(r);
    REQUIRE(t.a < t.b);
    REQUIRE(t.b < t.c);
    CHECK(triple_rank(t) == r);
    CHECK(triple_rank(t.c, t.a, t.b) == r);
  }
  for (std::size_t r = 0; r < pair_count(kMaxPoints); ++r) {
    const auto p = pair_unrank(r);
    CHECK(pair_rank(p[1], p[0]) == r);
  }
}

TEST_CASE("betweenness accessors") {
  BetweennessStructure b(4);
  b.set_between(2, 0, 3);
  CHECK(b.between(2, 0, 3));
  CHECK(b.between(3, 0, 2));
  CHECK_FALSE(b.between(0, 2, 3));
  CHECK(b.middle(3, 2, 0) == Point{0});
  CHECK(b.state(0, 1, 2).is_triangle());
  b.set_triangle(0, 2, 3);
  CHECK_FALSE(b.middle(0, 2, 3).has_value());
}

TEST_CASE("check_frp examples") {
  CHECK(check_frp(path(4)));
  CHECK(check_frp(induced_structure(bipartite_spec(2, 3))));

  // (0 1 2) and (0 3 1) hold, but {0,3,2} is a triangle.
  BetweennessStructure bad(4);
  bad.set_between(0, 1, 2);
  bad.set_between(0, 3, 1);
  bad.set_between(3, 1, 2);
  CHECK_FALSE(check_frp(bad));
  CHECK(find_frp_violation(bad).has_value());
  CHECK_FALSE(find_frp_violation(path(5)).has_value());
}

TEST_CASE("check_frp agrees with the brute-force four-tuple check on every structure of order <= 4") {
  for (int n = 1; n <= 4; ++n) {
    std::size_t passing = 0;
    support::for_each_assignment(n, [&](const BetweennessStructure& b) {
      const bool lib = check_frp(b);
      REQUIRE(lib == support::frp_holds(b));
      passing += lib;
    });
    if (n == 3) CHECK(passing == 4);
  }
}

TEST_CASE("cosize and triangle degree") {
  CHECK(cosize(induced_structure(complete_spec(3))) == 1);
  CHECK(cosize(path(5)) == 0);
  const auto t = induced_structure(t_spec(7, 1));
  CHECK(cosize(t) == 4);
  CHECK(triangle_degree(t, 3) == 2);  // y
  for (Point x = 0; x < 4; ++x) CHECK(triangle_degree(path(4), x) == 0);
  for (Point x = 0; x < 3; ++x) CHECK(triangle_degree(induced_structure(complete_spec(3)), x) == 1);
}

TEST_CASE("restrict_to") {
  const std::vector<Point> first3 = {0, 1, 2};
  CHECK(restrict_to(path(5), first3) == path(3));
  for (Point drop = 0; drop < 4; ++drop) {
    const auto r = delete_point(cycle4(), drop);
    CHECK(cosize(r) == 0);
  }
  const auto t = induced_structure(t_spec(7, 1));
  CHECK(cosize(delete_point(t, 5)) == 2);  // u
  CHECK_THROWS_AS(restrict_to(t, std::vector<Point>{}), Error);
}

TEST_CASE("restrict_to is functorial on random structures") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = support::uniform(rng, 4, 7);
    const auto b = induce_graph(support::random_connected_graph(rng, n, 8));
    auto perm = support::random_perm(rng, n);
    std::vector<Point> y(perm.begin(), perm.begin() + support::uniform(rng, 3, n));
    std::sort(y.begin(), y.end());
    const auto by = restrict_to(b, y);
    std::vector<Point> z_local;
    for (Point i = 0; i < static_cast<Point>(y.size()); ++i)
      if (support::uniform(rng, 0, 1) || z_local.size() < 1) z_local.push_back(i);
    std::vector<Point> z_global;
    for (const Point i : z_local) z_global.push_back(y[static_cast<std::size_t>(i)]);
    CHECK(restrict_to(by, z_local) == restrict_to(b, z_global));
  }
}

TEST_CASE("relabel matches pointwise permutation") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = support::uniform(rng, 3, 7);
    const auto b = induce_graph(support::random_connected_graph(rng, n, 8));
    const auto perm = support::random_perm(rng, n);
    CHECK(relabel(b, perm) == support::permuted(b, perm));
  }
}

TEST_CASE("is_extension") {
  const auto b = induced_structure(s_spec(5, 2));
  CHECK(is_extension(b, b));
  CHECK_FALSE(is_extension(path(4), cycle4()));
  const auto o = is_orderable(b);
  REQUIRE(o.has_value());
  CHECK(is_extension(ordered_structure(*o), b));
}

TEST_CASE("linear, ordered, cyclic lines") {
  const auto c4 = cycle4();
  CHECK(is_linear(c4));
  CHECK_FALSE(is_ordered(c4).has_value());
  CHECK(find_cyclic_lines(c4).size() == 1);
  CHECK_FALSE(is_regular(c4));

  const auto p6 = path(6);
  const auto o = is_ordered(p6);
  REQUIRE(o.has_value());
  CHECK(o->perm == std::vector<Point>{0, 1, 2, 3, 4, 5});
  CHECK(ordered_structure(*o) == p6);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = support::uniform(rng, 3, 9);
    Ordering ord{support::random_perm(rng, n)};
    const auto b = ordered_structure(ord);
    const auto back = is_ordered(b);
    REQUIRE(back.has_value());
    CHECK(ordered_structure(*back) == b);
    CHECK(back->perm.front() < back->perm.back());
  }
  // Co-size 1 at order 5 leaves no room for regularity.
  CHECK_FALSE(is_regular(induced_structure(r_spec(5, 1, 4))));
}

TEST_CASE("orderability examples") {
  const auto p5 = path(5);
  const auto o = is_orderable(p5);
  REQUIRE(o.has_value());
  CHECK(ordered_structure(*o) == p5);
  CHECK_FALSE(is_orderable(induced_structure(q_spec(4, 3))).has_value());
  CHECK(is_orderable(induced_structure(s_spec(5, 2))).has_value());
  CHECK_THROWS_AS(is_orderable(BetweennessStructure(kOrderableMaxPoints + 1)), GuardError);
}

TEST_CASE("ordered implies linear; orderable implies regular (exhaustive, n <= 5)") {
  std::map<int, std::size_t> orderable;
  for (int n = 3; n <= 5; ++n) {
    support::for_each_assignment(n, [&](const BetweennessStructure& b) {
      if (!check_frp(b)) return;
      if (is_ordered(b)) REQUIRE(is_linear(b));
      if (is_linear(b) && n != 4) REQUIRE(is_ordered(b).has_value());
      if (const auto o = is_orderable(b)) {
        REQUIRE(is_regular(b));
        REQUIRE(is_extension(ordered_structure(*o), b));
        ++orderable[n];
      }
    });
  }
  CHECK(orderable[3] == 4);
}

TEST_CASE("blow-up property: two ordered restrictions sharing an interval force the order (n = 5)") {
  const int n = 5;
  std::size_t applied = 0;
  support::for_each_assignment(n, [&](const BetweennessStructure& b) {
    if (!check_frp(b)) return;
    std::vector<Point> seq = {0, 1, 2, 3, 4};
    do {
      if (seq.front() > seq.back()) continue;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          std::vector<Point> y(seq.begin() + i, seq.begin() + j + 1);
          std::vector<Point> z(seq.begin(), seq.begin() + i + 1);
          z.insert(z.end(), seq.begin() + j, seq.end());
          if (!ordered_along(b, y) || !ordered_along(b, z)) continue;
          ++applied;
          REQUIRE(ordered_along(b, seq));
        }
    } while (std::next_permutation(seq.begin(), seq.end()));
  });
  CHECK(applied > 0);
}

TEST_CASE("cosize plus collinear count is the triple count") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = support::uniform(rng, 3, 8);
    const auto b = induce_graph(support::random_connected_graph(rng, n, 8));
    std::size_t collinear = 0;
    for (std::size_t r = 0; r < b.triple_total(); ++r) collinear += b.state(r).is_collinear();
    CHECK(cosize(b) + collinear == triple_count(n));
  }
}
