#include "bwl/hyper.hpp"

#include <algorithm>

namespace bwl {

TriangleHypergraph::TriangleHypergraph(int n) : n_(n) {
  if (n < 1 || n > kMaxPoints) throw Error("hypergraph size must be in 1.." + std::to_string(kMaxPoints));
  member_.assign(triple_count(n), false);
}

TriangleHypergraph::TriangleHypergraph(int n, std::vector<Triple> edges) : TriangleHypergraph(n) {
  for (const auto& t : edges) add_edge(t.a, t.b, t.c);
}

void TriangleHypergraph::add_edge(Point x, Point y, Point z) {
  if (x == y || y == z || x == z) throw Error("hyperedge has repeated points");
  for (Point p : {x, y, z})
    if (p < 0 || p >= n_) throw Error("hyperedge point out of range");
  const Triple t = make_triple(x, y, z);
  const std::size_t r = triple_rank(t);
  if (member_[r]) throw Error("duplicate hyperedge");
  member_[r] = true;
  const auto pos = std::lower_bound(edges_.begin(), edges_.end(), r,
                                    [](const Triple& e, std::size_t rank) { return triple_rank(e) < rank; });
  edges_.insert(pos, t);
}

TriangleHypergraph triangle_hypergraph(const BetweennessStructure& b) {
  TriangleHypergraph h(b.size());
  for (std::size_t r = 0; r < b.triple_total(); ++r) {
    if (!b.state(r).is_triangle()) continue;
    const Triple t = triple_unrank(r);
    h.add_edge(t.a, t.b, t.c);
  }
  return h;
}

namespace {

std::vector<Point> intersect(const Triple& s, const Triple& t) {
  std::vector<Point> out;
  for (int i = 0; i < 3; ++i)
    if (t.contains(s[i])) out.push_back(s[i]);
  return out;
}

}  // namespace

std::optional<std::vector<Point>> is_delta_star(const TriangleHypergraph& h) {
  const auto& e = h.edges();
  if (e.empty()) throw Error("kernel undefined for a hypergraph without edges");
  if (e.size() == 1) return std::vector<Point>{e[0].a, e[0].b, e[0].c};
  const std::vector<Point> kernel = intersect(e[0], e[1]);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (intersect(e[i], e[j]) != kernel) return std::nullopt;
  return kernel;
}

std::optional<std::array<Point, 2>> is_tight_star(const TriangleHypergraph& h) {
  const auto& e = h.edges();
  if (e.empty()) throw Error("kernel undefined for a hypergraph without edges");
  if (e.size() == 1) return std::array<Point, 2>{e[0].a, e[0].b};
  const auto kernel = is_delta_star(h);
  if (!kernel || kernel->size() != 2) return std::nullopt;
  return std::array<Point, 2>{(*kernel)[0], (*kernel)[1]};
}

bool is_tight_k_star(const TriangleHypergraph& h, int k) {
  if (k < 0 || k > kTightKStarMaxK) throw GuardError("is_tight_k_star: k must be in 0..3");
  if (h.size() > kTightKStarMaxPoints) throw GuardError("is_tight_k_star: n exceeds guard 10");
  const auto& e = h.edges();
  if (e.empty()) return true;
  std::vector<std::size_t> chosen;
  auto covered = [&](const Triple& t) {
    for (auto p : chosen) {
      const auto [u, v] = pair_unrank(p);
      if (t.contains(u) && t.contains(v)) return true;
    }
    return false;
  };
  // Every edge must contain a chosen pair; branch on the pairs of the first uncovered edge.
  auto search = [&](auto&& self) -> bool {
    const auto first = std::find_if(e.begin(), e.end(), [&](const Triple& t) { return !covered(t); });
    if (first == e.end()) return true;
    if (static_cast<int>(chosen.size()) == k) return false;
    const Triple t = *first;
    for (const auto& [u, v] : {std::array<Point, 2>{t.a, t.b}, {t.a, t.c}, {t.b, t.c}}) {
      chosen.push_back(pair_rank(u, v));
      if (self(self)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return search(search);
}

SimpleGraph link_graph(const TriangleHypergraph& h, Point y) {
  if (y < 0 || y >= h.size()) throw Error("link_graph: point out of range");
  SimpleGraph g(h.size());
  for (const auto& t : h.edges()) {
    if (!t.contains(y)) continue;
    Point rest[2];
    int k = 0;
    for (int i = 0; i < 3; ++i)
      if (t[i] != y) rest[k++] = t[i];
    g.add_edge(rest[0], rest[1]);
  }
  return g;
}

TriangleHypergraph fano_complement_hypergraph() {
  static constexpr int kLines[7][3] = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                                       {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  TriangleHypergraph h(7);
  for (std::size_t r = 0; r < triple_count(7); ++r) {
    const Triple t = triple_unrank(r);
    bool line = false;
    for (const auto& l : kLines) line = line || make_triple(l[0], l[1], l[2]) == t;
    if (!line) h.add_edge(t.a, t.b, t.c);
  }
  return h;
}

TriangleHypergraph seven_point_case(int which) {
  TriangleHypergraph h(7);
  switch (which) {
    case 1: {
      // p u v w x y z
      enum { p, u, v, w, x, y, z };
      h.add_edge(p, w, x);
      h.add_edge(p, y, z);
      h.add_edge(u, w, x);
      h.add_edge(v, y, z);
      return h;
    }
    case 2:
    case 3: {
      // p q u v x y z
      enum { p, q, u, v, x, y, z };
      if (which == 2) {
        h.add_edge(p, x, y);
        h.add_edge(q, x, y);
      } else {
        h.add_edge(u, x, y);
        h.add_edge(v, x, y);
      }
      h.add_edge(p, y, z);
      h.add_edge(q, y, z);
      return h;
    }
    default: throw Error("seven-point case hypergraph index must be 1, 2 or 3");
  }
}

}  // namespace bwl
