#include "bwl/graphs.hpp"

#include <bit>

namespace bwl {

void SimpleGraph::add_edge(Point u, Point v) {
  if (u == v || u < 0 || v < 0 || u >= size() || v >= size()) throw Error("invalid simple graph edge");
  adj_[u] |= 1u << v;
  adj_[v] |= 1u << u;
}

int SimpleGraph::degree(Point u) const { return std::popcount(adj_[u]); }

std::vector<Point> SimpleGraph::neighbors(Point u) const {
  std::vector<Point> out;
  for (Point v = 0; v < size(); ++v)
    if (has_edge(u, v)) out.push_back(v);
  return out;
}

std::vector<std::array<Point, 2>> SimpleGraph::edges() const {
  std::vector<std::array<Point, 2>> out;
  for (Point v = 1; v < size(); ++v)
    for (Point u = 0; u < v; ++u)
      if (has_edge(u, v)) out.push_back({u, v});
  return out;
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (auto a : adj_) twice += static_cast<std::size_t>(std::popcount(a));
  return twice / 2;
}

bool SimpleGraph::is_connected() const {
  if (size() == 0) return true;
  std::uint32_t seen = 1u, frontier = 1u;
  while (frontier) {
    std::uint32_t next = 0;
    for (Point u = 0; u < size(); ++u)
      if ((frontier >> u) & 1u) next |= adj_[u];
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == size();
}

bool SimpleGraph::is_subgraph_of(const SimpleGraph& other) const {
  if (other.size() != size()) return false;
  for (Point u = 0; u < size(); ++u)
    if (adj_[u] & ~other.adj_[u]) return false;
  return true;
}

WeightedGraph::WeightedGraph(int n) : n_(n) {
  if (n < 1 || n > kMaxPoints) throw Error("graph vertex count must be in 1.." + std::to_string(kMaxPoints));
}

void WeightedGraph::add_edge(Point u, Point v, const Rational& weight) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw Error("edge endpoint out of range");
  if (u == v) throw Error("self-loop on vertex " + std::to_string(u));
  if (weight <= 0) throw Error("edge weight must be positive");
  if (u > v) std::swap(u, v);
  for (const auto& e : edges_)
    if (e.u == u && e.v == v) throw Error("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  edges_.push_back({u, v, weight});
}

SimpleGraph WeightedGraph::skeleton() const {
  SimpleGraph g(n_);
  for (const auto& e : edges_) g.add_edge(e.u, e.v);
  return g;
}

WeightedGraph WeightedGraph::scaled(const Rational& factor) const {
  WeightedGraph out(n_);
  for (const auto& e : edges_) out.add_edge(e.u, e.v, e.weight * factor);
  return out;
}

RationalMetric::RationalMetric(int n) : n_(n), d_(static_cast<std::size_t>(n * n)) {
  if (n < 1 || n > kMaxPoints) throw Error("metric size must be in 1.." + std::to_string(kMaxPoints));
}

void RationalMetric::set(Point x, Point y, const Rational& value) {
  d_[static_cast<std::size_t>(x * n_ + y)] = value;
  d_[static_cast<std::size_t>(y * n_ + x)] = value;
}

RationalMetric RationalMetric::scaled(const Rational& factor) const {
  RationalMetric out(n_);
  for (std::size_t i = 0; i < d_.size(); ++i) out.d_[i] = d_[i] * factor;
  return out;
}

std::optional<std::string> RationalMetric::violation() const {
  for (Point x = 0; x < n_; ++x) {
    if (at(x, x) != 0) return "d(" + std::to_string(x) + "," + std::to_string(x) + ") != 0";
    for (Point y = 0; y < n_; ++y) {
      if (x == y) continue;
      if (at(x, y) != at(y, x)) return "asymmetric at (" + std::to_string(x) + "," + std::to_string(y) + ")";
      if (at(x, y) <= 0) return "non-positive distance at (" + std::to_string(x) + "," + std::to_string(y) + ")";
      for (Point z = 0; z < n_; ++z) {
        if (at(x, z) > at(x, y) + at(y, z)) {
          return "triangle inequality fails for " + std::to_string(x) + "," + std::to_string(y) + "," +
                 std::to_string(z);
        }
      }
    }
  }
  return std::nullopt;
}

RationalMetric apsp(const WeightedGraph& g) {
  const int n = g.size();
  if (!g.is_connected()) throw Error("apsp: graph is disconnected");
  std::vector<std::optional<Rational>> d(static_cast<std::size_t>(n * n));
  auto cell = [&](Point x, Point y) -> std::optional<Rational>& { return d[static_cast<std::size_t>(x * n + y)]; };
  for (Point x = 0; x < n; ++x) cell(x, x) = Rational(0);
  for (const auto& e : g.edges()) {
    cell(e.u, e.v) = e.weight;
    cell(e.v, e.u) = e.weight;
  }
  for (Point k = 0; k < n; ++k)
    for (Point i = 0; i < n; ++i) {
      if (!cell(i, k)) continue;
      for (Point j = 0; j < n; ++j) {
        if (!cell(k, j)) continue;
        Rational via = *cell(i, k) + *cell(k, j);
        auto& cur = cell(i, j);
        if (!cur || via < *cur) cur = std::move(via);
      }
    }
  RationalMetric m(n);
  for (Point x = 0; x < n; ++x)
    for (Point y = x + 1; y < n; ++y) m.set(x, y, *cell(x, y));
  return m;
}

BetweennessStructure induce(const RationalMetric& m) {
  const int n = m.size();
  BetweennessStructure b(n);
  for (Point c = 2; c < n; ++c)
    for (Point bb = 1; bb < c; ++bb)
      for (Point a = 0; a < bb; ++a) {
        const Triple t{a, bb, c};
        for (int slot = 0; slot < 3; ++slot) {
          const Point y = t[slot], x = t[(slot + 1) % 3], z = t[(slot + 2) % 3];
          if (m.at(x, z) == m.at(x, y) + m.at(y, z)) {
            b.set_state(triple_rank(t), TripleState::collinear(slot));
            break;
          }
        }
      }
  return b;
}

BetweennessStructure induce_graph(const WeightedGraph& g) { return induce(apsp(g)); }

SimpleGraph adjacency_graph(const BetweennessStructure& b) {
  const int n = b.size();
  SimpleGraph g(n);
  for (Point x = 0; x < n; ++x)
    for (Point z = x + 1; z < n; ++z) {
      bool blocked = false;
      for (Point y = 0; y < n && !blocked; ++y)
        if (y != x && y != z && b.between(x, y, z)) blocked = true;
      if (!blocked) g.add_edge(x, z);
    }
  return g;
}

WeightedGraph spanner_graph(const RationalMetric& m) {
  const SimpleGraph g = adjacency_graph(induce(m));
  WeightedGraph w(m.size());
  for (const auto& [u, v] : g.edges()) w.add_edge(u, v, m.at(u, v));
  return w;
}

}  // namespace bwl
