#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bwl/core.hpp"
#include "bwl/rational.hpp"

namespace bwl {

/// Unweighted simple graph on at most kMaxPoints vertices, stored as adjacency bitmasks.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n = 0) : adj_(static_cast<std::size_t>(n), 0) {}

  int size() const { return static_cast<int>(adj_.size()); }
  void add_edge(Point u, Point v);
  bool has_edge(Point u, Point v) const { return (adj_[u] >> v) & 1u; }
  int degree(Point u) const;
  std::vector<Point> neighbors(Point u) const;
  std::vector<std::array<Point, 2>> edges() const;
  std::size_t edge_count() const;
  bool is_connected() const;
  /// True iff every edge of *this is an edge of other (same vertex set).
  bool is_subgraph_of(const SimpleGraph& other) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<std::uint32_t> adj_;
};

struct WeightedEdge {
  Point u = 0, v = 0;  // u < v
  Rational weight;
};

/// Simple graph with positive rational edge weights.
class WeightedGraph {
 public:
  explicit WeightedGraph(int n);

  int size() const { return n_; }
  /// Rejects self-loops, duplicates, out-of-range endpoints and non-positive weights.
  void add_edge(Point u, Point v, const Rational& weight = Rational(1));
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  SimpleGraph skeleton() const;
  bool is_connected() const { return skeleton().is_connected(); }
  /// Weights multiplied by factor > 0.
  WeightedGraph scaled(const Rational& factor) const;

 private:
  int n_;
  std::vector<WeightedEdge> edges_;
};

/// Symmetric n x n rational distance matrix.
class RationalMetric {
 public:
  explicit RationalMetric(int n);

  int size() const { return n_; }
  const Rational& at(Point x, Point y) const { return d_[static_cast<std::size_t>(x * n_ + y)]; }
  void set(Point x, Point y, const Rational& value);
  RationalMetric scaled(const Rational& factor) const;

  /// Describes the first violated metric axiom, if any.
  std::optional<std::string> violation() const;
  bool is_valid() const { return !violation().has_value(); }

  friend bool operator==(const RationalMetric&, const RationalMetric&) = default;

 private:
  int n_;
  std::vector<Rational> d_;
};

/// Exact all-pairs shortest paths. Throws bwl::Error if g is disconnected.
RationalMetric apsp(const WeightedGraph& g);

/// Triple {x,y,z} is collinear with middle y iff d(x,z) = d(x,y) + d(y,z).
BetweennessStructure induce(const RationalMetric& m);
BetweennessStructure induce_graph(const WeightedGraph& g);

/// Edge {x,z} iff no third point lies between x and z.
SimpleGraph adjacency_graph(const BetweennessStructure& b);

/// The adjacency graph of induce(m) weighted by m; a spanner whose shortest
/// path metric is m.
WeightedGraph spanner_graph(const RationalMetric& m);

}  // namespace bwl
