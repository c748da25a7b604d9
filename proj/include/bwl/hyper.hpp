#pragma once

#include <array>
#include <optional>
#include <vector>

#include "bwl/core.hpp"
#include "bwl/graphs.hpp"

namespace bwl {

/// 3-uniform hypergraph on {0..n-1}; edges kept sorted by colex rank.
class TriangleHypergraph {
 public:
  explicit TriangleHypergraph(int n);
  TriangleHypergraph(int n, std::vector<Triple> edges);

  int size() const { return n_; }
  const std::vector<Triple>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(std::size_t rank) const { return member_[rank]; }
  bool has_edge(const Triple& t) const { return member_[triple_rank(t)]; }

  /// Adds {x,y,z}; throws on repeated points, out-of-range points or a duplicate edge.
  void add_edge(Point x, Point y, Point z);

  friend bool operator==(const TriangleHypergraph& a, const TriangleHypergraph& b) {
    return a.n_ == b.n_ && a.member_ == b.member_;
  }

 private:
  int n_;
  std::vector<Triple> edges_;
  std::vector<bool> member_;
};

TriangleHypergraph triangle_hypergraph(const BetweennessStructure& b);

/// Kernel K if all pairwise edge intersections equal K. Throws on an edgeless hypergraph.
std::optional<std::vector<Point>> is_delta_star(const TriangleHypergraph& h);

/// Two-point kernel if h is a tight star. A single edge counts, with kernel its
/// two smallest points. Throws on an edgeless hypergraph.
std::optional<std::array<Point, 2>> is_tight_star(const TriangleHypergraph& h);

inline constexpr int kTightKStarMaxK = 3;
inline constexpr int kTightKStarMaxPoints = 10;

/// True iff h is the union of k tight stars, i.e. k point pairs cover every edge.
bool is_tight_k_star(const TriangleHypergraph& h, int k);

/// Graph on all n points with edges T \ {y} for the edges T containing y.
SimpleGraph link_graph(const TriangleHypergraph& h, Point y);

/// Hypergraph on 7 points whose non-edges are the lines of the Fano plane.
TriangleHypergraph fano_complement_hypergraph();

/// The three 7-point hypergraphs left by the structural case split for
/// co-size 2n - 10, on points labeled in the order shown:
///   1: {p,w,x} {p,y,z} {u,w,x} {v,y,z}        (p u v w x y z)
///   2: {p,x,y} {q,x,y} {p,y,z} {q,y,z}        (p q u v x y z; u, v isolated)
///   3: {u,x,y} {v,x,y} {p,y,z} {q,y,z}        (p q u v x y z)
TriangleHypergraph seven_point_case(int which);

}  // namespace bwl
