#include "bwl/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bwl/graphs.hpp"

namespace bwl {

std::size_t triple_rank(Point x, Point y, Point z) { return triple_rank(make_triple(x, y, z)); }

Triple triple_unrank(std::size_t rank) {
  // Largest c with C(c,3) <= rank, then b, then a.
  int c = 2;
  while (binomial(c + 1, 3) <= rank) ++c;
  rank -= binomial(c, 3);
  int b = 1;
  while (binomial(b + 1, 2) <= rank) ++b;
  rank -= binomial(b, 2);
  return {static_cast<Point>(rank), b, c};
}

std::array<Point, 2> pair_unrank(std::size_t rank) {
  int y = 1;
  while (binomial(y + 1, 2) <= rank) ++y;
  return {static_cast<Point>(rank - binomial(y, 2)), y};
}

BetweennessStructure::BetweennessStructure(int n) : n_(n) {
  if (n < 1 || n > kMaxPoints) {
    throw Error("point count must be in 1.." + std::to_string(kMaxPoints) + ", got " + std::to_string(n));
  }
  states_.assign(triple_count(n), TripleState::kTriangle);
}

std::optional<Point> BetweennessStructure::middle(Point x, Point y, Point z) const {
  const Triple t = make_triple(x, y, z);
  const TripleState s = state(triple_rank(t));
  if (s.is_triangle()) return std::nullopt;
  return t[s.middle_slot()];
}

bool BetweennessStructure::between(Point x, Point y, Point z) const {
  const Triple t = make_triple(x, y, z);
  const TripleState s = state(triple_rank(t));
  return s.is_collinear() && t[s.middle_slot()] == y;
}

void BetweennessStructure::set_between(Point x, Point y, Point z) {
  const Triple t = make_triple(x, y, z);
  set_state(triple_rank(t), TripleState::collinear(t.slot_of(y)));
}

void BetweennessStructure::set_triangle(Point x, Point y, Point z) {
  set_state(triple_rank(x, y, z), TripleState::triangle());
}

std::optional<std::string> find_frp_violation(const BetweennessStructure& b) {
  const int n = b.size();
  // (x y z) and (x w y) imply (x w z) and (w y z).
  for (std::size_t r = 0; r < b.triple_total(); ++r) {
    const TripleState s = b.state(r);
    if (s.is_triangle()) continue;
    const Triple t = triple_unrank(r);
    const Point y = t[s.middle_slot()];
    for (int e = 0; e < 2; ++e) {
      const Point x = t[(s.middle_slot() + 1 + e) % 3];
      const Point z = t[(s.middle_slot() + 2 - e) % 3];
      for (Point w = 0; w < n; ++w) {
        if (t.contains(w) || !b.between(x, w, y)) continue;
        if (!b.between(x, w, z) || !b.between(w, y, z)) {
          std::ostringstream os;
          os << "(" << x << " " << y << " " << z << "),(" << x << " " << w << " " << y << ") but not ("
             << x << " " << w << " " << z << ") and (" << w << " " << y << " " << z << ")";
          return os.str();
        }
      }
    }
  }
  return std::nullopt;
}

bool check_frp(const BetweennessStructure& b) { return !find_frp_violation(b).has_value(); }

std::size_t cosize(const BetweennessStructure& b) {
  auto codes = b.codes();
  return static_cast<std::size_t>(std::count(codes.begin(), codes.end(), TripleState::kTriangle));
}

std::size_t triangle_degree(const BetweennessStructure& b, Point x) {
  std::size_t d = 0;
  for (std::size_t r = 0; r < b.triple_total(); ++r) {
    if (b.state(r).is_triangle() && triple_unrank(r).contains(x)) ++d;
  }
  return d;
}

std::size_t middle_degree(const BetweennessStructure& b, Point x) {
  std::size_t d = 0;
  for (std::size_t r = 0; r < b.triple_total(); ++r) {
    const TripleState s = b.state(r);
    if (s.is_collinear() && triple_unrank(r)[s.middle_slot()] == x) ++d;
  }
  return d;
}

BetweennessStructure restrict_to(const BetweennessStructure& b, std::span<const Point> subset) {
  if (subset.empty()) throw Error("restrict: point subset must be nonempty");
  std::vector<Point> ys(subset.begin(), subset.end());
  std::sort(ys.begin(), ys.end());
  if (std::adjacent_find(ys.begin(), ys.end()) != ys.end()) throw Error("restrict: repeated point");
  if (ys.front() < 0 || ys.back() >= b.size()) throw Error("restrict: point out of range");
  const int m = static_cast<int>(ys.size());
  BetweennessStructure out(m);
  for (int k = 2; k < m; ++k)
    for (int j = 1; j < k; ++j)
      for (int i = 0; i < j; ++i) {
        const TripleState s = b.state(ys[i], ys[j], ys[k]);
        // ys is increasing, so middle slots carry over unchanged.
        out.set_state(triple_rank(Triple{i, j, k}), s);
      }
  return out;
}

BetweennessStructure delete_point(const BetweennessStructure& b, Point x) {
  std::vector<Point> rest;
  for (Point p = 0; p < b.size(); ++p)
    if (p != x) rest.push_back(p);
  return restrict_to(b, rest);
}

BetweennessStructure relabel(const BetweennessStructure& b, std::span<const Point> perm) {
  const int n = b.size();
  if (static_cast<int>(perm.size()) != n) throw Error("relabel: permutation size mismatch");
  BetweennessStructure out(n);
  for (std::size_t r = 0; r < b.triple_total(); ++r) {
    const Triple t = triple_unrank(r);
    const TripleState s = b.state(r);
    if (s.is_triangle()) continue;
    const Point m = t[s.middle_slot()];
    const Point ends[2] = {t[(s.middle_slot() + 1) % 3], t[(s.middle_slot() + 2) % 3]};
    out.set_between(perm[ends[0]], perm[m], perm[ends[1]]);
  }
  return out;
}

bool is_extension(const BetweennessStructure& larger, const BetweennessStructure& smaller) {
  if (larger.size() != smaller.size()) throw Error("is_extension: point counts differ");
  for (std::size_t r = 0; r < smaller.triple_total(); ++r) {
    const TripleState s = smaller.state(r);
    if (s.is_collinear() && larger.state(r) != s) return false;
  }
  return true;
}

BetweennessStructure ordered_structure(const Ordering& order) {
  const int n = static_cast<int>(order.perm.size());
  BetweennessStructure out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) out.set_between(order.perm[i], order.perm[j], order.perm[k]);
  return out;
}

bool is_linear(const BetweennessStructure& b) { return cosize(b) == 0; }

std::optional<Ordering> is_ordered(const BetweennessStructure& b) {
  const int n = b.size();
  if (!is_linear(b)) return std::nullopt;
  if (n <= 2) {
    Ordering o;
    o.perm.resize(n);
    std::iota(o.perm.begin(), o.perm.end(), 0);
    return o;
  }
  // An ordered structure's adjacency graph is its path; the walk from the
  // smaller endpoint is the only candidate up to reversal.
  const SimpleGraph g = adjacency_graph(b);
  std::vector<Point> ends;
  for (Point p = 0; p < n; ++p) {
    const int d = g.degree(p);
    if (d == 1) ends.push_back(p);
    else if (d != 2) return std::nullopt;
  }
  if (ends.size() != 2) return std::nullopt;
  Ordering o;
  Point prev = -1, cur = ends.front();
  while (cur != -1) {
    o.perm.push_back(cur);
    Point next = -1;
    for (Point q : g.neighbors(cur))
      if (q != prev) next = q;
    prev = cur;
    cur = next;
    if (static_cast<int>(o.perm.size()) > n) return std::nullopt;
  }
  if (static_cast<int>(o.perm.size()) != n) return std::nullopt;
  if (ordered_structure(o) != b) return std::nullopt;
  return o;
}

bool is_cyclic_line(const BetweennessStructure& b, const std::array<Point, 4>& quad) {
  int as_middle[4] = {0, 0, 0, 0};
  for (int skip = 0; skip < 4; ++skip) {
    Point t[3];
    int k = 0;
    for (int i = 0; i < 4; ++i)
      if (i != skip) t[k++] = quad[i];
    const auto m = b.middle(t[0], t[1], t[2]);
    if (!m) return false;
    for (int i = 0; i < 4; ++i)
      if (quad[i] == *m) ++as_middle[i];
  }
  return as_middle[0] == 1 && as_middle[1] == 1 && as_middle[2] == 1 && as_middle[3] == 1;
}

std::vector<std::array<Point, 4>> find_cyclic_lines(const BetweennessStructure& b) {
  std::vector<std::array<Point, 4>> lines;
  const int n = b.size();
  for (Point a = 0; a < n; ++a)
    for (Point c = a + 1; c < n; ++c)
      for (Point d = c + 1; d < n; ++d)
        for (Point e = d + 1; e < n; ++e) {
          const std::array<Point, 4> q{a, c, d, e};
          if (is_cyclic_line(b, q)) lines.push_back(q);
        }
  return lines;
}

bool is_regular(const BetweennessStructure& b) { return find_cyclic_lines(b).empty(); }

namespace {

// Places points left to right. When p is placed last, a collinear triple
// {p, q, r} with q placed and r not yet placed forces p to be its middle.
struct OrderSearch {
  const BetweennessStructure& b;
  int n;
  std::vector<int> pos;
  std::vector<Point> seq;

  bool consistent_after_placing(Point p) const {
    for (Point q = 0; q < n; ++q) {
      if (q == p || pos[q] < 0) continue;
      for (Point r = 0; r < n; ++r) {
        if (r == p || r == q) continue;
        const auto m = b.middle(p, q, r);
        if (!m) continue;
        if (pos[r] < 0) {
          if (*m != p) return false;
          continue;
        }
        const Point e0 = *m == p ? q : p;
        const Point e1 = *m == r ? q : r;
        const int lo = std::min(pos[e0], pos[e1]);
        const int hi = std::max(pos[e0], pos[e1]);
        if (!(lo < pos[*m] && pos[*m] < hi)) return false;
      }
    }
    return true;
  }

  bool run() {
    if (static_cast<int>(seq.size()) == n) return true;
    for (Point p = 0; p < n; ++p) {
      if (pos[p] >= 0) continue;
      pos[p] = static_cast<int>(seq.size());
      seq.push_back(p);
      if (consistent_after_placing(p) && run()) return true;
      seq.pop_back();
      pos[p] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<Ordering> is_orderable(const BetweennessStructure& b) {
  if (b.size() > kOrderableMaxPoints) {
    throw GuardError("is_orderable: n = " + std::to_string(b.size()) + " exceeds guard " +
                     std::to_string(kOrderableMaxPoints));
  }
  OrderSearch s{b, b.size(), std::vector<int>(b.size(), -1), {}};
  if (!s.run()) return std::nullopt;
  return Ordering{s.seq};
}

}  // namespace bwl
