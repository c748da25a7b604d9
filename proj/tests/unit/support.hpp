#pragma once

// Independent reference implementations and random generators for the tests.
// Nothing here calls the library routine it is meant to check.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "bwl/core.hpp"
#include "bwl/graphs.hpp"

namespace support {

using bwl::Point;
using bwl::Rational;

inline std::vector<Point> random_perm(std::mt19937& rng, int n) {
  std::vector<Point> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Rational random_weight(std::mt19937& rng, int bound) {
  Rational w(uniform(rng, 1, bound), uniform(rng, 1, bound));
  w.canonicalize();
  return w;
}

/// Random spanning tree plus extra edges, each with weight p/q, 1 <= p, q <= bound.
inline bwl::WeightedGraph random_connected_graph(std::mt19937& rng, int n, int bound) {
  bwl::WeightedGraph g(n);
  const auto order = random_perm(rng, n);
  std::vector<std::vector<bool>> used(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (int i = 1; i < n; ++i) {
    const Point u = order[static_cast<std::size_t>(i)];
    const Point v = order[static_cast<std::size_t>(uniform(rng, 0, i - 1))];
    g.add_edge(u, v, random_weight(rng, bound));
    used[u][v] = used[v][u] = true;
  }
  const int extra = uniform(rng, 0, n * (n - 1) / 2 - (n - 1));
  for (int k = 0; k < extra; ++k) {
    const Point u = uniform(rng, 0, n - 1), v = uniform(rng, 0, n - 1);
    if (u == v || used[u][v]) continue;
    g.add_edge(u, v, random_weight(rng, bound));
    used[u][v] = used[v][u] = true;
  }
  return g;
}

/// Floyd-Warshall on a plain matrix; -1 marks "no path yet".
inline std::vector<std::vector<Rational>> floyd(const bwl::WeightedGraph& g) {
  const auto n = static_cast<std::size_t>(g.size());
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, Rational(-1)));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = e.weight;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] >= 0 && d[k][j] >= 0 && (d[i][j] < 0 || d[i][k] + d[k][j] < d[i][j])) d[i][j] = d[i][k] + d[k][j];
  return d;
}

/// True iff m is a metric: zero diagonal, positive and symmetric off it, triangle inequality.
inline bool is_metric(const bwl::RationalMetric& m) {
  const int n = m.size();
  for (int x = 0; x < n; ++x) {
    if (m.at(x, x) != 0) return false;
    for (int y = 0; y < n; ++y) {
      if (x != y && (m.at(x, y) <= 0 || m.at(x, y) != m.at(y, x))) return false;
      for (int z = 0; z < n; ++z)
        if (m.at(x, z) > m.at(x, y) + m.at(y, z)) return false;
    }
  }
  return true;
}

/// Betweenness read straight off the distances.
inline bool metric_between(const bwl::RationalMetric& m, Point x, Point y, Point z) {
  return m.at(x, z) == m.at(x, y) + m.at(y, z);
}

/// True iff m induces exactly b.
inline bool induces(const bwl::RationalMetric& m, const bwl::BetweennessStructure& b) {
  const int n = b.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = x + 1; z < n; ++z) {
        if (y == x || y == z) continue;
        if (metric_between(m, x, y, z) != b.between(x, y, z)) return false;
      }
  return true;
}

/// Four relations property by brute force over ordered 4-tuples, plus the
/// at-most-one-middle condition.
inline bool frp_holds(const bwl::BetweennessStructure& b) {
  const int n = b.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (x == y || y == z || x == z) continue;
        if (b.between(x, y, z) != b.between(z, y, x)) return false;
        if (b.between(x, y, z) && (b.between(y, x, z) || b.between(x, z, y))) return false;
        for (int w = 0; w < n; ++w) {
          if (w == x || w == y || w == z) continue;
          if (b.between(x, y, z) && b.between(x, w, y) && !(b.between(x, w, z) && b.between(w, y, z))) return false;
        }
      }
  return true;
}

/// Structure on n points with the given per-rank state codes.
inline bwl::BetweennessStructure from_codes(int n, const std::vector<std::uint8_t>& codes) {
  bwl::BetweennessStructure b(n);
  for (std::size_t r = 0; r < codes.size(); ++r) b.set_state(r, bwl::TripleState::from_code(codes[r]));
  return b;
}

/// Calls f on every one of the 4^C(n,3) total assignments.
template <class F>
void for_each_assignment(int n, F f) {
  const std::size_t t = bwl::triple_count(n);
  std::vector<std::uint8_t> codes(t, 0);
  while (true) {
    f(from_codes(n, codes));
    std::size_t i = 0;
    while (i < t && codes[i] == 3) codes[i++] = 0;
    if (i == t) return;
    ++codes[i];
  }
}

/// Applies perm (perm[old] = new) by reading betweenness pointwise.
inline bwl::BetweennessStructure permuted(const bwl::BetweennessStructure& b, const std::vector<Point>& perm) {
  const int n = b.size();
  bwl::BetweennessStructure out(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = x + 1; z < n; ++z)
        if (y != x && y != z && b.between(x, y, z)) out.set_between(perm[x], perm[y], perm[z]);
  return out;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace support

#include <set>

#include "bwl/feasibility.hpp"

namespace support {

/// Feasibility of { a . x >= b } by Fourier-Motzkin elimination, exact.
inline bool fourier_motzkin_feasible(int vars, std::vector<std::pair<std::vector<Rational>, Rational>> rows) {
  auto normalize = [](std::pair<std::vector<Rational>, Rational>& row) {
    Rational scale = 0;
    for (const auto& a : row.first)
      if (a != 0) {
        scale = abs(a);
        break;
      }
    if (scale == 0) return;
    for (auto& a : row.first) a /= scale;
    row.second /= scale;
  };
  for (int k = 0; k < vars; ++k) {
    std::vector<std::pair<std::vector<Rational>, Rational>> pos, neg, next;
    for (auto& r : rows) {
      const auto& a = r.first[static_cast<std::size_t>(k)];
      if (a > 0) pos.push_back(r);
      else if (a < 0) neg.push_back(r);
      else next.push_back(r);
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        const Rational wp = -q.first[static_cast<std::size_t>(k)], wq = p.first[static_cast<std::size_t>(k)];
        std::pair<std::vector<Rational>, Rational> c{std::vector<Rational>(p.first.size()), wp * p.second + wq * q.second};
        for (std::size_t j = 0; j < c.first.size(); ++j) c.first[j] = wp * p.first[j] + wq * q.first[j];
        next.push_back(std::move(c));
      }
    std::set<std::pair<std::vector<Rational>, Rational>> dedup;
    for (auto& r : next) {
      normalize(r);
      dedup.insert(r);
    }
    rows.assign(dedup.begin(), dedup.end());
  }
  for (const auto& r : rows)
    if (r.second > 0) return false;
  return true;
}

inline bool fourier_motzkin_feasible(const bwl::LinearSystem& sys) {
  std::vector<std::pair<std::vector<Rational>, Rational>> rows;
  for (const auto& e : sys.equalities) {
    rows.push_back({e.coeffs, e.rhs});
    std::vector<Rational> neg(e.coeffs.size());
    for (std::size_t j = 0; j < neg.size(); ++j) neg[j] = -e.coeffs[j];
    rows.push_back({neg, -e.rhs});
  }
  for (const auto& i : sys.inequalities) rows.push_back({i.coeffs, i.rhs});
  return fourier_motzkin_feasible(sys.num_vars, rows);
}

}  // namespace support
