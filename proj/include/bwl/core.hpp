#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bwl {

using Point = int;

/// Hard upper bound on the number of points a structure may carry.
inline constexpr int kMaxPoints = 12;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an input exceeds a size guard (enumeration, canonical form, ...).
class GuardError : public Error {
 public:
  using Error::Error;
};

constexpr std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < k) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

constexpr std::size_t triple_count(int n) { return static_cast<std::size_t>(binomial(n, 3)); }
constexpr std::size_t pair_count(int n) { return static_cast<std::size_t>(binomial(n, 2)); }

/// Sorted triple i < j < k.
struct Triple {
  Point a = 0, b = 0, c = 0;
  constexpr bool contains(Point p) const { return p == a || p == b || p == c; }
  constexpr Point operator[](int slot) const { return slot == 0 ? a : (slot == 1 ? b : c); }
  constexpr int slot_of(Point p) const { return p == a ? 0 : (p == b ? 1 : (p == c ? 2 : -1)); }
  friend constexpr bool operator==(const Triple&, const Triple&) = default;
};

constexpr Triple make_triple(Point x, Point y, Point z) {
  if (x > y) std::swap(x, y);
  if (y > z) std::swap(y, z);
  if (x > y) std::swap(x, y);
  return {x, y, z};
}

/// Colexicographic rank of a sorted triple.
constexpr std::size_t triple_rank(const Triple& t) {
  return static_cast<std::size_t>(binomial(t.a, 1) + binomial(t.b, 2) + binomial(t.c, 3));
}

/// Rank of the unordered triple {x, y, z}; the points must be distinct.
std::size_t triple_rank(Point x, Point y, Point z);

Triple triple_unrank(std::size_t rank);

/// Colex rank of the pair {x, y}, x != y.
constexpr std::size_t pair_rank(Point x, Point y) {
  if (x > y) std::swap(x, y);
  return static_cast<std::size_t>(binomial(y, 2)) + static_cast<std::size_t>(x);
}

std::array<Point, 2> pair_unrank(std::size_t rank);

/// State of one triple: a triangle, or collinear with the point at `slot` of the
/// sorted triple in the middle. Codes 0..2 are middle slots, 3 is Triangle.
class TripleState {
 public:
  static constexpr std::uint8_t kTriangle = 3;

  constexpr TripleState() = default;
  static constexpr TripleState triangle() { return TripleState(kTriangle); }
  static constexpr TripleState collinear(int slot) { return TripleState(static_cast<std::uint8_t>(slot)); }
  static constexpr TripleState from_code(std::uint8_t code) { return TripleState(code); }

  constexpr bool is_triangle() const { return code_ == kTriangle; }
  constexpr bool is_collinear() const { return code_ != kTriangle; }
  constexpr int middle_slot() const { return code_; }
  constexpr std::uint8_t code() const { return code_; }

  friend constexpr bool operator==(TripleState, TripleState) = default;

 private:
  constexpr explicit TripleState(std::uint8_t code) : code_(code) {}
  std::uint8_t code_ = kTriangle;
};

/// A permutation of 0..n-1 listing points in path order.
struct Ordering {
  std::vector<Point> perm;
  friend bool operator==(const Ordering&, const Ordering&) = default;
};

/// Total assignment of a TripleState to every 3-subset of {0..n-1}.
class BetweennessStructure {
 public:
  /// All triples start as triangles.
  explicit BetweennessStructure(int n);

  int size() const { return n_; }
  std::size_t triple_total() const { return states_.size(); }

  TripleState state(std::size_t rank) const { return TripleState::from_code(states_[rank]); }
  TripleState state(Point x, Point y, Point z) const { return state(triple_rank(x, y, z)); }

  /// Middle point of {x, y, z}, if collinear.
  std::optional<Point> middle(Point x, Point y, Point z) const;
  /// True iff (x y z), i.e. y lies between x and z.
  bool between(Point x, Point y, Point z) const;

  void set_state(std::size_t rank, TripleState s) { states_[rank] = s.code(); }
  /// Records (x y z): y is the middle of the triple.
  void set_between(Point x, Point y, Point z);
  void set_triangle(Point x, Point y, Point z);

  std::span<const std::uint8_t> codes() const { return states_; }

  friend bool operator==(const BetweennessStructure&, const BetweennessStructure&) = default;

 private:
  int n_;
  std::vector<std::uint8_t> states_;
};

bool check_frp(const BetweennessStructure& b);

/// Describes the first four relations violation, if any, as "(x y z),(x w y) => ...".
std::optional<std::string> find_frp_violation(const BetweennessStructure& b);

std::size_t cosize(const BetweennessStructure& b);
std::size_t triangle_degree(const BetweennessStructure& b, Point x);
/// Number of collinear triples having x as the middle.
std::size_t middle_degree(const BetweennessStructure& b, Point x);

/// Substructure on Y; points are relabeled 0..|Y|-1 preserving index order.
BetweennessStructure restrict_to(const BetweennessStructure& b, std::span<const Point> subset);
BetweennessStructure delete_point(const BetweennessStructure& b, Point x);

/// The structure whose point perm[x] plays the role of point x in b.
BetweennessStructure relabel(const BetweennessStructure& b, std::span<const Point> perm);

/// True iff every collinear triple of `smaller` is collinear with the same middle in `larger`.
bool is_extension(const BetweennessStructure& larger, const BetweennessStructure& smaller);

/// The ordered structure [o_1, ..., o_n].
BetweennessStructure ordered_structure(const Ordering& order);

bool is_linear(const BetweennessStructure& b);
std::optional<Ordering> is_ordered(const BetweennessStructure& b);
/// True iff the 4-point restriction to `quad` is isomorphic to B(C_4).
bool is_cyclic_line(const BetweennessStructure& b, const std::array<Point, 4>& quad);
std::vector<std::array<Point, 4>> find_cyclic_lines(const BetweennessStructure& b);
bool is_regular(const BetweennessStructure& b);

inline constexpr int kOrderableMaxPoints = 10;
/// An ordering whose ordered structure extends b. Throws GuardError for n > 10.
std::optional<Ordering> is_orderable(const BetweennessStructure& b);

}  // namespace bwl
