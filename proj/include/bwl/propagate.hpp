#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "bwl/core.hpp"
#include "bwl/hyper.hpp"

namespace bwl {

/// Option bits per triple: bit s (s < 3) is "collinear with middle slot s",
/// bit 3 is Triangle.
inline constexpr std::uint8_t kAllOptions = 0xF;
inline constexpr std::uint8_t kMiddleOptions = 0x7;
constexpr std::uint8_t option_bit(std::uint8_t code) { return static_cast<std::uint8_t>(1u << code); }

/// Ground instance of P4 read as an implication lit[0] & lit[1] => lit[2],
/// where a literal (rank, code) means "triple rank has state code".
struct FrpClause {
  std::uint32_t rank[3];
  std::uint8_t code[3];
};

/// All ground P4 clauses for n points, grouped by the triples they mention.
struct FrpRules {
  int n = 0;
  std::vector<FrpClause> clauses;
  std::vector<std::vector<std::uint32_t>> by_triple;  // clause indices per rank
};

/// Compiled once per n and shared between threads.
std::shared_ptr<const FrpRules> frp_rules(int n);

/// Per-triple option masks with unit propagation of P4 and an undo trail.
class PartialStructure {
 public:
  explicit PartialStructure(int n);

  int size() const { return n_; }
  std::size_t triple_total() const { return masks_.size(); }
  std::uint8_t mask(std::size_t rank) const { return masks_[rank]; }
  bool decided(std::size_t rank) const;
  /// State of a decided triple.
  TripleState value(std::size_t rank) const;
  bool complete() const;
  bool conflict() const { return conflict_; }

  /// Restricts triple `rank` to the options in `keep` and propagates.
  /// Returns false (and leaves the structure in conflict) if a mask empties.
  bool restrict_options(std::size_t rank, std::uint8_t keep);
  bool assign(std::size_t rank, TripleState s) { return restrict_options(rank, option_bit(s.code())); }

  /// Forces edges of h to Triangle and all other triples to collinear, then propagates.
  bool fix_triangles(const TriangleHypergraph& h);

  using Mark = std::size_t;
  Mark mark() const { return trail_.size(); }
  /// Restores every mask changed since `m` and clears the conflict flag.
  void undo(Mark m);
  /// Ranks whose mask changed since `m`, in change order (may repeat).
  std::vector<std::size_t> changed_since(Mark m) const;

  /// Undecided triple with the fewest options, ties to the lowest rank.
  std::optional<std::size_t> pick_branch() const;

  /// Requires complete().
  BetweennessStructure to_structure() const;

 private:
  bool narrow(std::size_t rank, std::uint8_t keep);
  bool propagate();
  bool is_true(std::size_t rank, std::uint8_t code) const { return masks_[rank] == option_bit(code); }
  bool is_false(std::size_t rank, std::uint8_t code) const { return !(masks_[rank] & option_bit(code)); }

  int n_;
  std::shared_ptr<const FrpRules> rules_;
  std::vector<std::uint8_t> masks_;
  std::vector<std::pair<std::uint32_t, std::uint8_t>> trail_;  // (rank, previous mask)
  std::vector<std::uint32_t> queue_;
  bool conflict_ = false;
};

/// True iff the four triples of `quad` are decided and form a cyclic line.
bool decided_cyclic_line(const PartialStructure& p, const std::array<Point, 4>& quad);

/// Looks for a decided cyclic line among 4-sets containing one of `ranks`.
bool touches_cyclic_line(const PartialStructure& p, const std::vector<std::size_t>& ranks);


/// Node filter: receives the node and the ranks changed on the way in; true rejects it.
using NodePrune = std::function<bool(const PartialStructure&, const std::vector<std::size_t>&)>;
/// Leaf visitor; returning false stops the search.
using LeafVisit = std::function<bool(const BetweennessStructure&)>;

/// Depth-first walk over every complete assignment reachable from p, branching
/// on pick_branch() with options in ascending code order. p is restored on
/// return. Returns false iff a visitor stopped the walk.
bool for_each_completion(PartialStructure& p, const NodePrune& prune, const LeafVisit& leaf);

}  // namespace bwl
