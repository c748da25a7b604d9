#include "bwl/propagate.hpp"

#include <bit>
#include <map>
#include <mutex>

namespace bwl {

namespace {

// Literal for (x m z): triple {x, m, z} with m in the middle.
std::pair<std::uint32_t, std::uint8_t> between_literal(Point x, Point m, Point z) {
  const Triple t = make_triple(x, m, z);
  return {static_cast<std::uint32_t>(triple_rank(t)), static_cast<std::uint8_t>(t.slot_of(m))};
}

std::shared_ptr<const FrpRules> compile_rules(int n) {
  auto rules = std::make_shared<FrpRules>();
  rules->n = n;
  rules->by_triple.resize(triple_count(n));
  auto add = [&](std::pair<std::uint32_t, std::uint8_t> a, std::pair<std::uint32_t, std::uint8_t> b,
                 std::pair<std::uint32_t, std::uint8_t> c) {
    const auto idx = static_cast<std::uint32_t>(rules->clauses.size());
    rules->clauses.push_back({{a.first, b.first, c.first}, {a.second, b.second, c.second}});
    rules->by_triple[a.first].push_back(idx);
    rules->by_triple[b.first].push_back(idx);
    rules->by_triple[c.first].push_back(idx);
  };
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y)
      for (Point z = 0; z < n; ++z)
        for (Point w = 0; w < n; ++w) {
          if (x == y || x == z || x == w || y == z || y == w || z == w) continue;
          // (x y z) & (x w y) => (x w z) and (w y z)
          const auto a = between_literal(x, y, z);
          const auto b = between_literal(x, w, y);
          add(a, b, between_literal(x, w, z));
          add(a, b, between_literal(w, y, z));
        }
  return rules;
}

}  // namespace

std::shared_ptr<const FrpRules> frp_rules(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const FrpRules>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = compile_rules(n);
  return slot;
}

PartialStructure::PartialStructure(int n)
    : n_(n), rules_(frp_rules(n)), masks_(triple_count(n), kAllOptions) {
  if (n < 1 || n > kMaxPoints) throw Error("point count must be in 1.." + std::to_string(kMaxPoints));
}

bool PartialStructure::decided(std::size_t rank) const { return std::has_single_bit(masks_[rank]); }

TripleState PartialStructure::value(std::size_t rank) const {
  if (!decided(rank)) throw Error("triple is undecided");
  return TripleState::from_code(static_cast<std::uint8_t>(std::countr_zero(masks_[rank])));
}

bool PartialStructure::complete() const {
  for (std::size_t r = 0; r < masks_.size(); ++r)
    if (!decided(r)) return false;
  return !conflict_;
}

bool PartialStructure::narrow(std::size_t rank, std::uint8_t keep) {
  const std::uint8_t old = masks_[rank];
  const std::uint8_t now = old & keep;
  if (now == old) return true;
  trail_.emplace_back(static_cast<std::uint32_t>(rank), old);
  masks_[rank] = now;
  if (now == 0) {
    conflict_ = true;
    return false;
  }
  queue_.push_back(static_cast<std::uint32_t>(rank));
  return true;
}

bool PartialStructure::restrict_options(std::size_t rank, std::uint8_t keep) {
  if (conflict_) return false;
  if (!narrow(rank, keep)) return false;
  return propagate();
}

bool PartialStructure::propagate() {
  while (!queue_.empty()) {
    const std::uint32_t r = queue_.back();
    queue_.pop_back();
    for (const std::uint32_t ci : rules_->by_triple[r]) {
      const FrpClause& c = rules_->clauses[ci];
      const bool t0 = is_true(c.rank[0], c.code[0]);
      const bool t1 = is_true(c.rank[1], c.code[1]);
      bool ok = true;
      if (t0 && t1) {
        ok = narrow(c.rank[2], option_bit(c.code[2]));
      } else if (is_false(c.rank[2], c.code[2])) {
        if (t0) ok = narrow(c.rank[1], static_cast<std::uint8_t>(~option_bit(c.code[1])));
        else if (t1) ok = narrow(c.rank[0], static_cast<std::uint8_t>(~option_bit(c.code[0])));
      }
      if (!ok) {
        queue_.clear();
        return false;
      }
    }
  }
  return true;
}

bool PartialStructure::fix_triangles(const TriangleHypergraph& h) {
  if (h.size() != n_) throw Error("hypergraph size does not match the structure");
  if (conflict_) return false;
  for (std::size_t r = 0; r < masks_.size(); ++r)
    if (!narrow(r, h.has_edge(r) ? option_bit(TripleState::kTriangle) : kMiddleOptions)) {
      queue_.clear();
      return false;
    }
  return propagate();
}

void PartialStructure::undo(Mark m) {
  while (trail_.size() > m) {
    masks_[trail_.back().first] = trail_.back().second;
    trail_.pop_back();
  }
  queue_.clear();
  conflict_ = false;
}

std::vector<std::size_t> PartialStructure::changed_since(Mark m) const {
  std::vector<std::size_t> out;
  for (std::size_t i = m; i < trail_.size(); ++i) out.push_back(trail_[i].first);
  return out;
}

std::optional<std::size_t> PartialStructure::pick_branch() const {
  std::optional<std::size_t> best;
  int best_count = 5;
  for (std::size_t r = 0; r < masks_.size(); ++r) {
    const int c = std::popcount(masks_[r]);
    if (c > 1 && c < best_count) {
      best = r;
      best_count = c;
      if (c == 2) break;
    }
  }
  return best;
}

BetweennessStructure PartialStructure::to_structure() const {
  if (!complete()) throw Error("partial structure is not complete");
  BetweennessStructure b(n_);
  for (std::size_t r = 0; r < masks_.size(); ++r) b.set_state(r, value(r));
  return b;
}

bool decided_cyclic_line(const PartialStructure& p, const std::array<Point, 4>& quad) {
  int middles[4] = {0, 0, 0, 0};
  for (int skip = 0; skip < 4; ++skip) {
    Point t[3];
    int k = 0;
    for (int i = 0; i < 4; ++i)
      if (i != skip) t[k++] = quad[i];
    const std::size_t r = triple_rank(t[0], t[1], t[2]);
    if (!p.decided(r)) return false;
    const TripleState s = p.value(r);
    if (s.is_triangle()) return false;
    const Point m = make_triple(t[0], t[1], t[2])[s.middle_slot()];
    for (int i = 0; i < 4; ++i)
      if (quad[i] == m) ++middles[i];
  }
  return middles[0] == 1 && middles[1] == 1 && middles[2] == 1 && middles[3] == 1;
}

bool touches_cyclic_line(const PartialStructure& p, const std::vector<std::size_t>& ranks) {
  for (const std::size_t r : ranks) {
    if (!p.decided(r) || p.value(r).is_triangle()) continue;
    const Triple t = triple_unrank(r);
    for (Point w = 0; w < p.size(); ++w) {
      if (t.contains(w)) continue;
      if (decided_cyclic_line(p, {t.a, t.b, t.c, w})) return true;
    }
  }
  return false;
}

namespace {

bool walk(PartialStructure& p, const NodePrune& prune, const LeafVisit& leaf) {
  const auto branch = p.pick_branch();
  if (!branch) return leaf(p.to_structure());
  const std::uint8_t options = p.mask(*branch);
  for (std::uint8_t code = 0; code < 4; ++code) {
    if (!(options & option_bit(code))) continue;
    const auto m = p.mark();
    bool keep_going = true;
    if (p.restrict_options(*branch, option_bit(code)) && !(prune && prune(p, p.changed_since(m))))
      keep_going = walk(p, prune, leaf);
    p.undo(m);
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

bool for_each_completion(PartialStructure& p, const NodePrune& prune, const LeafVisit& leaf) {
  if (p.conflict()) return true;
  if (prune) {
    std::vector<std::size_t> all(p.triple_total());
    for (std::size_t r = 0; r < all.size(); ++r) all[r] = r;
    if (prune(p, all)) return true;
  }
  return walk(p, prune, leaf);
}

}  // namespace bwl
