#include "bwl/iso.hpp"

#include <algorithm>
#include <map>

namespace bwl {

namespace {

// Triple codes under relabeling. Oriented codes 0..2 name the middle slot and
// move with the middle point; plain codes are copied as they are.
class CanonSearch {
 public:
  CanonSearch(int n, std::span<const std::uint8_t> codes, bool oriented)
      : n_(n), codes_(codes), oriented_(oriented), new_of_(n, -1), old_of_(n, -1), cur_(codes.size()) {
    refine_colors();
    std::vector<int> sorted = color_;
    std::sort(sorted.begin(), sorted.end());
    label_color_ = sorted;
  }

  Canonization run() {
    search(0);
    Canonization out;
    out.form = {n_, best_};
    out.labeling = best_labeling_;
    out.automorphisms = automorphisms_;
    return out;
  }

 private:
  std::uint8_t code_of(Point x, Point y, Point z) const { return codes_[triple_rank(x, y, z)]; }

  // Colour refinement: a point's new colour is its old colour plus the sorted
  // multiset of (role, colours of the other two) over all triples through it.
  void refine_colors() {
    color_.assign(n_, 0);
    int classes = 1;
    for (;;) {
      std::vector<std::vector<int>> sig(n_);
      for (Point x = 0; x < n_; ++x) {
        std::vector<std::array<int, 3>> items;
        for (Point p = 0; p < n_; ++p)
          for (Point q = p + 1; q < n_; ++q) {
            if (p == x || q == x) continue;
            const Triple t = make_triple(x, p, q);
            const std::uint8_t c = code_of(x, p, q);
            int cp = color_[p], cq = color_[q];
            if (!oriented_ || c == TripleState::kTriangle) {
              items.push_back({c, std::min(cp, cq), std::max(cp, cq)});
            } else if (t[c] == x) {
              items.push_back({4, std::min(cp, cq), std::max(cp, cq)});
            } else {
              const Point m = t[c];
              const Point other = m == p ? q : p;
              items.push_back({5, color_[m], color_[other]});
            }
          }
        std::sort(items.begin(), items.end());
        sig[x].push_back(color_[x]);
        for (const auto& it : items) sig[x].insert(sig[x].end(), it.begin(), it.end());
      }
      std::vector<std::vector<int>> distinct = sig;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for (Point x = 0; x < n_; ++x)
        color_[x] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[x]) - distinct.begin());
      const int now = static_cast<int>(distinct.size());
      if (now == classes) break;
      classes = now;
    }
  }

  // Writes the codes of all triples whose largest new label is k. Returns the
  // comparison of that segment against the best form.
  int fill_segment(int k) {
    const std::size_t base = static_cast<std::size_t>(binomial(k, 3));
    std::size_t pos = base;
    const Point pk = old_of_[k];
    for (int b = 1; b < k; ++b) {
      const Point pb = old_of_[b];
      for (int a = 0; a < b; ++a, ++pos) {
        const Point pa = old_of_[a];
        const Triple old = make_triple(pa, pb, pk);
        std::uint8_t c = codes_[triple_rank(old)];
        if (oriented_ && c != TripleState::kTriangle) {
          const int label = new_of_[old[c]];
          c = static_cast<std::uint8_t>(label == a ? 0 : (label == b ? 1 : 2));
        }
        cur_[pos] = c;
      }
    }
    if (!has_best_) return -1;
    for (std::size_t i = base; i < pos; ++i) {
      if (cur_[i] < best_[i]) return -1;
      if (cur_[i] > best_[i]) return 1;
    }
    return 0;
  }

  // less_ is true once the current prefix is strictly below the best form.
  void search(int k) {
    if (k == n_) {
      if (!has_best_ || less_) {
        best_ = cur_;
        best_labeling_ = new_of_;
        has_best_ = true;
        automorphisms_ = 1;
        ++version_;
      } else {
        ++automorphisms_;
      }
      return;
    }
    bool saved_less = less_;
    for (Point p = 0; p < n_; ++p) {
      if (new_of_[p] >= 0 || color_[p] != label_color_[k]) continue;
      new_of_[p] = k;
      old_of_[k] = p;
      const int cmp = fill_segment(k);
      const std::uint64_t before = version_;
      if (less_ || cmp <= 0) {
        less_ = less_ || cmp < 0;
        search(k + 1);
      }
      // A new best found below shares this node's prefix.
      if (version_ != before) saved_less = false;
      less_ = saved_less;
      new_of_[p] = -1;
      old_of_[k] = -1;
    }
  }

  int n_;
  std::span<const std::uint8_t> codes_;
  bool oriented_;
  std::vector<int> color_;
  std::vector<int> label_color_;
  std::vector<Point> new_of_;
  std::vector<Point> old_of_;
  std::vector<std::uint8_t> cur_;
  std::vector<std::uint8_t> best_;
  std::vector<Point> best_labeling_;
  bool has_best_ = false;
  bool less_ = false;
  std::uint64_t version_ = 0;
  std::uint64_t automorphisms_ = 0;
};

void guard(int n) {
  if (n > kCanonicalMaxPoints) {
    throw GuardError("canonical form: n = " + std::to_string(n) + " exceeds guard " +
                     std::to_string(kCanonicalMaxPoints));
  }
}

}  // namespace

std::string CanonicalForm::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out = std::to_string(n) + ":";
  for (auto c : bytes) out.push_back(kDigits[c & 0xf]);
  return out;
}

CanonicalForm CanonicalForm::from_hex(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error("canonical form needs an 'n:' prefix: " + text);
  CanonicalForm f;
  try {
    f.n = std::stoi(text.substr(0, colon));
  } catch (const std::exception&) {
    throw Error("bad canonical form order: " + text);
  }
  if (f.n < 1 || f.n > kCanonicalMaxPoints || text.size() - colon - 1 != triple_count(f.n))
    throw Error("canonical form length does not match its order: " + text);
  for (std::size_t i = colon + 1; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '3') throw Error("bad canonical form digit in " + text);
    f.bytes.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return f;
}

Canonization canonize(const BetweennessStructure& b) {
  guard(b.size());
  return CanonSearch(b.size(), b.codes(), true).run();
}

Canonization canonize(const TriangleHypergraph& h) {
  guard(h.size());
  std::vector<std::uint8_t> codes(triple_count(h.size()), 0);
  for (const auto& t : h.edges()) codes[triple_rank(t)] = 1;
  return CanonSearch(h.size(), codes, false).run();
}

CanonicalForm canonical_form(const BetweennessStructure& b) { return canonize(b).form; }
CanonicalForm canonical_form(const TriangleHypergraph& h) { return canonize(h).form; }

bool is_isomorphic(const BetweennessStructure& a, const BetweennessStructure& b) {
  if (a.size() != b.size()) throw Error("is_isomorphic: point counts differ");
  return canonical_form(a) == canonical_form(b);
}

bool is_isomorphic(const TriangleHypergraph& a, const TriangleHypergraph& b) {
  if (a.size() != b.size()) throw Error("is_isomorphic: point counts differ");
  return canonical_form(a) == canonical_form(b);
}

std::vector<IsoClass> dedupe(std::span<const BetweennessStructure> items) {
  std::vector<IsoClass> classes;
  std::map<CanonicalForm, std::size_t> index;
  for (const auto& b : items) {
    CanonicalForm f = canonical_form(b);
    auto [it, fresh] = index.emplace(f, classes.size());
    if (fresh) classes.push_back({std::move(f), b, 0});
    ++classes[it->second].multiplicity;
  }
  return classes;
}

BetweennessStructure structure_from_form(const CanonicalForm& form) {
  BetweennessStructure b(form.n);
  if (form.bytes.size() != b.triple_total()) throw Error("canonical form length mismatch");
  for (std::size_t r = 0; r < form.bytes.size(); ++r) b.set_state(r, TripleState::from_code(form.bytes[r]));
  return b;
}

}  // namespace bwl
