#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bwl/core.hpp"
#include "bwl/hyper.hpp"

namespace bwl {

inline constexpr int kCanonicalMaxPoints = 10;

/// Lexicographically minimal triple-code sequence over all relabelings.
/// Equal forms iff isomorphic objects of the same kind.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint8_t> bytes;

  /// "n:" followed by one hex digit per triple rank.
  std::string hex() const;
  /// Inverse of hex(); throws Error on malformed text.
  static CanonicalForm from_hex(const std::string& text);
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

struct Canonization {
  CanonicalForm form;
  /// labeling[old] = new label attaining the form.
  std::vector<Point> labeling;
  /// Order of the automorphism group.
  std::uint64_t automorphisms = 0;
};

Canonization canonize(const BetweennessStructure& b);
Canonization canonize(const TriangleHypergraph& h);

CanonicalForm canonical_form(const BetweennessStructure& b);
CanonicalForm canonical_form(const TriangleHypergraph& h);

bool is_isomorphic(const BetweennessStructure& a, const BetweennessStructure& b);
bool is_isomorphic(const TriangleHypergraph& a, const TriangleHypergraph& b);

struct IsoClass {
  CanonicalForm form;
  BetweennessStructure representative;
  std::size_t multiplicity = 0;
};

/// One entry per isomorphism class, in first-seen order, keeping the first
/// member seen as representative.
std::vector<IsoClass> dedupe(std::span<const BetweennessStructure> items);

/// The structure whose code sequence is the form.
BetweennessStructure structure_from_form(const CanonicalForm& form);

}  // namespace bwl
