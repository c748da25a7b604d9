#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bwl/core.hpp"
#include "bwl/hyper.hpp"
#include "bwl/iso.hpp"

namespace bwl {

enum class PropertyFilter { Trivial, Regular, Orderable };

const char* to_string(PropertyFilter f);
/// Accepts "trivial", "regular" or "orderable".
PropertyFilter parse_filter(const std::string& text);

/// True iff b satisfies the filter.
bool satisfies_filter(const BetweennessStructure& b, PropertyFilter f);

struct EnumerateOptions {
  /// Permits n = 8 (and is required for it).
  bool long_run = false;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
  /// Resumable progress file; forces a single worker when set.
  std::filesystem::path checkpoint;
};

/// Largest n accepted: 7, or 8 with long_run. BWL_MAX_N overrides both.
int enumeration_max_points(bool long_run);
/// Throws GuardError naming the bound when n is out of range.
void check_enumeration_guard(int n, const EnumerateOptions& opt);

struct ClassRecord {
  CanonicalForm form;
  /// The canonical member of the class.
  BetweennessStructure representative;
  /// Number of labeled structures on {0..n-1} in the class.
  std::uint64_t labeled_count = 0;
};

struct ClassificationResult {
  int n = 0;
  int cosize = 0;
  PropertyFilter filter = PropertyFilter::Trivial;
  std::vector<ClassRecord> classes;
  std::size_t hypergraph_classes = 0;
  std::size_t leaves = 0;
  double seconds = 0;

  std::uint64_t labeled_total() const;
};

/// Non-isomorphic m-edge 3-uniform hypergraphs on n points, canonical members,
/// in a fixed deterministic order. Cached.
const std::vector<TriangleHypergraph>& hypergraph_classes(int n, int m);

/// Every almost-metrizable structure with triangle set exactly E(h) that passes the filter.
std::vector<BetweennessStructure> completions(const TriangleHypergraph& h, PropertyFilter filter);

/// First completion found in search order, if any.
std::optional<BetweennessStructure> first_completion(const TriangleHypergraph& h, PropertyFilter filter);

/// Isomorphism classes of the given structures, ordered by canonical form.
std::vector<ClassRecord> classify(std::span<const BetweennessStructure> items);

/// All almost-metrizable structures of order n and co-size exactly `cosize`
/// passing the filter, up to isomorphism.
ClassificationResult enumerate_structures(int n, int cosize, PropertyFilter filter, const EnumerateOptions& opt = {});

/// Witness of a nonempty B_filter(n, cosize), searching with early exit.
std::optional<BetweennessStructure> find_structure(int n, int cosize, PropertyFilter filter,
                                                   const EnumerateOptions& opt = {});

struct TauResult {
  int value = 0;
  BetweennessStructure witness{1};
};

/// min{m > k : B_filter(n, m) nonempty}.
TauResult tau(int n, int k, PropertyFilter filter, const EnumerateOptions& opt = {});
/// tau(n, n - 2, filter); requires n >= 4.
TauResult tau_second(int n, PropertyFilter filter, const EnumerateOptions& opt = {});

struct ProbeRow {
  int n = 0;
  long m = 0;
  bool nonempty = false;
  /// m lies outside 0..C(n,3), so emptiness needs no search.
  bool trivial = false;
};

/// Emptiness of B(n, k n - c) for n in [n_from, n_to].
std::vector<ProbeRow> probe_gamma_sigma(int k, int c, int n_from, int n_to, const EnumerateOptions& opt = {});

}  // namespace bwl
