#pragma once

#include <optional>
#include <vector>

#include "bwl/core.hpp"
#include "bwl/feasibility.hpp"
#include "bwl/graphs.hpp"
#include "bwl/hyper.hpp"
#include "bwl/iso.hpp"

namespace bwl {

/// One variable per unordered pair (colex pair rank). Each collinear triple
/// (x y z) gives d_xz = d_xy + d_yz; each triangle gives the three slacks
/// d_xy + d_yz - d_xz >= 1; every distance is bounded by d >= 1.
LinearSystem metric_system(const BetweennessStructure& b);

/// A metric inducing exactly b, or none if the system is infeasible.
std::optional<RationalMetric> metrize_structure(const BetweennessStructure& b);

/// Same, but also reports which part of the system failed.
struct StructureMetrization {
  FeasibilityStatus status = FeasibilityStatus::InequalityInfeasible;
  std::optional<RationalMetric> metric;
  std::string note;
};
StructureMetrization metrize_structure_detailed(const BetweennessStructure& b);

inline constexpr int kMetrizeMaxPoints = 9;

enum class NotMetrizableReason { NoAlmostMetrizableAssignment, AllAssignmentsLPInfeasible };

struct RealizingClass {
  CanonicalForm form;
  BetweennessStructure representative;
  /// Labeled assignments (over the fixed hypergraph) falling into this class.
  std::size_t assignments = 0;
  bool metrizable = false;
  std::optional<RationalMetric> metric;
};

struct MetrizationVerdict {
  bool metrizable = false;
  std::optional<RationalMetric> metric;
  std::optional<BetweennessStructure> structure;
  std::optional<NotMetrizableReason> reason;  // set iff !metrizable
  /// Filled for collect_all, or whenever the search had to visit everything.
  std::vector<RealizingClass> classes;
  std::size_t assignments = 0;  // almost-metrizable leaves visited
  bool exhaustive = false;
};

/// Searches the middle assignments of the non-edges of h (edges are forced to
/// Triangle) with P4 propagation and LP-tests each almost-metrizable one.
/// With collect_all every realizing class is returned with its own verdict.
MetrizationVerdict metrize_hypergraph(const TriangleHypergraph& h, bool collect_all);

const char* to_string(NotMetrizableReason r);

}  // namespace bwl
