#pragma once

#include <span>
#include <string>
#include <vector>

#include "bwl/rational.hpp"

namespace bwl {

/// Dense row: sum_j coeffs[j] * x_j (op) rhs.
struct LinearConstraint {
  std::vector<Rational> coeffs;
  Rational rhs;
};

/// Variables are unrestricted; bounds are expressed as inequality rows.
struct LinearSystem {
  int num_vars = 0;
  std::vector<LinearConstraint> equalities;    // coeffs . x == rhs
  std::vector<LinearConstraint> inequalities;  // coeffs . x >= rhs

  LinearConstraint& add_equality();
  LinearConstraint& add_inequality();
};

enum class FeasibilityStatus { Feasible, EqualityInconsistent, InequalityInfeasible };

struct FeasibilityResult {
  FeasibilityStatus status = FeasibilityStatus::InequalityInfeasible;
  std::vector<Rational> point;  // set iff Feasible
  /// Short infeasibility note (offending equality row or phase-one optimum).
  std::string note;
  std::size_t pivots = 0;
};

/// Exact feasibility: Gaussian elimination of the equalities, then a phase-one
/// simplex with Bland's rule on the reduced inequality system.
FeasibilityResult solve_feasibility(const LinearSystem& sys);

/// True iff x satisfies every row of sys exactly.
bool satisfies(const LinearSystem& sys, std::span<const Rational> x);

const char* to_string(FeasibilityStatus s);

}  // namespace bwl
