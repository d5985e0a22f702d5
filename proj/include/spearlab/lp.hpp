#pragma once

#include <cstddef>
#include <vector>

#include "spearlab/linalg.hpp"

namespace spearlab {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Sense { Minimize, Maximize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LinearConstraint {
  RatVector coeffs;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

struct LpOptions {
  std::size_t pivot_cap = 1'000'000;
  /// Variables flagged here are constrained to be >= 0. All others are free.
  std::vector<bool> nonnegative;
};

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  RatVector point;
  std::size_t pivots = 0;
};

/// Exact two-phase primal simplex over free (or flagged nonnegative) variables.
///
/// Pivoting follows Bland's rule: the entering column is the lowest-index
/// improving column and the leaving row is the lowest-index basic variable
/// among the minimum-ratio rows. The sequence of pivots is therefore fully
/// determined by the input, and so is the returned optimal point.
///
/// Throws Error(DimensionMismatch) for ragged rows and ResourceError when the
/// pivot cap is exceeded.
LpResult solve_lp(const RatVector& objective, const std::vector<LinearConstraint>& constraints,
                  Sense sense, const LpOptions& options = {});

}  // namespace spearlab
