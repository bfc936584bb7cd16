#pragma once

// Dense two-phase simplex for min c.x subject to A x = b, x >= 0, in MPFR
// arithmetic. Bland's rule (lowest index enters and leaves) rules out cycling.

#include <vector>

#include "seidelpoly/bigfloat.hpp"

namespace seidelpoly {

struct LinearProgram {
  std::vector<std::vector<BigFloat>> a;
  std::vector<BigFloat> b;
  std::vector<BigFloat> c;
};

struct SimplexTolerances {
  /// Magnitudes below this count as zero in pivot and reduced-cost tests.
  BigFloat zero;
  /// Phase-one optimum above this means infeasible.
  BigFloat feasibility;
};

enum class SimplexStatus { optimal, infeasible, unbounded };

struct SimplexResult {
  SimplexStatus status = SimplexStatus::infeasible;
  BigFloat objective;
  std::vector<BigFloat> x;
  /// max_k |(A x - b)_k| at the returned point.
  BigFloat residual;
};

/// An empty objective vector asks for feasibility only.
SimplexResult solve_simplex(const LinearProgram& lp, const SimplexTolerances& tol);

}  // namespace seidelpoly
