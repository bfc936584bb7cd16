#pragma once

// Enumeration of (delta-partial) Seidel interlacing polynomials through
// linear programs over the cone spanned by the deflated factors
// Min_j(p, x - 1) = Min(p, x - 1) / (x - lambda_j - 1).

#include <vector>

#include "seidelpoly/bigfloat.hpp"
#include "seidelpoly/enumerate.hpp"
#include "seidelpoly/poly.hpp"

namespace seidelpoly {

struct RootMatrix {
  int r = 0;
  int precision_digits = 0;
  /// Distinct roots lambda_1 < ... < lambda_r of Min(p, x).
  std::vector<BigFloat> roots;
  /// entries[i][j]: coefficient i (descending) of Min_j(p, x - 1).
  std::vector<std::vector<BigFloat>> entries;
  /// Largest coefficient error of (x - lambda_j - 1) Min_j(p, x - 1) against Min(p, x - 1).
  BigFloat reconstruction_residual;
};

/// Requires p real-rooted with r = deg Min(p, x) >= 3 and precision_digits >= 30.
RootMatrix build_root_matrix(const IntPoly& p, int precision_digits = 75);

enum class LPSense { minimize, maximize };

struct LPResult {
  bool feasible = false;
  /// Optimum of the objective row (zero for pure feasibility problems).
  BigFloat value;
  std::vector<BigFloat> gamma;
  /// max_k |(B gamma)_k - c_k| over the fixed rows.
  BigFloat residual;
};

/// Optimises row fixed.size() of B gamma subject to gamma >= 0 and
/// (B gamma)_k = fixed[k] for k < fixed.size(). Requires 1 <= fixed.size() < r.
LPResult lp_bound(const RootMatrix& b, const std::vector<Integer>& fixed, LPSense sense);

/// Feasibility of gamma >= 0 with (B gamma)_k = fixed[k] for k < fixed.size() <= r.
LPResult lp_feasible(const RootMatrix& b, const std::vector<Integer>& fixed);

/// (1, b_1 - r + 1, b_2 + n - 1 + (r - 1 - 2 b_1)(r - 2) / 2) for
/// Min(p, x) = x^r + b_1 x^(r-1) + ...: the leading coefficients of f(x - 1).
std::vector<Integer> leading_coefficient_vector(const IntPoly& p);

struct InterlaceOptions {
  int precision_digits = 75;
  /// Worker threads for the per-level branch map; 0 means hardware threads.
  unsigned threads = 0;
};

/// Seidel interlacing polynomials of a trace polynomial p of odd degree n >= 3.
EnumReport interlacing_even(const IntPoly& p, const InterlaceOptions& options = {});

/// delta-partial Seidel interlacing polynomials of a trace polynomial p of
/// even degree n >= 6, max(4, r - 1) <= delta <= n - 1.
EnumReport interlacing_partial(const IntPoly& p, int delta, const InterlaceOptions& options = {});

/// Whether p' = sum m_q q for nonnegative integers m_q summing to deg p.
bool derivative_decomposition_check(const IntPoly& p, const std::vector<IntPoly>& candidates);

}  // namespace seidelpoly
