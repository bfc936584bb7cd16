#pragma once

// Sturm-sequence machinery over Q: real-rootedness, root counting and
// isolation, guaranteed-error approximation, the integer window guard used
// by the tree enumerators, and an exact interlacing test.

#include <optional>
#include <vector>

#include "seidelpoly/poly.hpp"

namespace seidelpoly {

/// Sturm chain of Min(p, x). Each member is rescaled by a positive rational
/// to a primitive integer polynomial; positive scaling leaves every sign
/// variation count unchanged.
class SturmChain {
 public:
  explicit SturmChain(const RatPoly& p);

  const std::vector<RatPoly>& chain() const { return chain_; }
  const RatPoly& squarefree() const { return chain_.front(); }

  std::vector<int> signs_at_minus_infinity() const;
  std::vector<int> signs_at_plus_infinity() const;
  int variations_at_minus_infinity() const;
  int variations_at_plus_infinity() const;
  /// Sign variations at x, zeros dropped.
  int variations_at(const Rational& x) const;

  /// Number of distinct real roots.
  int distinct_real_roots() const { return variations_at_minus_infinity() - variations_at_plus_infinity(); }
  /// Distinct roots in the half-open interval (lo, hi].
  int count_half_open(const Rational& lo, const Rational& hi) const {
    return variations_at(lo) - variations_at(hi);
  }

 private:
  std::vector<RatPoly> chain_;
  std::vector<IntPoly> integer_chain_;
};

/// Sign of p at x using integer-only homogenized Horner evaluation.
int sign_at(const IntPoly& p, const Rational& x);

/// True iff every complex root of p is real (vacuously true for constants).
bool is_real_rooted(const RatPoly& p);
bool is_real_rooted(const IntPoly& p);

/// Distinct real roots of squarefree p in the open interval (lo, hi).
/// Endpoints must not be roots.
int count_roots_in(const RatPoly& p, const Rational& lo, const Rational& hi);

/// An isolating box [lo, hi] for one distinct real root. lo == hi marks an
/// exactly detected rational root; otherwise the root lies strictly inside.
struct RootBox {
  Rational lo;
  Rational hi;
  int multiplicity = 1;

  bool is_exact() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
  friend bool operator==(const RootBox&, const RootBox&) = default;
};

struct IsolationOptions {
  /// Refine every inexact box to width <= max_width.
  std::optional<Rational> max_width;
  /// Snap rational roots to exact boxes (refines to the 1/lc grid).
  bool detect_rational_roots = true;
};

/// Sorted, pairwise disjoint boxes, one per distinct root, with exact
/// multiplicities. Throws PreconditionError unless p is real-rooted.
std::vector<RootBox> isolate_roots(const RatPoly& p, const IsolationOptions& options = {});

/// Narrows a box of squarefree `sqf` holding a simple root to width <= width.
RootBox refine_box(const RatPoly& sqf, RootBox box, const Rational& width);

/// Sorted root multiset of p (multiplicities repeated), each entry within
/// `bound` of its true root.
std::vector<Rational> approx_sorted_roots(const RatPoly& p, const Rational& bound);

/// Nearest integer, halves rounded away from zero.
Integer round_half_away(const Rational& x);

/// The EndPoints guard: from approximations w1, w2 (error < 1/2) of the true
/// window endpoints, returns the ceiling / floor of those endpoints that
/// admit a real-rooted shift P + C. At most two sorted distinct integers.
std::vector<Integer> end_points(const RatPoly& P, const Rational& w1, const Rational& w2);

/// True iff the sorted roots mu of q and lambda of p satisfy
/// lambda_i <= mu_i <= lambda_{i+1}. Both monic, real-rooted,
/// deg q = deg p - 1 >= 1.
bool interlaces(const RatPoly& q, const RatPoly& p);

}  // namespace seidelpoly
