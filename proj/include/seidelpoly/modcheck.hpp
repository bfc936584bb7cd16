#pragma once

// Even-index divisibility and the odd-index 2-adic congruence satisfied by
// shifted characteristic polynomials of Euler-graph Seidel matrices, plus
// the feasibility predicates built from them.

#include <vector>

#include "seidelpoly/poly.hpp"

namespace seidelpoly {

unsigned long euler_totient(unsigned long n);

/// A partition of d recorded by part multiplicities: m[j-1] parts of size j.
struct PartitionMultiplicity {
  int d = 0;
  std::vector<int> m;
  friend bool operator==(const PartitionMultiplicity&, const PartitionMultiplicity&) = default;
};

/// All partitions of d, in descending lexicographic order of m.
std::vector<PartitionMultiplicity> partitions_by_multiplicity(int d);

/// 2-adic valuation of a nonzero rational (num minus den exponent).
long two_adic_valuation(const Rational& x);

/// Right-hand side of the odd-index congruence for b_i of p_bar.
/// Requires odd deg p_bar = n >= 5 and odd 5 <= i <= n.
Rational congruence_sum(const IntPoly& p_bar, int i);

/// Even i: 2^i | b_i. Odd i: val_2(b_i - S) >= i, with S the congruence sum;
/// false when S has an even denominator.
bool mod_check(const IntPoly& p_bar, int i);

/// Monic, real-rooted, a_1 = 0 and a_2 = -n(n-1)/2 when n >= 2.
bool is_trace_polynomial(const IntPoly& p);

/// delta-partial feasibility for odd n >= 5 (delta = n gives full
/// feasibility); for other n the shift divisibility test of that parity.
bool is_partial_feasible(const IntPoly& p, int delta);
/// Full feasibility at the degree of p.
bool is_seidel_feasible(const IntPoly& p);

}  // namespace seidelpoly
