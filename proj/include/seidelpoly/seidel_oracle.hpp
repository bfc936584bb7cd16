#pragma once

// Brute-force ground truth: Seidel matrices, their characteristic
// polynomials, the realisable sets R_n for small n, and the coefficient-box
// enumeration of real-rooted polynomials with a fixed prefix.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "seidelpoly/poly.hpp"

namespace seidelpoly {

/// Symmetric +-1 matrix with zero diagonal, stored as upper-triangle sign bits
/// in row-major order (bit set means -1).
class SeidelMatrix {
 public:
  SeidelMatrix() = default;
  explicit SeidelMatrix(int n) : n_(n), negative_(static_cast<std::size_t>(n) * (n - 1) / 2, false) {}
  /// Upper-triangle bits taken from the low n(n-1)/2 bits of mask.
  static SeidelMatrix from_mask(int n, std::uint64_t mask);
  static SeidelMatrix random(int n, std::mt19937_64& rng);

  int order() const { return n_; }
  int entry(int i, int j) const;
  void set(int i, int j, int value);
  /// Delete row and column k.
  SeidelMatrix principal_submatrix(int k) const;
  /// Conjugation by the diagonal sign matrix negating the rows in `flip`.
  SeidelMatrix switched(const std::vector<bool>& flip) const;
  /// Switching-equivalent matrix whose graph A (S = J - I - 2A) is Euler.
  /// Requires odd order.
  SeidelMatrix euler_representative() const;
  /// Adjacency matrix A with S = J - I - 2A.
  std::vector<std::vector<int>> graph() const;

 private:
  std::size_t index(int i, int j) const;
  int n_ = 0;
  std::vector<bool> negative_;
};

/// det(xI - M) for a small integer matrix.
IntPoly char_poly(const std::vector<std::vector<long>>& m);
IntPoly char_poly(const SeidelMatrix& s);

struct RealisableOptions {
  /// Fix the first row to +1 (switching does not change the spectrum).
  bool switching_reduction = true;
  /// Permit orders above 6.
  bool allow_large = false;
  unsigned threads = 0;
};

/// All characteristic polynomials of order-n Seidel matrices, sorted.
std::vector<IntPoly> realisable_set(int n, const RealisableOptions& options = {});

/// Least multiple of 1/2 bounding sqrt((a1^2 - 2 a0 a2) / a0^2), or nullopt
/// when the radicand is negative.
std::optional<Rational> newton_root_bound(const Integer& a0, const Integer& a1, const Integer& a2);

/// Every real-rooted integer polynomial of degree n whose first t
/// coefficients equal `prefix`, by scanning the coefficient box
/// |a_i| <= binom(n, i) B^i a_0 (derivatives are checked as they are fixed).
std::vector<IntPoly> brute_force_T(int n, const std::vector<Integer>& prefix, bool allow_large = false);

/// Monic, a_1 = 0, a_2 = -n(n-1)/2 for n >= 2, real-rooted.
bool verify_trace_poly(const IntPoly& p);

}  // namespace seidelpoly
