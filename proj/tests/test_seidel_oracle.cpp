#include <random>

#include "doctest.h"
#include "seidelpoly/real_roots.hpp"
#include "seidelpoly/seidel_oracle.hpp"

using namespace seidelpoly;

namespace {

// Determinant by rational Gaussian elimination.
Rational gauss_det(const std::vector<std::vector<long>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

}  // namespace

TEST_CASE("Seidel matrix structure") {
  SeidelMatrix s = SeidelMatrix::from_mask(4, 0b100101);
  for (int i = 0; i < 4; ++i) {
    CHECK(s.entry(i, i) == 0);
    for (int j = 0; j < 4; ++j)
      if (i != j) CHECK(s.entry(i, j) == s.entry(j, i));
  }
  CHECK(s.entry(0, 1) == -1);
  CHECK(s.entry(0, 2) == 1);
  CHECK(s.entry(0, 3) == -1);
  CHECK(s.entry(1, 2) == 1);
  CHECK(s.entry(2, 3) == -1);
  SeidelMatrix sub = s.principal_submatrix(0);
  CHECK(sub.order() == 3);
  CHECK(sub.entry(0, 1) == s.entry(1, 2));
  CHECK(sub.entry(1, 2) == s.entry(2, 3));
}

TEST_CASE("characteristic polynomial") {
  // J - I of order 5: eigenvalues 4 and -1 (four times).
  IntPoly expected = IntPoly{1, -4} * IntPoly{1, 1} * IntPoly{1, 1} * IntPoly{1, 1} * IntPoly{1, 1};
  CHECK(char_poly(SeidelMatrix::from_mask(5, 0)) == expected);
  CHECK(char_poly(SeidelMatrix(1)) == IntPoly{1, 0});

  // Large entries push Faddeev-LeVerrier past machine integers; compare the
  // trace and determinant coefficients with an independent elimination.
  std::mt19937_64 rng(41);
  for (long scale : {5L, 1000000L, 1000000000L}) {
    std::uniform_int_distribution<long> entry(-scale, scale);
    for (int trial = 0; trial < 20; ++trial) {
      std::size_t n = 2 + trial % 6;
      std::vector<std::vector<long>> m(n, std::vector<long>(n));
      for (auto& row : m)
        for (auto& v : row) v = entry(rng);
      IntPoly cp = char_poly(m);
      REQUIRE(cp.degree() == static_cast<int>(n));
      CHECK(cp.leading() == 1);
      Integer trace = 0;
      for (std::size_t i = 0; i < n; ++i) trace += m[i][i];
      CHECK(cp[1] == -trace);
      Rational det = gauss_det(m);
      CHECK(Rational(cp[n]) == (n % 2 ? -det : det));
    }
  }
}

TEST_CASE("small realisable sets") {
  CHECK(realisable_set(1) == std::vector<IntPoly>{IntPoly{1, 0}});
  CHECK(realisable_set(2) == std::vector<IntPoly>{IntPoly{1, 0, -1}});
  CHECK(realisable_set(3) == std::vector<IntPoly>{IntPoly{1, 0, -3, -2}, IntPoly{1, 0, -3, 2}});
  for (int n = 3; n <= 5; ++n) {
    RealisableOptions full;
    full.switching_reduction = false;
    auto reduced = realisable_set(n);
    CHECK(realisable_set(n, full) == reduced);
    for (const auto& p : reduced) CHECK(verify_trace_poly(p));
  }
  RealisableOptions threaded;
  threaded.threads = 4;
  CHECK(realisable_set(5, threaded) == realisable_set(5));
  CHECK_THROWS_AS(realisable_set(7), PreconditionError);
  CHECK_THROWS_AS(realisable_set(0), PreconditionError);
}

TEST_CASE("switching preserves the spectrum") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 3 + 2 * (trial % 3);
    SeidelMatrix s = SeidelMatrix::random(n, rng);
    SeidelMatrix e = s.euler_representative();
    CHECK(char_poly(e) == char_poly(s));
    for (const auto& row : e.graph()) {
      int deg = 0;
      for (int v : row) deg += v;
      CHECK(deg % 2 == 0);
    }
  }
  CHECK_THROWS_AS(SeidelMatrix(4).euler_representative(), PreconditionError);
}

TEST_CASE("Newton root bound") {
  CHECK(newton_root_bound(1, 0, -3) == frac(5, 2));
  CHECK(newton_root_bound(1, 0, -1) == frac(3, 2));
  CHECK(newton_root_bound(1, 0, -2) == Rational(2));
  CHECK(newton_root_bound(1, 2, 1) == frac(3, 2));
  CHECK_FALSE(newton_root_bound(1, 0, 1).has_value());
  CHECK_THROWS_AS(newton_root_bound(0, 1, 1), PreconditionError);
}

TEST_CASE("brute-force T") {
  auto cubic = brute_force_T(3, {1, 0, -3});
  REQUIRE(cubic.size() == 5);
  for (int c = -2; c <= 2; ++c) CHECK(std::find(cubic.begin(), cubic.end(), IntPoly{1, 0, -3, c}) != cubic.end());
  CHECK(brute_force_T(2, {1, 0, -1}) == std::vector<IntPoly>{IntPoly{1, 0, -1}});
  CHECK(brute_force_T(3, {1, 0, 1}).empty());
  // A full-length prefix fixes the polynomial.
  CHECK(brute_force_T(2, {1, 0, 0}) == std::vector<IntPoly>{IntPoly{1, 0, 0}});
  auto quintic = brute_force_T(5, {1, 1, -2});
  CHECK_FALSE(quintic.empty());
  for (const auto& p : quintic) CHECK(is_real_rooted(p));
  CHECK_THROWS_AS(brute_force_T(6, {1, 0, -15}), PreconditionError);
  CHECK_THROWS_AS(brute_force_T(4, {1, 0}), PreconditionError);
}
