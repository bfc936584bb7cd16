#include <algorithm>
#include <random>

#include "doctest.h"
#include "seidelpoly/modcheck.hpp"
#include "seidelpoly/seidel_oracle.hpp"

using namespace seidelpoly;

namespace {

// Char(J - 2A) for the graph A of s.
IntPoly shifted_char_poly(const SeidelMatrix& s) {
  auto a = s.graph();
  const std::size_t n = a.size();
  std::vector<std::vector<long>> m(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = 1 - 2 * a[i][j];
  return char_poly(m);
}

std::size_t partition_count(int d) {
  // Classical recurrence p(k, m): partitions of k into parts at most m.
  std::vector<std::vector<std::size_t>> p(static_cast<std::size_t>(d) + 1, std::vector<std::size_t>(static_cast<std::size_t>(d) + 1, 0));
  for (int m = 0; m <= d; ++m) p[0][static_cast<std::size_t>(m)] = 1;
  for (int k = 1; k <= d; ++k)
    for (int m = 1; m <= d; ++m)
      p[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)] =
          p[static_cast<std::size_t>(k)][static_cast<std::size_t>(m - 1)] + (k >= m ? p[static_cast<std::size_t>(k - m)][static_cast<std::size_t>(m)] : 0);
  return p[static_cast<std::size_t>(d)][static_cast<std::size_t>(d)];
}

}  // namespace

TEST_CASE("Euler totient") {
  CHECK(euler_totient(1) == 1);
  CHECK(euler_totient(12) == 4);
  CHECK(euler_totient(10) == 4);
  CHECK(euler_totient(97) == 96);
  CHECK_THROWS_AS(euler_totient(0), PreconditionError);
}

TEST_CASE("partitions by multiplicity") {
  CHECK(partitions_by_multiplicity(1) == std::vector<PartitionMultiplicity>{{1, {1}}});
  CHECK(partitions_by_multiplicity(3) ==
        std::vector<PartitionMultiplicity>{{3, {3, 0, 0}}, {3, {1, 1, 0}}, {3, {0, 0, 1}}});
  for (int d = 1; d <= 12; ++d) {
    auto parts = partitions_by_multiplicity(d);
    CHECK(parts.size() == partition_count(d));
    for (const auto& p : parts) {
      int total = 0;
      for (int j = 1; j <= d; ++j) total += j * p.m[static_cast<std::size_t>(j - 1)];
      CHECK(total == d);
    }
    CHECK(std::is_sorted(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.m > b.m; }));
  }
  CHECK(partitions_by_multiplicity(6).size() == 11);
  CHECK_THROWS_AS(partitions_by_multiplicity(0), PreconditionError);
}

TEST_CASE("2-adic valuation") {
  CHECK(two_adic_valuation(Rational(8)) == 3);
  CHECK(two_adic_valuation(frac(3, 4)) == -2);
  CHECK(two_adic_valuation(frac(-12, 5)) == 2);
  CHECK_THROWS_AS(two_adic_valuation(Rational(0)), PreconditionError);
}

TEST_CASE("mod check examples") {
  IntPoly p{1, -5, 0, 0, 0, 0};
  CHECK(mod_check(p, 4));
  CHECK(mod_check(p, 5));
  CHECK(mod_check(p, 5) == mod_check(p, 5));
  CHECK_FALSE(mod_check(IntPoly{1, -5, 0, 0, 8, 0}, 4));
  CHECK(mod_check(IntPoly{1, -5, 0, 0, 16, 0}, 4));
  CHECK_THROWS_AS(mod_check(IntPoly{1, 0, 0, 0, 0, 0, 0}, 4), PreconditionError);
  CHECK_THROWS_AS(mod_check(p, 3), PreconditionError);
  CHECK_THROWS_AS(mod_check(p, 6), PreconditionError);

  // Consistency with realisability at order 5: a shifted realisable
  // polynomial must pass.
  std::vector<IntPoly> shifted;
  for (const auto& r : realisable_set(5)) shifted.push_back(shift(r, -1));
  IntPoly probe{1, -5, 16, 0, 0, 0};
  if (std::find(shifted.begin(), shifted.end(), probe) != shifted.end()) CHECK(mod_check(probe, 5));
  for (const auto& s : shifted) {
    CHECK(mod_check(s, 4));
    CHECK(mod_check(s, 5));
  }
}

TEST_CASE("Euler graphs satisfy the congruences") {
  auto check_all = [](const SeidelMatrix& s) {
    SeidelMatrix e = s.euler_representative();
    IntPoly p_bar = shifted_char_poly(e);
    CHECK(p_bar == shift(char_poly(s), -1));
    CHECK(is_weakly_type2(p_bar));
    for (int i = 4; i <= s.order(); ++i) {
      CHECK(mod_check(p_bar, i));
      if (i % 2) CHECK(mpz_odd_p(congruence_sum(p_bar, i).get_den_mpz_t()));
    }
  };
  for (std::uint64_t mask = 0; mask < 1024; ++mask) check_all(SeidelMatrix::from_mask(5, mask));
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) check_all(SeidelMatrix::random(7, rng));
  for (int trial = 0; trial < 40; ++trial) check_all(SeidelMatrix::random(9, rng));
}

TEST_CASE("feasibility predicates") {
  for (const auto& r : realisable_set(5)) CHECK(is_seidel_feasible(r));
  for (const auto& r : realisable_set(4)) CHECK(is_seidel_feasible(r));
  CHECK(is_trace_polynomial(IntPoly{1, 0, -1}));
  CHECK_FALSE(is_trace_polynomial(IntPoly{1, 0, -2}));
  CHECK_FALSE(is_trace_polynomial(IntPoly{2, 0, -1}));
  IntPoly example = IntPoly{1, 1} * IntPoly{1, 1} * IntPoly{1, -1} * IntPoly{1, -1, -13, 5};
  CHECK(is_seidel_feasible(example));
  // The shift of x^5 - 10x^3 + 1 has b_5 = 10, not divisible by 16.
  CHECK_FALSE(is_partial_feasible(IntPoly{1, 0, -10, 0, 0, 1}, 5));
}
