#include <algorithm>
#include <random>

#include "doctest.h"
#include "seidelpoly/interlace_lp.hpp"
#include "seidelpoly/modcheck.hpp"
#include "seidelpoly/real_roots.hpp"
#include "seidelpoly/seidel_oracle.hpp"
#include "seidelpoly/simplex.hpp"

using namespace seidelpoly;

namespace {

IntPoly example_p() { return IntPoly{1, 1} * IntPoly{1, 1} * IntPoly{1, -1} * IntPoly{1, -1, -13, 5}; }
IntPoly q1() { return IntPoly{1, 1} * IntPoly{1, 1} * IntPoly{1, -2, -7, 4}; }
IntPoly q2() { return IntPoly{1, 1} * IntPoly{1, 1} * IntPoly{1, -1} * IntPoly{1, -1, -8}; }
IntPoly q3() { return IntPoly{1, 3} * IntPoly{1, 1} * IntPoly{1, 0} * IntPoly{1, -1} * IntPoly{1, -3}; }

std::vector<IntPoly> sorted(std::vector<IntPoly> v) {
  std::sort(v.begin(), v.end());
  return v;
}

IntPoly trace_hat(int n) { return IntPoly::monomial(1, n) + IntPoly::monomial(-Integer(n) * (n - 1) / 2, n - 2); }

// Trace polynomials of degree deg p - 1 interlacing p, by the tower enumeration.
std::vector<IntPoly> interlacers(const IntPoly& p) {
  std::vector<IntPoly> out;
  for (const auto& q : all_real_rooted(trace_hat(p.degree() - 1), 3).results)
    if (interlaces(to_rat(q), to_rat(p))) out.push_back(q);
  return out;
}

BigFloat bf(long v) { return BigFloat(v, 256); }

SimplexTolerances tol() { return {BigFloat::pow10_neg(50, 256), BigFloat::pow10_neg(30, 256)}; }

}  // namespace

TEST_CASE("big floats") {
  const mpfr_prec_t bits = BigFloat::bits_for_digits(75);
  CHECK(bits >= 250);
  CHECK(BigFloat(frac(5, 2), bits).round_half_away() == 3);
  CHECK(BigFloat(frac(-5, 2), bits).round_half_away() == -3);
  CHECK(BigFloat(frac(-249, 100), bits).round_half_away() == -2);
  BigFloat third(frac(1, 3), bits);
  CHECK(abs(third.to_rational() - frac(1, 3)) < Rational(1, Integer(1) << 240));
  CHECK(BigFloat(frac(3, 8), bits).to_rational() == frac(3, 8));
  BigFloat x = bf(7) / bf(2) - bf(1);
  CHECK(x.to_rational() == frac(5, 2));
  CHECK((-x).sign() < 0);
  CHECK(BigFloat::pow10_neg(3, bits).to_rational() < frac(1, 999));
  CHECK_THROWS_AS(bf(1) / bf(0), PreconditionError);
}

TEST_CASE("simplex") {
  LinearProgram lp;
  lp.a = {{bf(1), bf(2)}};
  lp.b = {bf(4)};
  lp.c = {bf(1), bf(1)};
  auto r = solve_simplex(lp, tol());
  REQUIRE(r.status == SimplexStatus::optimal);
  CHECK(r.objective.to_rational() == 2);
  lp.c = {bf(-1), bf(0)};
  r = solve_simplex(lp, tol());
  REQUIRE(r.status == SimplexStatus::optimal);
  CHECK(r.objective.to_rational() == -4);

  lp.a = {{bf(1), bf(1)}};
  lp.b = {bf(-1)};
  CHECK(solve_simplex(lp, tol()).status == SimplexStatus::infeasible);

  // Degenerate: redundant equality rows and a zero right-hand side.
  lp.a = {{bf(1), bf(1), bf(1)}, {bf(2), bf(2), bf(2)}, {bf(1), bf(-1), bf(0)}};
  lp.b = {bf(1), bf(2), bf(0)};
  lp.c = {bf(0), bf(0), bf(-1)};
  r = solve_simplex(lp, tol());
  REQUIRE(r.status == SimplexStatus::optimal);
  CHECK(r.objective.to_rational() == -1);
  CHECK(r.residual < BigFloat::pow10_neg(60, 256));

  lp.a = {{bf(1), bf(-1)}};
  lp.b = {bf(0)};
  lp.c = {bf(-1), bf(0)};
  CHECK(solve_simplex(lp, tol()).status == SimplexStatus::unbounded);
}

TEST_CASE("root matrix") {
  // Roots -1, 0, 1; Min(p, x - 1) = x(x - 1)(x - 2).
  RootMatrix b = build_root_matrix(IntPoly{1, 0, -1, 0}, 40);
  REQUIRE(b.r == 3);
  const std::vector<std::vector<long>> expected{{1, 1, 1}, {-3, -2, -1}, {2, 0, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(b.entries[i][j].to_rational() == expected[i][j]);

  b = build_root_matrix(example_p());
  CHECK(b.r == 5);
  CHECK(b.precision_digits == 75);
  CHECK(b.reconstruction_residual < BigFloat::pow10_neg(70, 256));
  for (int j = 0; j < 5; ++j) CHECK(b.entries[0][j].to_rational() == 1);
  for (int j = 0; j + 1 < 5; ++j) CHECK(b.roots[j] < b.roots[j + 1]);

  CHECK_THROWS_AS(build_root_matrix(IntPoly{1, 0, -1}), PreconditionError);
  CHECK_THROWS_AS(build_root_matrix(example_p(), 20), PreconditionError);
  CHECK_THROWS_AS(build_root_matrix(IntPoly{1, 0, 1, 0}), PreconditionError);
}

TEST_CASE("leading coefficients of the cofactor") {
  for (const auto& p : {example_p(), q2(), q3()}) {
    IntPoly m = primitive_part(squarefree_part(to_rat(p)));
    IntPoly quo = exact_div(p, m);
    auto vec0 = leading_coefficient_vector(p);
    for (const auto& q : interlacers(p)) {
      IntPoly f_bar = shift(exact_div(q, quo), -1);
      for (std::size_t k = 0; k < 3; ++k) CHECK(f_bar[k] == vec0[k]);
      CHECK(interlaces(to_rat(exact_div(q, quo)), to_rat(m)));
    }
  }
}

TEST_CASE("LP windows and cone membership") {
  IntPoly p = example_p();
  RootMatrix b = build_root_matrix(p);
  IntPoly quo = exact_div(p, primitive_part(squarefree_part(to_rat(p))));
  auto vec0 = leading_coefficient_vector(p);
  LPResult lo = lp_bound(b, vec0, LPSense::minimize), hi = lp_bound(b, vec0, LPSense::maximize);
  REQUIRE(lo.feasible);
  REQUIRE(hi.feasible);
  CHECK(lo.value <= hi.value);
  for (const auto& q : {q1(), q2(), q3()}) {
    IntPoly f_bar = shift(exact_div(q, quo), -1);
    Rational c3(f_bar[3]);
    CHECK(lo.value.to_rational() - frac(1, 2) < c3);
    CHECK(c3 < hi.value.to_rational() + frac(1, 2));
  }
  auto j = interlacers(p);
  CHECK(j.size() == 67);
  for (const auto& q : j) {
    IntPoly f_bar = shift(exact_div(q, quo), -1);
    LPResult fit = lp_feasible(b, f_bar.coeffs());
    CHECK(fit.feasible);
    CHECK(fit.residual < BigFloat::pow10_neg(60, 256));
    for (const auto& g : fit.gamma) CHECK(g.sign() >= 0);
  }
  // A cofactor outside the cone.
  std::vector<Integer> far = vec0;
  far.push_back(100000);
  CHECK_FALSE(lp_feasible(b, far).feasible);
  CHECK_THROWS_AS(lp_bound(b, {1, 0, 0, 0, 0}, LPSense::minimize), PreconditionError);
}

TEST_CASE("partial interlacing on the worked example") {
  IntPoly p = example_p();
  auto four = interlacing_partial(p, 4);
  CHECK(four.results == sorted({q1(), q2(), q3()}));
  auto five = interlacing_partial(p, 5);
  CHECK(five.results == std::vector<IntPoly>{q2()});

  auto j = interlacers(p);
  for (int delta : {4, 5}) {
    std::vector<IntPoly> expected;
    for (const auto& q : j)
      if (is_partial_feasible(q, delta)) expected.push_back(q);
    CHECK(interlacing_partial(p, delta).results == expected);
  }
  CHECK_THROWS_AS(interlacing_partial(p, 3), PreconditionError);
  CHECK_THROWS_AS(interlacing_partial(p, 6), PreconditionError);
  CHECK_THROWS_AS(interlacing_partial(q3(), 4), PreconditionError);

  InterlaceOptions one, many;
  one.threads = 1;
  many.threads = 4;
  CHECK(interlacing_partial(p, 4, one).results == interlacing_partial(p, 4, many).results);
}

TEST_CASE("partial interlacing with squarefree input") {
  // r = n: the final weakly-type-2 filter is skipped.
  for (const auto& p : realisable_set(6)) {
    if (primitive_part(squarefree_part(to_rat(p))).degree() != 6) continue;
    auto got = interlacing_partial(p, 5);
    CHECK(got.stats.filtered == 0);
    std::vector<IntPoly> expected;
    for (const auto& q : interlacers(p))
      if (is_partial_feasible(q, 5)) expected.push_back(q);
    CHECK(got.results == expected);
  }
}

TEST_CASE("even interlacing") {
  for (const auto& p : {q2(), q3()}) {
    auto got = interlacing_even(p).results;
    std::vector<IntPoly> expected;
    for (const auto& q : interlacers(p))
      if (is_seidel_feasible(q)) expected.push_back(q);
    CHECK(got == expected);
  }
  // Principal submatrices of a matrix realising q2 give certified members.
  bool found = false;
  for (std::uint64_t mask = 0; mask < 1024 && !found; ++mask) {
    SeidelMatrix s = SeidelMatrix::from_mask(5, mask);
    if (char_poly(s) != q2()) continue;
    found = true;
    auto got = interlacing_even(q2()).results;
    for (int k = 0; k < 5; ++k) CHECK(std::binary_search(got.begin(), got.end(), char_poly(s.principal_submatrix(k))));
  }
  CHECK(found);
  CHECK_THROWS_AS(interlacing_even(IntPoly{1, 0, -3, 2}), PreconditionError);
  CHECK_THROWS_AS(interlacing_even(example_p()), PreconditionError);
}

TEST_CASE("derivative decomposition") {
  CHECK_FALSE(derivative_decomposition_check(example_p(), {q2()}));
  CHECK(derivative_decomposition_check(IntPoly{1, 0, -1}, {IntPoly{1, 0}}));
  CHECK_FALSE(derivative_decomposition_check(IntPoly{1, 0, -1}, {}));
  CHECK_THROWS_AS(derivative_decomposition_check(IntPoly{1, 0, -1}, {IntPoly{1, 0, 0}}), PreconditionError);

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    SeidelMatrix s = SeidelMatrix::random(5, rng);
    std::vector<IntPoly> minors;
    for (int k = 0; k < 5; ++k) minors.push_back(char_poly(s.principal_submatrix(k)));
    CHECK(derivative_decomposition_check(char_poly(s), minors));
  }
  for (int n = 2; n <= 6; ++n)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); mask += (n == 6 ? 7 : 1)) {
      SeidelMatrix s = SeidelMatrix::from_mask(n, mask);
      IntPoly sum;
      for (int k = 0; k < n; ++k) sum += char_poly(s.principal_submatrix(k));
      CHECK(sum == derivative(char_poly(s)));
    }
}
