#include <random>

#include "doctest.h"
#include "seidelpoly/real_roots.hpp"

using namespace seidelpoly;

namespace {

RatPoly rp(std::initializer_list<long> c) { return to_rat(IntPoly(c)); }

IntPoly from_roots(const std::vector<long>& roots) {
  IntPoly p{1};
  for (long r : roots) p = p * IntPoly{1, -r};
  return p;
}

}  // namespace

TEST_CASE("real-rootedness") {
  CHECK_FALSE(is_real_rooted(rp({1, 0, 1})));
  CHECK(is_real_rooted(rp({1, 0, -15, -8, 19, 8, -5})));
  CHECK_FALSE(is_real_rooted(rp({1, 0, -3, 3})));
  CHECK(is_real_rooted(rp({4})));
  CHECK_THROWS_AS(is_real_rooted(RatPoly()), PreconditionError);
  CHECK(is_real_rooted(to_rat(from_roots({2, 2, 2, -1, -1, 5}))));
}

TEST_CASE("Sturm chain structure") {
  SturmChain sc(to_rat(from_roots({1, 1, -2})));
  const auto& chain = sc.chain();
  CHECK(chain.front().degree() == 2);
  for (std::size_t k = 1; k < chain.size(); ++k) CHECK(chain[k].degree() < chain[k - 1].degree());
  CHECK(sc.distinct_real_roots() == 2);
}

TEST_CASE("root counting") {
  CHECK(count_roots_in(rp({1, 0, -2}), 0, 2) == 1);
  CHECK(count_roots_in(rp({1, 0, -2}), 2, 3) == 0);
  CHECK(count_roots_in(rp({1, 0, -3, 0}), -2, 2) == 3);
  CHECK_THROWS_AS(count_roots_in(rp({1, 0, -1}), 1, 3), PreconditionError);
}

TEST_CASE("isolation") {
  auto boxes = isolate_roots(to_rat(from_roots({1, 1, -2})));
  REQUIRE(boxes.size() == 2);
  CHECK(boxes[0] == RootBox{-2, -2, 1});
  CHECK(boxes[1] == RootBox{1, 1, 2});

  IsolationOptions opts;
  opts.max_width = frac(1, 100);
  auto sqrt2 = isolate_roots(rp({1, 0, -2}), opts);
  REQUIRE(sqrt2.size() == 2);
  for (const auto& b : sqrt2) {
    CHECK(b.hi - b.lo <= frac(1, 100));
    // Contains +-sqrt(2): x^2 - 2 changes sign across the box.
    CHECK(sgn(b.lo * b.lo - 2) * sgn(b.hi * b.hi - 2) < 0);
  }

  auto cubic = isolate_roots(rp({1, -1, -13, 5}));
  REQUIRE(cubic.size() == 3);
  CHECK(sgn(cubic[0].midpoint()) < 0);
  CHECK(sgn(cubic[1].midpoint()) > 0);
  CHECK(sgn(cubic[2].midpoint()) > 0);
  CHECK_THROWS_AS(isolate_roots(rp({1, 0, 1})), PreconditionError);

  // Touching and clustered roots stay separated and sorted.
  auto close = isolate_roots(to_rat(IntPoly{1, -1} * IntPoly{1000, -1001} * IntPoly{1, 0, -2}));
  REQUIRE(close.size() == 4);
  for (std::size_t k = 0; k + 1 < close.size(); ++k) CHECK(close[k].hi < close[k + 1].lo);
  CHECK(close[1].is_exact());
  CHECK(close[2].is_exact());
  CHECK(close[2].lo == frac(1001, 1000));
  CHECK_FALSE(close[3].is_exact());
}

TEST_CASE("approximate roots") {
  auto r = approx_sorted_roots(rp({1, 0, -2}), frac(1, 4));
  REQUIRE(r.size() == 2);
  CHECK(abs(r[0] + Rational(141421, 100000)) < frac(1, 4));
  CHECK(abs(r[1] - Rational(141421, 100000)) < frac(1, 4));
  CHECK(approx_sorted_roots(rp({1, -6, 9}), frac(1, 4)) == std::vector<Rational>{3, 3});
  // Disc_x(x^3 - 3x + C) = -27(C^2 - 4): roots -2, 2.
  auto h = approx_sorted_roots(disc_in_C(rp({3, 0, -3})), frac(1, 4));
  REQUIRE(h.size() == 2);
  CHECK(abs(h[0] + 2) < frac(1, 4));
  CHECK(abs(h[1] - 2) < frac(1, 4));
}

TEST_CASE("rounding") {
  CHECK(round_half_away(frac(5, 2)) == 3);
  CHECK(round_half_away(frac(-5, 2)) == -3);
  CHECK(round_half_away(frac(-249, 100)) == -2);
  CHECK(round_half_away(frac(149, 100)) == 1);
  CHECK(round_half_away(0) == 0);
}

TEST_CASE("end points") {
  RatPoly P = rp({1, 0, -3, 0});
  CHECK(end_points(P, frac(-21, 10), frac(19, 10)) == std::vector<Integer>{-2, 2});
  for (Rational w : {frac(-249, 100), frac(-151, 100), frac(-2, 1), frac(-7, 4)}) {
    auto pts = end_points(P, w, frac(2, 1));
    REQUIRE(!pts.empty());
    CHECK(pts.front() == -2);
  }
  // A window of real-rooted shifts does not exist for x^3 + x.
  CHECK(end_points(rp({1, 0, 1, 0}), frac(2, 5), frac(2, 5)).empty());
  CHECK_THROWS_AS(end_points(rp({1, 0, 0}), 0, 0), PreconditionError);
}

TEST_CASE("rounding robustness sweep") {
  // For every endpoint w and perturbation below 1/2, ceil/floor differ from
  // Round(w) by the amounts the endpoint guard relies on.
  for (int num = -300; num <= 300; num += 7) {
    Rational omega = frac(num, 37);
    for (int e = -49; e <= 49; ++e) {
      Rational w = omega + frac(e, 100);
      Integer r = round_half_away(w);
      Integer c, f;
      mpz_cdiv_q(c.get_mpz_t(), omega.get_num_mpz_t(), omega.get_den_mpz_t());
      mpz_fdiv_q(f.get_mpz_t(), omega.get_num_mpz_t(), omega.get_den_mpz_t());
      Integer dc = c - r, df = f - r;
      CHECK((dc == 0 || dc == 1));
      CHECK((df == 0 || df == -1));
    }
  }
}

TEST_CASE("interlacing") {
  CHECK(interlaces(rp({1, 0}), rp({1, 0, -1})));
  CHECK_FALSE(interlaces(rp({1, -5}), rp({1, 0, -1})));
  IntPoly p = IntPoly{1, 1} * IntPoly{1, 1} * IntPoly{1, -1} * IntPoly{1, -1, -13, 5};
  IntPoly q2 = IntPoly{1, 1} * IntPoly{1, 1} * IntPoly{1, -1} * IntPoly{1, -1, -8};
  CHECK(interlaces(to_rat(q2), to_rat(p)));
  CHECK_THROWS_AS(interlaces(rp({1, 0, 0}), rp({1, 0, -1})), PreconditionError);
  // Multiple roots must be matched with multiplicity.
  CHECK(interlaces(to_rat(from_roots({0, 0})), to_rat(from_roots({0, 0, 0}))));
  CHECK(interlaces(to_rat(from_roots({1, 1})), to_rat(from_roots({0, 1, 2}))));
  CHECK_FALSE(interlaces(to_rat(from_roots({0, 0})), to_rat(from_roots({0, 1, 2}))));
  CHECK(interlaces(to_rat(from_roots({1, 2})), to_rat(from_roots({0, 1, 2}))));
}

TEST_CASE("real-rootedness agrees with isolation") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> deg(1, 6), coef(-6, 6);
  int accepted = 0;
  for (int trial = 0; trial < 500; ++trial) {
    int d = deg(rng);
    std::vector<Integer> v(static_cast<std::size_t>(d) + 1);
    for (auto& c : v) c = coef(rng);
    v[0] = 1;
    RatPoly p = to_rat(IntPoly(v));
    if (trial % 2) p = p * to_rat(IntPoly{1, -coef(rng)});
    if (!is_real_rooted(p)) continue;
    ++accepted;
    int total = 0;
    for (const auto& b : isolate_roots(p)) total += b.multiplicity;
    CHECK(total == p.degree());
  }
  CHECK(accepted > 50);
}
