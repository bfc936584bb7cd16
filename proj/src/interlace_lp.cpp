#include "seidelpoly/interlace_lp.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>

#include "seidelpoly/modcheck.hpp"
#include "seidelpoly/real_roots.hpp"
#include "seidelpoly/simplex.hpp"

namespace seidelpoly {

namespace {

IntPoly min_part(const IntPoly& p) { return primitive_part(squarefree_part(to_rat(p))); }

Integer pow2(int e) {
  Integer v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return v;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Newton iteration from a Sturm box, validated by an exact sign change
// around the result; falls back to exact bisection.
BigFloat refine_root(const IntPoly& sqf, const RootBox& box, int digits, mpfr_prec_t bits) {
  if (box.is_exact()) return BigFloat(box.lo, bits);
  const IntPoly d = derivative(sqf);
  auto eval = [bits](const IntPoly& f, const BigFloat& x) {
    BigFloat acc(bits);
    for (const auto& c : f.coeffs()) {
      acc *= x;
      acc += BigFloat(c, bits);
    }
    return acc;
  };
  BigFloat x(box.midpoint(), bits);
  const BigFloat stop = BigFloat::pow10_neg(digits + 4, bits);
  for (int iter = 0; iter < 200; ++iter) {
    BigFloat slope = eval(d, x);
    if (slope.sign() == 0) break;
    BigFloat step = eval(sqf, x) / slope;
    x -= step;
    if (step.abs() < stop) break;
  }
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits + 2));
  const Rational eps = Rational(1) / Rational(scale);
  Rational center = x.to_rational();
  Rational lo = center - eps, hi = center + eps;
  bool inside = lo >= box.lo && hi <= box.hi;
  if (inside && sign_at(sqf, lo) * sign_at(sqf, hi) < 0) return x;
  RootBox narrow = refine_box(to_rat(sqf), box, eps);
  return BigFloat(narrow.midpoint(), bits);
}

SimplexTolerances tolerances(int digits, mpfr_prec_t bits) {
  return {BigFloat::pow10_neg(digits - 20, bits), BigFloat::pow10_neg(digits / 2, bits)};
}

LPResult solve(const RootMatrix& b, const std::vector<Integer>& fixed, std::optional<std::size_t> objective, LPSense sense) {
  const mpfr_prec_t bits = BigFloat::bits_for_digits(b.precision_digits);
  LinearProgram lp;
  for (std::size_t k = 0; k < fixed.size(); ++k) {
    lp.a.push_back(b.entries[k]);
    lp.b.emplace_back(fixed[k], bits);
  }
  if (objective) {
    lp.c = b.entries[*objective];
    if (sense == LPSense::maximize)
      for (auto& v : lp.c) v = -v;
  }
  SimplexResult s = solve_simplex(lp, tolerances(b.precision_digits, bits));
  ensure(s.status != SimplexStatus::unbounded, "lp: unbounded program over a bounded region");
  LPResult out;
  out.feasible = s.status == SimplexStatus::optimal;
  out.value = sense == LPSense::maximize ? -s.objective : s.objective;
  out.gamma = std::move(s.x);
  out.residual = std::move(s.residual);
  return out;
}

struct Setup {
  int n = 0;
  int r = 0;
  IntPoly quo;
  IntPoly quo_shifted;
  std::vector<Integer> vec0;
  RootMatrix b;
};

Setup prepare(const IntPoly& p, const InterlaceOptions& options) {
  Setup s;
  s.n = p.degree();
  IntPoly m = min_part(p);
  s.r = m.degree();
  require(s.r >= 3, "interlacing: deg Min(p, x) must be at least 3");
  s.quo = exact_div(p, m);
  s.quo_shifted = shift(s.quo, -1);
  s.vec0 = leading_coefficient_vector(p);
  s.b = build_root_matrix(p, options.precision_digits);
  return s;
}

// (start, step) for the children of vec at level i, or nullopt to prune.
using LevelRule =
    std::function<std::optional<std::pair<Integer, Integer>>(const std::vector<Integer>& vec, int i, const Integer& round_min)>;

std::vector<std::vector<Integer>> run_levels(const Setup& s, const LevelRule& rule, EnumStats& stats, unsigned threads) {
  std::vector<std::vector<Integer>> out{s.vec0};
  std::atomic<std::uint64_t> pruned{0};
  for (int i = 3; i <= s.r - 1; ++i) {
    stats.nodes_per_level.push_back(out.size());
    auto step = [&](const std::vector<Integer>& vec) {
      std::vector<std::vector<Integer>> children;
      LPResult lo = lp_bound(s.b, vec, LPSense::minimize);
      if (!lo.feasible) {
        ++pruned;
        return children;
      }
      LPResult hi = lp_bound(s.b, vec, LPSense::maximize);
      ensure(hi.feasible, "interlacing: max program infeasible while min is feasible");
      auto plan = rule(vec, i, lo.value.round_half_away());
      if (!plan) {
        ++pruned;
        return children;
      }
      const Integer stride = plan->second;
      Integer start = plan->first;
      Integer end = start + stride * floor_div(hi.value.round_half_away() - start, stride);
      if (i == s.r - 1) {
        auto feasible_with = [&](const Integer& last) {
          std::vector<Integer> v = vec;
          v.push_back(last);
          return lp_feasible(s.b, v).feasible;
        };
        if (start <= end && !feasible_with(start)) start += stride;
        if (start <= end && !feasible_with(end)) end -= stride;
      }
      for (Integer l = start; l <= end; l += stride) {
        children.push_back(vec);
        children.back().push_back(l);
      }
      if (children.empty()) ++pruned;
      return children;
    };
    out = parallel_flat_map(out, step, threads);
  }
  stats.nodes_per_level.push_back(out.size());
  if (s.r == 3) {
    // No level ran, so the fixed vector itself has not met the cone.
    std::erase_if(out, [&](const std::vector<Integer>& v) { return !lp_feasible(s.b, v).feasible; });
  }
  stats.pruned_branches = pruned.load();
  return out;
}

void finish(EnumReport& report, std::chrono::steady_clock::time_point t0) {
  std::sort(report.results.begin(), report.results.end());
  ensure(std::adjacent_find(report.results.begin(), report.results.end()) == report.results.end(),
         "interlacing: duplicate result");
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

RootMatrix build_root_matrix(const IntPoly& p, int precision_digits) {
  require(precision_digits >= 30, "build_root_matrix: precision_digits must be at least 30");
  require(is_real_rooted(p), "build_root_matrix: p must be real-rooted");
  const IntPoly m = min_part(p);
  const int r = m.degree();
  require(r >= 3, "build_root_matrix: deg Min(p, x) must be at least 3");
  const mpfr_prec_t bits = BigFloat::bits_for_digits(precision_digits);

  RootMatrix b;
  b.r = r;
  b.precision_digits = precision_digits;
  IsolationOptions iso;
  iso.max_width = frac(1, 1 << 20);
  for (const auto& box : isolate_roots(to_rat(m), iso)) b.roots.push_back(refine_root(m, box, precision_digits, bits));

  const IntPoly shifted = shift(m, -1);
  b.entries.assign(static_cast<std::size_t>(r), std::vector<BigFloat>(static_cast<std::size_t>(r), BigFloat(bits)));
  b.reconstruction_residual = BigFloat(bits);
  const BigFloat one(1L, bits);
  for (int j = 0; j < r; ++j) {
    // Synthetic division of Min(p, x - 1) at lambda_j + 1.
    BigFloat mu = b.roots[static_cast<std::size_t>(j)] + one;
    BigFloat h(1L, bits);
    b.entries[0][static_cast<std::size_t>(j)] = h;
    for (int k = 1; k < r; ++k) {
      h = BigFloat(shifted[static_cast<std::size_t>(k)], bits) + mu * h;
      b.entries[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = h;
    }
    // (x - mu) h against Min(p, x - 1), coefficient by coefficient.
    for (int k = 0; k <= r; ++k) {
      BigFloat coeff(bits);
      if (k < r) coeff += b.entries[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      if (k > 0) coeff -= mu * b.entries[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j)];
      BigFloat err = (coeff - BigFloat(shifted[static_cast<std::size_t>(k)], bits)).abs();
      if (err > b.reconstruction_residual) b.reconstruction_residual = err;
    }
  }
  ensure(b.reconstruction_residual < BigFloat::pow10_neg(precision_digits - 20, bits),
         "build_root_matrix: reconstruction residual above tolerance");
  return b;
}

LPResult lp_bound(const RootMatrix& b, const std::vector<Integer>& fixed, LPSense sense) {
  require(!fixed.empty() && static_cast<int>(fixed.size()) < b.r, "lp_bound: objective row out of range");
  return solve(b, fixed, fixed.size(), sense);
}

LPResult lp_feasible(const RootMatrix& b, const std::vector<Integer>& fixed) {
  require(static_cast<int>(fixed.size()) <= b.r, "lp_feasible: more fixed rows than the matrix has");
  return solve(b, fixed, std::nullopt, LPSense::minimize);
}

std::vector<Integer> leading_coefficient_vector(const IntPoly& p) {
  const int n = p.degree();
  const IntPoly m = min_part(p);
  const int r = m.degree();
  require(r >= 2, "leading_coefficient_vector: deg Min(p, x) must be at least 2");
  const Integer& b1 = m[1];
  const Integer& b2 = m[2];
  Integer twice = (Integer(r - 1) - 2 * b1) * (r - 2);
  return {Integer(1), b1 - r + 1, b2 + n - 1 + twice / 2};
}

EnumReport interlacing_even(const IntPoly& p, const InterlaceOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  const int n = p.degree();
  require(n >= 3 && n % 2 == 1, "interlacing_even: degree must be odd and at least 3");
  require(is_trace_polynomial(p), "interlacing_even: p must be a Seidel trace polynomial");
  EnumReport report;
  report.input = {{"poly", to_string(p)}, {"precision_digits", std::to_string(options.precision_digits)}};
  Setup s = prepare(p, options);
  // q(x - 1) = Quo(p, x - 1) f(x - 1) is type 2 only if both factors are.
  if (!is_type2(s.quo_shifted) || !mpz_divisible_2exp_p(s.vec0[1].get_mpz_t(), 1) ||
      !mpz_divisible_2exp_p(s.vec0[2].get_mpz_t(), 2)) {
    finish(report, t0);
    return report;
  }
  LevelRule rule = [](const std::vector<Integer>&, int i, const Integer& round_min) {
    Integer stride = pow2(i);
    return std::optional<std::pair<Integer, Integer>>({ceil_multiple(round_min, stride), stride});
  };
  for (const auto& v : run_levels(s, rule, report.stats, options.threads))
    report.results.push_back(s.quo * shift(IntPoly(v), 1));
  finish(report, t0);
  return report;
}

EnumReport interlacing_partial(const IntPoly& p, int delta, const InterlaceOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  const int n = p.degree();
  require(n >= 6 && n % 2 == 0, "interlacing_partial: degree must be even and at least 6");
  require(is_trace_polynomial(p), "interlacing_partial: p must be a Seidel trace polynomial");
  EnumReport report;
  report.input = {{"poly", to_string(p)}, {"delta", std::to_string(delta)},
                  {"precision_digits", std::to_string(options.precision_digits)}};
  Setup s = prepare(p, options);
  require(delta >= std::max(4, s.r - 1) && delta <= n - 1, "interlacing_partial: delta must lie in [max(4, r - 1), n - 1]");
  const int r = s.r;
  LevelRule rule = [&s, r](const std::vector<Integer>& vec, int i,
                           const Integer& round_min) -> std::optional<std::pair<Integer, Integer>> {
    if (i == 3) return std::make_pair(ceil_multiple(round_min, 4), Integer(4));
    const Integer half = pow2(i - 1);
    const Integer c1 = ceil_multiple(round_min, half);
    auto passes = [&](const Integer& c) {
      std::vector<Integer> coeffs(static_cast<std::size_t>(r), 0);
      for (int m = 0; m < i; ++m) coeffs[static_cast<std::size_t>(m)] = vec[static_cast<std::size_t>(m)];
      coeffs[static_cast<std::size_t>(i)] = c;
      return mod_check(s.quo_shifted * IntPoly(coeffs), i);
    };
    if (passes(c1)) return std::make_pair(c1, pow2(i));
    if (passes(c1 + half)) return std::make_pair(c1 + half, pow2(i));
    return std::nullopt;
  };
  for (const auto& v : run_levels(s, rule, report.stats, options.threads)) {
    IntPoly q_bar = s.quo_shifted * IntPoly(v);
    if (r <= n - 1) {
      bool keep = is_weakly_type2(q_bar);
      for (int i = std::max(4, r); keep && i <= delta; ++i) keep = mod_check(q_bar, i);
      if (!keep) {
        ++report.stats.filtered;
        continue;
      }
    }
    report.results.push_back(shift(q_bar, 1));
  }
  finish(report, t0);
  return report;
}

bool derivative_decomposition_check(const IntPoly& p, const std::vector<IntPoly>& candidates) {
  const int n = p.degree();
  require(n >= 1, "derivative_decomposition_check: p must be non-constant");
  for (const auto& q : candidates)
    require(q.degree() == n - 1 && q.is_monic(), "derivative_decomposition_check: candidates must be monic of degree n - 1");
  const IntPoly target = derivative(p);
  if (candidates.empty()) return target.is_zero();
  std::vector<IntPoly> distinct = candidates;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  // Distribute n copies over the candidates; the last takes the remainder.
  auto search = [&](auto& self, std::size_t k, int remaining, const IntPoly& sum) -> bool {
    if (k + 1 == distinct.size()) return sum + distinct[k] * Integer(remaining) == target;
    for (int m = 0; m <= remaining; ++m)
      if (self(self, k + 1, remaining - m, sum + distinct[k] * Integer(m))) return true;
    return false;
  };
  return search(search, 0, n, IntPoly());
}

}  // namespace seidelpoly
