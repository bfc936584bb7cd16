#include "seidelpoly/enumerate.hpp"

#include <chrono>
#include <functional>
#include <set>

#include "seidelpoly/modcheck.hpp"
#include "seidelpoly/real_roots.hpp"

namespace seidelpoly {

unsigned resolve_threads(unsigned requested) {
  if (requested) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

Integer ceil_multiple(const Integer& x, const Integer& m) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return q * m;
}

std::optional<std::pair<Integer, Integer>> shift_window(const RatPoly& p) {
  require(p.degree() >= 2, "shift_window: degree must be at least 2");
  if (!is_real_rooted(p)) return std::nullopt;
  const int i = p.degree() + 1;
  const int k = (i - 1) / 2;
  std::vector<Rational> h = approx_sorted_roots(disc_in_C(p), Rational(1, 4));
  ensure(static_cast<int>(h.size()) == i - 1, "shift_window: discriminant is not real-rooted");
  std::vector<Integer> points = end_points(antiderivative(p), h[static_cast<std::size_t>(k - 1)], h[static_cast<std::size_t>(k)]);
  if (points.empty()) return std::nullopt;
  ensure(points.front() <= points.back(), "shift_window: inverted window");
  return std::make_pair(points.front(), points.back());
}

IntPoly linear_power(long lambda, int power) {
  require(power >= 0, "linear_power: negative exponent");
  IntPoly factor{1, -lambda};
  IntPoly r{1};
  for (int k = 0; k < power; ++k) r = r * factor;
  return r;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Start offset and period for the shifts at one level, or nullopt to prune.
using StepRule = std::function<std::optional<std::pair<Integer, Integer>>(const RatPoly& P, int level, const Integer& lo)>;

// Runs levels first..last of the derivative tower from `seed`, extending
// each node p by every admissible P + C, P = antiderivative(p).
std::vector<RatPoly> run_tower(const RatPoly& seed, int first, int last, const StepRule& rule, EnumStats& stats,
                               unsigned threads) {
  std::vector<RatPoly> frontier{seed};
  for (int level = first; level <= last; ++level) {
    stats.nodes_per_level.push_back(frontier.size());
    std::atomic<std::uint64_t> pruned{0};
    frontier = parallel_flat_map(
        frontier,
        [&](const RatPoly& p) {
          std::vector<RatPoly> out;
          auto window = shift_window(p);
          if (!window) {
            ++pruned;
            return out;
          }
          RatPoly P = antiderivative(p);
          auto step = rule(P, level, window->first);
          if (!step) {
            ++pruned;
            return out;
          }
          for (Integer c = step->first; c <= window->second; c += step->second)
            out.push_back(P + RatPoly::constant(Rational(c)));
          return out;
        },
        threads);
    stats.pruned_branches += pruned.load();
  }
  stats.nodes_per_level.push_back(frontier.size());
  return frontier;
}

void finish(EnumReport& report, std::vector<IntPoly> results, Clock::time_point start) {
  std::sort(results.begin(), results.end());
  ensure(std::adjacent_find(results.begin(), results.end()) == results.end(), "enumeration produced a duplicate");
  report.results = std::move(results);
  report.elapsed_ms = elapsed_since(start);
}

RatPoly nth_derivative(RatPoly p, int times) {
  for (int k = 0; k < times; ++k) p = derivative(p);
  return p;
}

Integer pow2(int e) {
  Integer v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return v;
}

// Shared opening of the two feasibility enumerators: the seed p_2 built from
// the three forced leading coefficients of the cofactor f(x - 1).
RatPoly cofactor_seed(int n, const IntPoly& q, int t) {
  const int s = q.degree();
  Integer d1 = s >= 1 ? q[1] : Integer(0);
  Integer d2 = s >= 2 ? q[2] : Integer(0);
  std::vector<Integer> f_hat(static_cast<std::size_t>(t) + 1, Integer(0));
  f_hat[0] = 1;
  f_hat[1] = -d1;
  f_hat[2] = d1 * d1 - d2 - Integer(n) * (n - 1) / 2;
  return nth_derivative(to_rat(shift(IntPoly(f_hat), -1)), t - 2);
}

std::string str(long v) { return std::to_string(v); }

}  // namespace

EnumReport all_real_rooted(const IntPoly& p_hat, int t, const EnumOptions& options) {
  auto start = Clock::now();
  const int n = p_hat.degree();
  require(n >= 2, "all_real_rooted: degree must be at least 2");
  require(p_hat.leading() > 0, "all_real_rooted: leading coefficient must be positive");
  require(t >= 3 && t <= n + 1, "all_real_rooted: t must lie in [3, n + 1]");
  EnumReport report;
  report.input = {{"p_hat", to_string(p_hat)}, {"t", str(t)}};

  RatPoly seed = nth_derivative(to_rat(p_hat), n - t + 1);
  std::vector<IntPoly> results;
  if (is_real_rooted(seed)) {
    StepRule rule = [n](const RatPoly&, int level, const Integer& lo) -> std::optional<std::pair<Integer, Integer>> {
      Integer period = factorial(static_cast<unsigned long>(n - level));
      return std::make_pair(ceil_multiple(lo, period), period);
    };
    for (auto& p : run_tower(seed, t, n, rule, report.stats, options.threads)) results.push_back(to_int(p));
  }
  finish(report, std::move(results), start);
  return report;
}

EnumReport feasible_even(int n, const IntPoly& q, const EnumOptions& options) {
  auto start = Clock::now();
  require(n >= 2 && n % 2 == 0, "feasible_even: n must be even and at least 2");
  require(q.is_monic(), "feasible_even: q must be monic");
  const int s = q.degree();
  require(s >= 0 && s <= n - 2, "feasible_even: deg q must lie in [0, n - 2]");
  EnumReport report;
  report.input = {{"n", str(n)}, {"q", to_string(q)}};
  const int t = n - s;

  std::vector<IntPoly> results;
  if (is_real_rooted(q) && is_type2(shift(q, -1))) {
    RatPoly seed = cofactor_seed(n, q, t);
    if (is_real_rooted(seed)) {
      StepRule rule = [t](const RatPoly&, int level, const Integer& lo) -> std::optional<std::pair<Integer, Integer>> {
        Integer period = pow2(level) * factorial(static_cast<unsigned long>(t - level));
        return std::make_pair(ceil_multiple(lo, period), period);
      };
      for (auto& f_bar : run_tower(seed, 3, t, rule, report.stats, options.threads))
        results.push_back(shift(to_int(f_bar), 1) * q);
    }
  }
  finish(report, std::move(results), start);
  return report;
}

EnumReport feasible_partial(int n, const IntPoly& q, int delta, const EnumOptions& options) {
  auto start = Clock::now();
  require(n >= 5 && n % 2 == 1, "feasible_partial: n must be odd and at least 5");
  require(q.is_monic(), "feasible_partial: q must be monic");
  const int s = q.degree();
  require(s >= 0 && s <= n - 2, "feasible_partial: deg q must lie in [0, n - 2]");
  const int t = n - s;
  require(delta >= std::max(4, t) && delta <= n, "feasible_partial: delta must lie in [max(4, n - deg q), n]");
  EnumReport report;
  report.input = {{"n", str(n)}, {"q", to_string(q)}, {"delta", str(delta)}};

  std::vector<IntPoly> results;
  const IntPoly q_bar = shift(q, -1);
  if (is_real_rooted(q) && is_weakly_type2(q_bar)) {
    RatPoly seed = cofactor_seed(n, q, t);
    if (is_real_rooted(seed)) {
      StepRule rule = [t, &q_bar](const RatPoly& P, int level,
                                  const Integer& lo) -> std::optional<std::pair<Integer, Integer>> {
        Integer fact = factorial(static_cast<unsigned long>(t - level));
        if (level == 3) {
          Integer period = 4 * fact;
          return std::make_pair(ceil_multiple(lo, period), period);
        }
        Integer period = pow2(level) * fact;
        Integer half = period / 2;
        Integer c1 = ceil_multiple(lo, half);
        // The level-`level` coefficient of f(x - 1) decides b_level of the
        // product; lower coefficients are still unknown and taken as zero.
        for (const Integer& c : {c1, Integer(c1 + half)}) {
          RatPoly partial = P + RatPoly::constant(Rational(c));
          for (int m = 0; m < t - level; ++m) partial = antiderivative(partial);
          if (mod_check(q_bar * to_int(partial), level)) return std::make_pair(c, period);
        }
        return std::nullopt;
      };
      const int lowest_unchecked = std::max(4, t + 1);
      for (auto& f_bar : run_tower(seed, 3, t, rule, report.stats, options.threads)) {
        IntPoly r_bar = q_bar * to_int(f_bar);
        bool keep = is_weakly_type2(r_bar);
        for (int i = lowest_unchecked; keep && i <= delta; ++i) keep = mod_check(r_bar, i);
        if (keep)
          results.push_back(shift(r_bar, 1));
        else
          ++report.stats.filtered;
      }
    }
  }
  finish(report, std::move(results), start);
  return report;
}

EnumReport g_set(int n, int delta, int d, long lambda, const EnumOptions& options) {
  require(d >= 2, "g_set: d must be at least 2");
  require(n % 2 == 1 && n >= 2 * d + 1, "g_set: n must be odd and at least 2d + 1");
  require(delta >= 4 && delta <= n, "g_set: delta must lie in [4, n]");
  require(lambda < 0 && lambda % 2 != 0, "g_set: lambda must be an odd negative integer");
  EnumReport report = feasible_partial(n, linear_power(lambda, n - d), delta, options);
  report.input = {{"n", str(n)}, {"delta", str(delta)}, {"d", str(d)}, {"lambda", str(lambda)}};
  return report;
}

DeltaSweep delta_sweep(int n, int d, long lambda, int delta_lo, const EnumOptions& options) {
  DeltaSweep sweep;
  std::vector<std::vector<IntPoly>> sets;
  const int first = std::max({4, d, delta_lo});
  require(first <= n, "delta_sweep: empty delta range");
  for (int delta = first; delta <= n; ++delta) {
    EnumReport r = g_set(n, delta, d, lambda, options);
    sweep.counts.emplace_back(delta, r.results.size());
    sets.push_back(std::move(r.results));
  }
  sweep.stabilization = n;
  for (std::size_t k = sets.size(); k-- > 0;) {
    if (sets[k] != sets.back()) break;
    sweep.stabilization = first + static_cast<int>(k);
  }
  for (std::size_t k = 0; k + 1 < sets.size(); ++k)
    if (!std::includes(sets[k].begin(), sets[k].end(), sets[k + 1].begin(), sets[k + 1].end())) sweep.nested = false;
  return sweep;
}

}  // namespace seidelpoly
