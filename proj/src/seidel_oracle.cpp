#include "seidelpoly/seidel_oracle.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "seidelpoly/enumerate.hpp"
#include "seidelpoly/modcheck.hpp"
#include "seidelpoly/real_roots.hpp"

namespace seidelpoly {

std::size_t SeidelMatrix::index(int i, int j) const {
  if (i > j) std::swap(i, j);
  // Row i of the strict upper triangle starts after i rows of decreasing length.
  return static_cast<std::size_t>(i) * (2 * n_ - i - 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

SeidelMatrix SeidelMatrix::from_mask(int n, std::uint64_t mask) {
  require(n >= 1 && n * (n - 1) / 2 <= 64, "SeidelMatrix::from_mask: order out of range");
  SeidelMatrix s(n);
  for (std::size_t b = 0; b < s.negative_.size(); ++b) s.negative_[b] = (mask >> b) & 1U;
  return s;
}

SeidelMatrix SeidelMatrix::random(int n, std::mt19937_64& rng) {
  SeidelMatrix s(n);
  for (std::size_t b = 0; b < s.negative_.size(); ++b) s.negative_[b] = rng() & 1U;
  return s;
}

int SeidelMatrix::entry(int i, int j) const {
  if (i == j) return 0;
  return negative_[index(i, j)] ? -1 : 1;
}

void SeidelMatrix::set(int i, int j, int value) {
  require(i != j && (value == 1 || value == -1), "SeidelMatrix::set: off-diagonal +-1 only");
  negative_[index(i, j)] = value < 0;
}

SeidelMatrix SeidelMatrix::principal_submatrix(int k) const {
  require(n_ >= 2 && k >= 0 && k < n_, "principal_submatrix: index out of range");
  SeidelMatrix s(n_ - 1);
  for (int i = 0, si = 0; i < n_; ++i) {
    if (i == k) continue;
    for (int j = i + 1, sj = si + 1; j < n_; ++j) {
      if (j == k) continue;
      s.set(si, sj, entry(i, j));
      ++sj;
    }
    ++si;
  }
  return s;
}

SeidelMatrix SeidelMatrix::switched(const std::vector<bool>& flip) const {
  SeidelMatrix s = *this;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (flip[static_cast<std::size_t>(i)] != flip[static_cast<std::size_t>(j)]) s.set(i, j, -entry(i, j));
  return s;
}

std::vector<std::vector<int>> SeidelMatrix::graph() const {
  std::vector<std::vector<int>> a(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_), 0));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && entry(i, j) < 0) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
  return a;
}

SeidelMatrix SeidelMatrix::euler_representative() const {
  require(n_ % 2 == 1, "euler_representative: order must be odd");
  // Switching the odd-degree vertices flips every other parity an even
  // number of times and each switched vertex's parity an odd number of times.
  auto a = graph();
  std::vector<bool> flip(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    int deg = 0;
    for (int v : a[static_cast<std::size_t>(i)]) deg += v;
    flip[static_cast<std::size_t>(i)] = deg % 2 == 1;
  }
  return switched(flip);
}

namespace {

bool checked_mul_add(long a, long b, long c, long& out) {
  long prod;
  if (__builtin_mul_overflow(a, b, &prod)) return false;
  return !__builtin_add_overflow(prod, c, &out);
}

// Faddeev-LeVerrier in machine integers; false on overflow.
bool faddeev_leverrier(const std::vector<std::vector<long>>& a, std::vector<Integer>& coeffs) {
  const std::size_t n = a.size();
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0)), am(n, std::vector<long>(n, 0));
  std::vector<long> c(n + 1, 0);
  c[0] = 1;  // descending: c[k] is the coefficient of x^(n-k)
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{k-1} I
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        long v = (i == j) ? c[k - 1] : 0;
        for (std::size_t l = 0; l < n; ++l)
          if (!checked_mul_add(a[i][l], m[l][j], v, v)) return false;
        am[i][j] = v;
      }
    std::swap(m, am);
    long trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (!checked_mul_add(a[i][l], m[l][i], trace, trace)) return false;
    if (trace % static_cast<long>(k) != 0) return false;
    c[k] = -trace / static_cast<long>(k);
  }
  coeffs.assign(c.begin(), c.end());
  return true;
}

// Bareiss fraction-free determinant.
Integer bareiss_det(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[r], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// det(xI - A) at x = 0..n, then Lagrange interpolation over Q.
IntPoly char_poly_by_interpolation(const std::vector<std::vector<long>>& a) {
  const std::size_t n = a.size();
  std::vector<Rational> values;
  for (std::size_t x = 0; x <= n; ++x) {
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = Integer((i == j ? static_cast<long>(x) : 0L) - a[i][j]);
    values.emplace_back(bareiss_det(std::move(m)));
  }
  RatPoly result;
  for (std::size_t k = 0; k <= n; ++k) {
    RatPoly basis = RatPoly::constant(values[k]);
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == k) continue;
      basis = basis * RatPoly(std::vector<Rational>{Rational(1), Rational(-static_cast<long>(j))});
      basis = basis * frac(1, static_cast<long>(k) - static_cast<long>(j));
    }
    result += basis;
  }
  return to_int(result);
}

}  // namespace

IntPoly char_poly(const std::vector<std::vector<long>>& m) {
  for (const auto& row : m) require(row.size() == m.size(), "char_poly: matrix must be square");
  std::vector<Integer> coeffs;
  if (faddeev_leverrier(m, coeffs)) return IntPoly(std::move(coeffs));
  return char_poly_by_interpolation(m);
}

IntPoly char_poly(const SeidelMatrix& s) {
  const int n = s.order();
  std::vector<std::vector<long>> m(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s.entry(i, j);
  return char_poly(m);
}

std::vector<IntPoly> realisable_set(int n, const RealisableOptions& options) {
  require(n >= 1, "realisable_set: order must be positive");
  require(n <= 6 || options.allow_large, "realisable_set: order above 6 needs the override");
  require(n * (n - 1) / 2 <= 40, "realisable_set: order too large for exhaustive search");
  // With switching reduction the first-row bits (the first n - 1) stay zero.
  const int fixed = options.switching_reduction ? n - 1 : 0;
  const int free_bits = n * (n - 1) / 2 - fixed;
  const std::uint64_t total = std::uint64_t{1} << free_bits;

  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(options.threads), total));
  std::vector<std::set<IntPoly>> partial(workers);
  auto run = [&](unsigned w) {
    for (std::uint64_t k = w; k < total; k += workers)
      partial[w].insert(char_poly(SeidelMatrix::from_mask(n, k << fixed)));
  };
  if (workers <= 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  std::set<IntPoly> merged;
  for (auto& s : partial) merged.insert(s.begin(), s.end());
  return {merged.begin(), merged.end()};
}

std::optional<Rational> newton_root_bound(const Integer& a0, const Integer& a1, const Integer& a2) {
  require(a0 > 0, "newton_root_bound: a0 must be positive");
  Integer num = a1 * a1 - 2 * a0 * a2;
  if (num < 0) return std::nullopt;
  Rational radicand(num, a0 * a0);
  radicand.canonicalize();
  // Least k with (k/2)^2 >= radicand.
  Rational four_r = 4 * radicand;
  Integer k;
  mpz_cdiv_q(k.get_mpz_t(), four_r.get_num_mpz_t(), four_r.get_den_mpz_t());
  mpz_sqrt(k.get_mpz_t(), k.get_mpz_t());
  while (Rational(k * k) < four_r) ++k;
  while (k > 0 && Rational((k - 1) * (k - 1)) >= four_r) --k;
  Rational bound(k, 2);
  bound.canonicalize();
  return bound;
}

std::vector<IntPoly> brute_force_T(int n, const std::vector<Integer>& prefix, bool allow_large) {
  const int t = static_cast<int>(prefix.size());
  require(n >= 2, "brute_force_T: degree must be at least 2");
  require(n <= 5 || allow_large, "brute_force_T: degree above 5 needs the override");
  require(t >= 3 && t <= n + 1, "brute_force_T: prefix length must lie in [3, n + 1]");
  require(prefix[0] > 0, "brute_force_T: leading coefficient must be positive");
  auto bound = newton_root_bound(prefix[0], prefix[1], prefix[2]);
  std::vector<IntPoly> out;
  if (!bound) return out;

  std::vector<Integer> limit(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(i));
    Rational b = Rational(c) * prefix[0];
    for (int k = 0; k < i; ++k) b *= *bound;
    mpz_fdiv_q(limit[static_cast<std::size_t>(i)].get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
  }

  // Once a_0..a_i are fixed, the (n - i)-th derivative is fixed and must be
  // real-rooted (Rolle), which prunes the box scan.
  std::vector<Integer> coeffs(prefix.begin(), prefix.end());
  coeffs.resize(static_cast<std::size_t>(n) + 1);
  auto derivative_ok = [&](int i) {
    std::vector<Integer> d(static_cast<std::size_t>(i) + 1);
    for (int j = 0; j <= i; ++j) {
      Integer scale;
      mpz_fac_ui(scale.get_mpz_t(), static_cast<unsigned long>(n - j));
      Integer den;
      mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(i - j));
      d[static_cast<std::size_t>(j)] = coeffs[static_cast<std::size_t>(j)] * (scale / den);
    }
    return is_real_rooted(IntPoly(d));
  };
  std::vector<Integer> binom(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i)
    mpz_bin_uiui(binom[static_cast<std::size_t>(i)].get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(i));
  // Newton's inequality a_{i-1}^2 C(n,i-2) C(n,i) >= a_{i-2} a_i C(n,i-1)^2,
  // a cheap necessary condition checked before the Sturm test.
  auto newton_ok = [&](int i) {
    if (i < 2) return true;
    const auto u = static_cast<std::size_t>(i);
    return coeffs[u - 1] * coeffs[u - 1] * binom[u - 2] * binom[u] >= coeffs[u - 2] * coeffs[u] * binom[u - 1] * binom[u - 1];
  };
  if (!derivative_ok(t - 1)) return out;
  auto scan = [&](auto& self, int i) -> void {
    if (i > n) {
      out.emplace_back(coeffs);
      return;
    }
    const Integer& lim = limit[static_cast<std::size_t>(i)];
    for (Integer a = -lim; a <= lim; ++a) {
      coeffs[static_cast<std::size_t>(i)] = a;
      if (newton_ok(i) && derivative_ok(i)) self(self, i + 1);
    }
  };
  scan(scan, t);
  std::sort(out.begin(), out.end());
  return out;
}

bool verify_trace_poly(const IntPoly& p) { return is_trace_polynomial(p); }

}  // namespace seidelpoly
