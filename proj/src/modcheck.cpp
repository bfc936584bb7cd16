#include "seidelpoly/modcheck.hpp"

#include <numeric>

#include "seidelpoly/real_roots.hpp"

namespace seidelpoly {

unsigned long euler_totient(unsigned long n) {
  require(n >= 1, "euler_totient: argument must be positive");
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

void fill_partitions(int d, int part, int remaining, std::vector<int>& m, std::vector<PartitionMultiplicity>& out) {
  if (part > d) {
    if (remaining == 0) out.push_back({d, m});
    return;
  }
  for (int k = remaining / part; k >= 0; --k) {
    m[static_cast<std::size_t>(part - 1)] = k;
    fill_partitions(d, part + 1, remaining - k * part, m, out);
  }
  m[static_cast<std::size_t>(part - 1)] = 0;
}

Rational rational_pow(const Rational& base, int e) {
  Rational r = 1;  // 0^0 = 1
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

Rational pow2(int e) {
  Integer v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return Rational(v);
}

}  // namespace

std::vector<PartitionMultiplicity> partitions_by_multiplicity(int d) {
  require(d >= 1, "partitions_by_multiplicity: d must be positive");
  std::vector<PartitionMultiplicity> out;
  std::vector<int> m(static_cast<std::size_t>(d), 0);
  fill_partitions(d, 1, d, m, out);
  return out;
}

long two_adic_valuation(const Rational& x) {
  require(x != 0, "two_adic_valuation of zero");
  return static_cast<long>(mpz_scan1(x.get_num_mpz_t(), 0)) - static_cast<long>(mpz_scan1(x.get_den_mpz_t(), 0));
}

Rational congruence_sum(const IntPoly& p_bar, int i) {
  const int n = p_bar.degree();
  require(n >= 5 && n % 2 == 1, "congruence_sum: degree must be odd and at least 5");
  require(i >= 5 && i <= n && i % 2 == 1, "congruence_sum: index must be odd in [5, n]");
  auto b = [&p_bar](int k) { return Rational(p_bar[static_cast<std::size_t>(k)]); };

  Rational total = 0;
  for (int d = 1; d <= i - 1; ++d) {
    if ((i - 1) % d) continue;
    Rational divisor_weight =
        pow2(i - 1) * frac(static_cast<long>(d) * static_cast<long>(euler_totient(static_cast<unsigned long>((i - 1) / d))), i - 1);
    for (const auto& part : partitions_by_multiplicity(d)) {
      // The single-part partition of i - 1 is excluded (m_{i-1} = 0).
      if (d == i - 1 && part.m.back() != 0) continue;
      auto mult = [&part](int j) { return part.m[static_cast<std::size_t>(j - 1)]; };
      int parts = std::accumulate(part.m.begin(), part.m.end(), 0);
      Rational multinomial(factorial(static_cast<unsigned long>(parts - 1)));
      for (int e : part.m) multinomial /= Rational(factorial(static_cast<unsigned long>(e)));

      Rational product = 1;
      for (int j = 1; j <= d / 2; ++j)
        if (mult(2 * j)) product *= rational_pow(b(2 * j + 1) / (pow2(2 * j) * n), mult(2 * j));
      for (int j = 1; j <= (d + 1) / 2; ++j)
        if (mult(2 * j - 1)) product *= rational_pow((b(2 * j + 1) + b(2 * j) + b(2 * j - 1) * b(3)) / pow2(2 * j - 1), mult(2 * j - 1));
      total += divisor_weight * multinomial * product;
    }
  }
  return total;
}

bool mod_check(const IntPoly& p_bar, int i) {
  const int n = p_bar.degree();
  require(n >= 5 && n % 2 == 1, "mod_check: degree must be odd and at least 5");
  require(i >= 4 && i <= n, "mod_check: index out of range [4, n]");
  const Integer& bi = p_bar[static_cast<std::size_t>(i)];
  if (i % 2 == 0) return bi == 0 || mpz_scan1(bi.get_mpz_t(), 0) >= static_cast<mp_bitcnt_t>(i);
  Rational s = congruence_sum(p_bar, i);
  if (mpz_even_p(s.get_den_mpz_t())) return false;
  Rational diff = Rational(bi) - s;
  return diff == 0 || two_adic_valuation(diff) >= i;
}

bool is_trace_polynomial(const IntPoly& p) {
  const int n = p.degree();
  if (n < 1 || !p.is_monic()) return false;
  if (p[1] != 0) return false;
  if (n >= 2 && p[2] != -Integer(n) * (n - 1) / 2) return false;
  return is_real_rooted(p);
}

bool is_partial_feasible(const IntPoly& p, int delta) {
  if (!is_trace_polynomial(p)) return false;
  const int n = p.degree();
  IntPoly shifted = shift(p, -1);
  if (n % 2 == 0) return is_type2(shifted);
  if (!is_weakly_type2(shifted)) return false;
  if (n < 5) return true;
  require(delta >= 4 && delta <= n, "is_partial_feasible: delta out of range [4, n]");
  for (int i = 4; i <= delta; ++i)
    if (!mod_check(shifted, i)) return false;
  return true;
}

bool is_seidel_feasible(const IntPoly& p) { return is_partial_feasible(p, p.degree()); }

}  // namespace seidelpoly
