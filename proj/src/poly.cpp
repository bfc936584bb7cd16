#include "seidelpoly/poly.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace seidelpoly {

namespace {

std::vector<Integer> int_coeffs(const RatPoly& p) {
  // Scale by the lcm of denominators, then divide out the content.
  Integer den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(c.get_num() * (den / c.get_den()));
  return v;
}

Integer content(const std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, in Z[x].
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> r = a.coeffs();
  const auto& bc = b.coeffs();
  const Integer& lb = bc.front();
  int da = a.degree(), db = b.degree();
  for (int k = 0; k <= da - db; ++k) {
    Integer lead = r[static_cast<std::size_t>(k)];
    for (auto& c : r) c *= lb;
    for (std::size_t j = 0; j < bc.size(); ++j) r[static_cast<std::size_t>(k) + j] -= lead * bc[j];
  }
  return IntPoly(std::vector<Integer>(r.begin() + (da - db + 1), r.end()));
}

Integer ipow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// Subresultant PRS resultant (Cohen, Alg. 3.3.7) for nonzero integer polys.
Integer int_resultant(IntPoly a, IntPoly b) {
  if (a.degree() == 0 && b.degree() == 0) return 1;
  Integer ca = content(a.coeffs()), cb = content(b.coeffs());
  Integer t = ipow(ca, static_cast<unsigned long>(b.degree())) * ipow(cb, static_cast<unsigned long>(a.degree()));
  a = exact_div(a, IntPoly::constant(ca));
  b = exact_div(b, IntPoly::constant(cb));
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -1;
  }
  if (b.degree() == 0) return s * t * ipow(b.leading(), static_cast<unsigned long>(a.degree()));
  Integer g = 1, h = 1;
  while (true) {
    int delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) return 0;
    a = std::move(b);
    Integer divisor = g * ipow(h, static_cast<unsigned long>(delta));
    std::vector<Integer> rv = r.coeffs();
    for (auto& c : rv) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    b = IntPoly(std::move(rv));
    g = a.leading();
    if (delta > 0) {
      Integer num = ipow(g, static_cast<unsigned long>(delta));
      Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.degree() == 0) {
      int da = a.degree();
      Integer num = ipow(b.leading(), static_cast<unsigned long>(da));
      Integer hh;
      if (da >= 1) {
        Integer den = ipow(h, static_cast<unsigned long>(da - 1));
        mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      } else {
        hh = num * h;
      }
      return s * t * hh;
    }
  }
}

Rational parse_rational(std::string_view tok) {
  std::string s;
  for (char ch : tok)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  require(!s.empty(), "empty coefficient in polynomial string");
  auto valid_int = [](std::string_view v) {
    std::size_t i = 0;
    if (i < v.size() && (v[i] == '-' || v[i] == '+')) ++i;
    if (i == v.size()) return false;
    for (; i < v.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(v[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  require(valid_int(num) && valid_int(den), "malformed coefficient '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Integer n_val(num), d_val(den);
  require(d_val != 0, "zero denominator in coefficient '" + s + "'");
  Rational q(n_val, d_val);
  q.canonicalize();
  return q;
}

}  // namespace

RatPoly to_rat(const IntPoly& p) {
  std::vector<Rational> v(p.coeffs().begin(), p.coeffs().end());
  return RatPoly(std::move(v));
}

bool is_integral(const RatPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Rational& c) { return c.get_den() == 1; });
}

IntPoly to_int(const RatPoly& p) {
  require(is_integral(p), "polynomial has non-integer coefficients");
  std::vector<Integer> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(c.get_num());
  return IntPoly(std::move(v));
}

IntPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return {};
  std::vector<Integer> v = int_coeffs(p);
  Integer g = content(v);
  if (v.front() < 0) g = -g;
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

Rational evaluate(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (const auto& c : p.coeffs()) acc = acc * x + c;
  return acc;
}

Integer evaluate(const IntPoly& p, const Integer& x) {
  Integer acc = 0;
  for (const auto& c : p.coeffs()) acc = acc * x + c;
  return acc;
}

int sign_at(const RatPoly& p, const Rational& x) { return sgn(evaluate(p, x)); }

RatPoly derivative(const RatPoly& p) {
  int n = p.degree();
  if (n <= 0) return {};
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v.push_back(p[static_cast<std::size_t>(i)] * (n - i));
  return RatPoly(std::move(v));
}

IntPoly derivative(const IntPoly& p) {
  int n = p.degree();
  if (n <= 0) return {};
  std::vector<Integer> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v.push_back(p[static_cast<std::size_t>(i)] * (n - i));
  return IntPoly(std::move(v));
}

RatPoly antiderivative(const RatPoly& p) {
  if (p.is_zero()) return {};
  int n = p.degree();
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(n) + 2);
  for (int i = 0; i <= n; ++i) v.push_back(p[static_cast<std::size_t>(i)] / (n - i + 1));
  v.emplace_back(0);
  return RatPoly(std::move(v));
}

template <class Coeff>
static Poly<Coeff> taylor_shift(const Poly<Coeff>& p, long s) {
  if (s == 0 || p.degree() <= 0) return p;
  // In-place Horner scheme: after pass k the tail holds coefficients of p(x+s).
  std::vector<Coeff> a = p.coeffs();
  const std::size_t n = a.size() - 1;
  const Coeff sc(s);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 1; j + k <= n; ++j) a[j] += a[j - 1] * sc;
  return Poly<Coeff>(std::move(a));
}

RatPoly shift(const RatPoly& p, long s) { return taylor_shift(p, s); }
IntPoly shift(const IntPoly& p, long s) { return taylor_shift(p, s); }

DivMod divmod(const RatPoly& a, const RatPoly& b) {
  require(!b.is_zero(), "division by the zero polynomial");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<Rational> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t qn = static_cast<std::size_t>(a.degree() - b.degree()) + 1;
  std::vector<Rational> q(qn);
  Rational inv_lead = 1 / bc.front();
  for (std::size_t k = 0; k < qn; ++k) {
    q[k] = r[k] * inv_lead;
    if (q[k] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) r[k + j] -= q[k] * bc[j];
  }
  return {RatPoly(std::move(q)), RatPoly(std::vector<Rational>(r.begin() + static_cast<std::ptrdiff_t>(qn), r.end()))};
}

RatPoly exact_div(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = divmod(a, b);
  ensure(r.is_zero(), "exact_div: nonzero remainder");
  return q;
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  require(!b.is_zero(), "division by the zero polynomial");
  if (a.is_zero()) return {};
  ensure(a.degree() >= b.degree(), "exact_div: degree of divisor exceeds dividend");
  std::vector<Integer> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t qn = static_cast<std::size_t>(a.degree() - b.degree()) + 1;
  std::vector<Integer> q(qn);
  for (std::size_t k = 0; k < qn; ++k) {
    ensure(mpz_divisible_p(r[k].get_mpz_t(), bc.front().get_mpz_t()) != 0, "exact_div: non-integral quotient");
    mpz_divexact(q[k].get_mpz_t(), r[k].get_mpz_t(), bc.front().get_mpz_t());
    if (q[k] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) r[k + j] -= q[k] * bc[j];
  }
  for (std::size_t k = qn; k < r.size(); ++k) ensure(r[k] == 0, "exact_div: nonzero remainder");
  return IntPoly(std::move(q));
}

RatPoly make_monic(const RatPoly& p) {
  if (p.is_zero() || p.leading() == 1) return p;
  Rational inv = 1 / p.leading();
  return p * inv;
}

RatPoly gcd(const RatPoly& p, const RatPoly& q) {
  require(!(p.is_zero() && q.is_zero()), "gcd of two zero polynomials");
  RatPoly a = p, b = q;
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).remainder;
    a = std::move(b);
    // Keep the Euclidean remainders monic; the gcd is defined up to units.
    b = make_monic(r);
  }
  return make_monic(a);
}

RatPoly squarefree_part(const RatPoly& p) {
  require(!p.is_zero(), "squarefree_part of the zero polynomial");
  if (p.degree() == 0) return RatPoly::constant(1);
  return make_monic(exact_div(p, gcd(p, derivative(p))));
}

std::vector<RatPoly> squarefree_decomposition(const RatPoly& p) {
  require(!p.is_zero(), "squarefree decomposition of the zero polynomial");
  std::vector<RatPoly> out;
  if (p.degree() == 0) return out;
  RatPoly f = make_monic(p);
  RatPoly fp = derivative(f);
  RatPoly a = gcd(f, fp);
  RatPoly b = exact_div(f, a);
  RatPoly c = exact_div(fp, a);
  RatPoly d = c - derivative(b);
  while (b.degree() > 0) {
    RatPoly ai = gcd(b, d);
    out.push_back(ai);
    b = exact_div(b, ai);
    c = exact_div(d, ai);
    d = c - derivative(b);
  }
  return out;
}

Rational resultant(const RatPoly& p, const RatPoly& q) {
  require(!p.is_zero() && !q.is_zero(), "resultant with the zero polynomial");
  // Res(s p, u q) = s^deg q * u^deg p * Res(p, q).
  IntPoly pi = primitive_part(p), qi = primitive_part(q);
  Rational sp = p.leading() / Rational(pi.leading());
  Rational sq = q.leading() / Rational(qi.leading());
  Rational scale = 1;
  for (int k = 0; k < q.degree(); ++k) scale *= sp;
  for (int k = 0; k < p.degree(); ++k) scale *= sq;
  return scale * Rational(int_resultant(pi, qi));
}

Rational discriminant(const RatPoly& p) {
  require(p.degree() >= 1, "discriminant of a constant polynomial");
  int d = p.degree();
  Rational r = resultant(p, derivative(p)) / p.leading();
  if ((static_cast<long>(d) * (d - 1) / 2) % 2 != 0) r = -r;
  return r;
}

RatPoly disc_in_C(const RatPoly& p) {
  require(!p.is_zero() && p.degree() >= 1, "disc_in_C requires a polynomial of degree >= 1");
  const int n = p.degree();
  const RatPoly P = antiderivative(p);
  // Disc_x(P + C) has degree n in C: sample it at C = 0..n and interpolate
  // (Newton divided differences, then expansion to the monomial basis).
  std::vector<Rational> xs, dd;
  for (int c = 0; c <= n; ++c) {
    xs.emplace_back(c);
    dd.push_back(discriminant(P + RatPoly::constant(Rational(c))));
  }
  for (int level = 1; level <= n; ++level)
    for (int k = n; k >= level; --k) {
      auto ku = static_cast<std::size_t>(k);
      dd[ku] = (dd[ku] - dd[ku - 1]) / (xs[ku] - xs[ku - static_cast<std::size_t>(level)]);
    }
  RatPoly result = RatPoly::constant(dd[static_cast<std::size_t>(n)]);
  for (int k = n - 1; k >= 0; --k) {
    auto ku = static_cast<std::size_t>(k);
    result = result * RatPoly(std::vector<Rational>{Rational(1), -xs[ku]}) + RatPoly::constant(dd[ku]);
  }
  return result;
}

namespace {

bool type2_with_offset(const IntPoly& p, int offset) {
  require(p.is_monic(), "type-2 checks require a monic polynomial");
  const int n = p.degree();
  for (int i = 1; i <= n; ++i) {
    const Integer& b = p[static_cast<std::size_t>(i)];
    if (b == 0) continue;
    if (static_cast<int>(mpz_scan1(b.get_mpz_t(), 0)) < i - offset) return false;
  }
  return true;
}

}  // namespace

bool is_type2(const IntPoly& p) { return type2_with_offset(p, 0); }
bool is_weakly_type2(const IntPoly& p) { return type2_with_offset(p, 1); }

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

RatPoly parse_rat_poly(std::string_view text) {
  std::vector<Rational> v;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    v.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return RatPoly(std::move(v));
}

IntPoly parse_int_poly(std::string_view text) {
  RatPoly p = parse_rat_poly(text);
  require(is_integral(p), "expected integer coefficients in '" + std::string(text) + "'");
  return to_int(p);
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) s += ',';
    s += p[i].get_str();
  }
  return s;
}

std::string to_string(const RatPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) s += ',';
    s += p[i].get_str();
  }
  return s;
}

}  // namespace seidelpoly
