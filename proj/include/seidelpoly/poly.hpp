#pragma once

// Dense univariate polynomials over Z and Q with GMP coefficients.
//
// Coefficients are stored in descending degree order: coeffs()[0] is the
// leading coefficient. The zero polynomial is the empty sequence and has
// degree -1 (callers that need a degree check the precondition first).

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "seidelpoly/errors.hpp"

namespace seidelpoly {

using Integer = mpz_class;
using Rational = mpq_class;

/// a / b in lowest terms (mpq_class's two-argument constructor does not reduce).
inline Rational frac(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

template <class Coeff>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static Poly constant(const Coeff& c) { return Poly(std::vector<Coeff>{c}); }
  /// c * x^deg
  static Poly monomial(const Coeff& c, int deg) {
    std::vector<Coeff> v(static_cast<std::size_t>(deg) + 1, Coeff(0));
    v[0] = c;
    return Poly(std::move(v));
  }

  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Coeff& leading() const {
    require(!is_zero(), "leading coefficient of the zero polynomial");
    return coeffs_.front();
  }
  /// Coefficient of x^(degree - i), i.e. the i-th entry from the top.
  const Coeff& operator[](std::size_t i) const { return coeffs_[i]; }
  /// Coefficient of x^k; zero outside the support.
  Coeff coeff_of_power(int k) const {
    if (k < 0 || k > degree()) return Coeff(0);
    return coeffs_[static_cast<std::size_t>(degree() - k)];
  }
  bool is_monic() const { return !is_zero() && coeffs_.front() == 1; }
  bool is_constant() const { return degree() <= 0; }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size())
      coeffs_.insert(coeffs_.begin(), o.coeffs_.size() - coeffs_.size(), Coeff(0));
    std::size_t off = coeffs_.size() - o.coeffs_.size();
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[off + i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) { return *this += -o; }
  Poly& operator*=(const Coeff& s) {
    if (s == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Coeff& s) { return a *= s; }
  friend Poly operator*(const Coeff& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Coeff> r(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(r));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  /// Orders by degree, then lexicographically on the descending coefficient vector.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() <=> b.coeffs_.size();
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      int c = cmp(a.coeffs_[i], b.coeffs_[i]);
      if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

 private:
  void trim() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead) coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  }

  std::vector<Coeff> coeffs_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

RatPoly to_rat(const IntPoly& p);
bool is_integral(const RatPoly& p);
/// Throws PreconditionError when a coefficient is not an integer.
IntPoly to_int(const RatPoly& p);
/// Positive rational multiple of p with coprime integer coefficients.
IntPoly primitive_part(const RatPoly& p);

Rational evaluate(const RatPoly& p, const Rational& x);
Integer evaluate(const IntPoly& p, const Integer& x);
int sign_at(const RatPoly& p, const Rational& x);

RatPoly derivative(const RatPoly& p);
IntPoly derivative(const IntPoly& p);
/// P(x) = integral_0^x p(y) dy (zero constant term).
RatPoly antiderivative(const RatPoly& p);
/// p(x + s).
RatPoly shift(const RatPoly& p, long s);
IntPoly shift(const IntPoly& p, long s);

struct DivMod {
  RatPoly quotient;
  RatPoly remainder;
};
DivMod divmod(const RatPoly& a, const RatPoly& b);
/// Exact quotient of a by b; throws InternalError when b does not divide a.
RatPoly exact_div(const RatPoly& a, const RatPoly& b);
IntPoly exact_div(const IntPoly& a, const IntPoly& b);
RatPoly make_monic(const RatPoly& p);

/// Monic gcd under exact Euclidean division. Both zero is an error.
RatPoly gcd(const RatPoly& p, const RatPoly& q);
/// Min(p, x) = p / gcd(p, p'), normalized monic.
RatPoly squarefree_part(const RatPoly& p);
/// Yun's decomposition: returns monic A_1, ..., A_m with p = lc * prod A_j^j,
/// the A_j squarefree and pairwise coprime (some may equal 1).
std::vector<RatPoly> squarefree_decomposition(const RatPoly& p);

/// Res_x(p, q) by the subresultant PRS on primitive integer images.
Rational resultant(const RatPoly& p, const RatPoly& q);
/// ((-1)^(d(d-1)/2) / lc) * Res(p, p').
Rational discriminant(const RatPoly& p);
/// The polynomial in C equal to Disc_x(P(x) + C), P = antiderivative(p).
RatPoly disc_in_C(const RatPoly& p);

/// 2^i | b_i for every 1 <= i <= n (p monic).
bool is_type2(const IntPoly& p);
/// 2^(i-1) | b_i for every 1 <= i <= n (p monic).
bool is_weakly_type2(const IntPoly& p);

Integer factorial(unsigned long n);

/// Comma-separated descending coefficients; rationals as num/den.
IntPoly parse_int_poly(std::string_view text);
RatPoly parse_rat_poly(std::string_view text);
std::string to_string(const IntPoly& p);
std::string to_string(const RatPoly& p);

}  // namespace seidelpoly
