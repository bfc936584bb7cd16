#pragma once

// Owning wrapper around an MPFR value with its own precision. Binary
// operations use the larger operand precision and round to nearest.

#include <mpfr.h>

#include <string>

#include "seidelpoly/poly.hpp"

namespace seidelpoly {

class BigFloat {
 public:
  /// Bits needed for `digits` significant decimal digits, plus guard bits.
  static mpfr_prec_t bits_for_digits(int digits);

  explicit BigFloat(mpfr_prec_t bits = 256);
  BigFloat(long value, mpfr_prec_t bits);
  BigFloat(const Integer& value, mpfr_prec_t bits);
  BigFloat(const Rational& value, mpfr_prec_t bits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  /// 10^(-digits) at the given precision.
  static BigFloat pow10_neg(int digits, mpfr_prec_t bits);

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  BigFloat operator-() const;
  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.value_, b.value_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.value_, b.value_); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.value_, b.value_); }

  int sign() const { return mpfr_sgn(value_); }
  BigFloat abs() const;
  /// Exact value as a dyadic rational.
  Rational to_rational() const;
  /// Nearest integer, halves away from zero.
  Integer round_half_away() const;
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits = 20) const;

 private:
  mpfr_t value_;
};

}  // namespace seidelpoly
