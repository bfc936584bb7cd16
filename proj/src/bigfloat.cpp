#include "seidelpoly/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

namespace seidelpoly {

namespace {

mpfr_prec_t wider(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

mpfr_prec_t BigFloat::bits_for_digits(int digits) {
  require(digits > 0, "bits_for_digits: digits must be positive");
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
}

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Integer& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::pow10_neg(int digits, mpfr_prec_t bits) {
  BigFloat r(10L, bits);
  mpfr_pow_si(r.value_, r.value_, -digits, MPFR_RNDN);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  mpfr_prec_t bits = wider(*this, o);
  if (bits > precision()) mpfr_prec_round(value_, bits, MPFR_RNDN);
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  mpfr_prec_t bits = wider(*this, o);
  if (bits > precision()) mpfr_prec_round(value_, bits, MPFR_RNDN);
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  mpfr_prec_t bits = wider(*this, o);
  if (bits > precision()) mpfr_prec_round(value_, bits, MPFR_RNDN);
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  require(o.sign() != 0, "BigFloat: division by zero");
  mpfr_prec_t bits = wider(*this, o);
  if (bits > precision()) mpfr_prec_round(value_, bits, MPFR_RNDN);
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(*this);
  mpfr_abs(r.value_, r.value_, MPFR_RNDN);
  return r;
}

Rational BigFloat::to_rational() const {
  require(mpfr_number_p(value_), "BigFloat::to_rational: not a finite number");
  if (mpfr_zero_p(value_)) return 0;
  Integer m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), value_);
  Rational q(m);
  if (e >= 0)
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  else
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  return q;
}

Integer BigFloat::round_half_away() const {
  require(mpfr_number_p(value_), "BigFloat::round_half_away: not a finite number");
  BigFloat r(*this);
  mpfr_round(r.value_, value_);
  Integer z;
  mpfr_get_z(z.get_mpz_t(), r.value_, MPFR_RNDN);
  return z;
}

std::string BigFloat::to_string(int digits) const {
  char* text = nullptr;
  mpfr_asprintf(&text, "%.*Re", std::max(digits - 1, 0), value_);
  std::string out(text);
  mpfr_free_str(text);
  return out;
}

}  // namespace seidelpoly
