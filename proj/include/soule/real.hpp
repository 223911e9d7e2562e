/**
 * @file real.hpp
 * @brief Value-semantic MPFR reals and complex numbers with explicit precision.
 *
 * Binary operations produce a result whose precision is the minimum of the
 * operand precisions. All rounding is to nearest.
 */
#pragma once

#include <mpfr.h>

#include <iosfwd>
#include <string>

#include "soule/rational.hpp"

namespace soule {

/// Nominal precision P plus guard bits G. Everything is evaluated at P + G
/// bits; tolerances are stated against P.
struct PrecisionSpec {
  long bits = 256;
  long guard = 32;
  long working() const { return bits + guard; }
};

class Real {
 public:
  explicit Real(long precision_bits = 64);
  Real(int value, long precision_bits) : Real(static_cast<long>(value), precision_bits) {}
  Real(long value, long precision_bits);
  Real(const Rational& value, long precision_bits);
  Real(const BigInt& value, long precision_bits);
  Real(double value, long precision_bits);
  /// Parses a string in the given base (2..62); exact for hex output of hex().
  static Real parse(const std::string& text, long precision_bits, int base = 10);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
  /// Copy rounded to a new precision.
  Real with_precision(long precision_bits) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// log2|x| as a double; -inf for zero.
  double log2_abs() const;

  /// Decimal rendering with `digits` significant digits (0: enough to round-trip).
  std::string str(int digits = 0) const;
  /// Exact base-16 rendering (mantissa@exponent), parseable with parse(.., 16).
  std::string hex() const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long k);
  Real& operator/=(long k);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator*(const Real& a, long k);
  friend Real operator*(long k, const Real& a) { return a * k; }
  friend Real operator/(const Real& a, long k);
  friend Real operator-(const Real& a);

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

std::ostream& operator<<(std::ostream& os, const Real& x);

Real pi(long precision_bits);
Real exp(const Real& x);
Real log(const Real& x);
Real sqrt(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real abs(const Real& x);
Real atan2(const Real& y, const Real& x);
/// x * 2^k.
Real ldexp(const Real& x, long k);
Real max(const Real& a, const Real& b);
/// 2^k at the given precision.
Real pow2(long k, long precision_bits);

class Complex {
 public:
  explicit Complex(long precision_bits = 64) : re_(precision_bits), im_(precision_bits) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit Complex(const Real& re) : re_(re), im_(re.precision()) {}
  Complex(long re, long im, long precision_bits) : re_(re, precision_bits), im_(im, precision_bits) {}

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  long precision() const { return std::min(re_.precision(), im_.precision()); }
  Complex with_precision(long precision_bits) const {
    return {re_.with_precision(precision_bits), im_.with_precision(precision_bits)};
  }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& r);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const Real& r) { return a *= r; }
  friend Complex operator*(const Real& r, Complex a) { return a *= r; }
  friend Complex operator-(const Complex& a) { return {-a.re_, -a.im_}; }

 private:
  Real re_;
  Real im_;
};

std::ostream& operator<<(std::ostream& os, const Complex& z);

Complex conj(const Complex& z);
/// |z|^2.
Real norm(const Complex& z);
Real abs(const Complex& z);
/// log|z|.
Real log_abs(const Complex& z);
Complex exp(const Complex& z);
/// e^{i x} for real x.
Complex expi(const Real& x);
/// e^{2 pi i x} for rational x, exact in the argument reduction.
Complex root_of_unity(const Rational& x, long precision_bits);
/// z^k for any integer k (negative powers invert).
Complex pow(const Complex& z, long k);
Complex inverse(const Complex& z);
/// i at the given precision.
Complex imag_unit(long precision_bits);

}  // namespace soule
