#include "soule/real.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <vector>

#include "soule/errors.hpp"

namespace soule {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

long min_prec(const Real& a, const Real& b) { return std::min(a.precision(), b.precision()); }

}  // namespace

Real::Real(long precision_bits) {
  mpfr_init2(v_, static_cast<mpfr_prec_t>(precision_bits));
  mpfr_set_zero(v_, 1);
}

Real::Real(long value, long precision_bits) : Real(precision_bits) { mpfr_set_si(v_, value, kRnd); }

Real::Real(const Rational& value, long precision_bits) : Real(precision_bits) {
  mpfr_set_q(v_, value.raw().get_mpq_t(), kRnd);
}

Real::Real(const BigInt& value, long precision_bits) : Real(precision_bits) {
  mpfr_set_z(v_, value.get_mpz_t(), kRnd);
}

Real::Real(double value, long precision_bits) : Real(precision_bits) { mpfr_set_d(v_, value, kRnd); }

Real Real::parse(const std::string& text, long precision_bits, int base) {
  Real out(precision_bits);
  if (mpfr_set_str(out.v_, text.c_str(), base, kRnd) != 0)
    throw PreconditionError("Real::parse: malformed number '" + text + "'");
  return out;
}

Real::Real(const Real& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, kRnd);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, kRnd);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::with_precision(long precision_bits) const {
  Real out(precision_bits);
  mpfr_set(out.v_, v_, kRnd);
  return out;
}

double Real::log2_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, v_, kRnd);
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

std::string Real::str(int digits) const {
  if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  if (is_zero()) return "0";
  const int n = digits > 0 ? digits : static_cast<int>(std::ceil(precision() * 0.30103)) + 1;
  std::vector<char> buf(static_cast<std::size_t>(n) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", n, v_);
  return std::string(buf.data());
}

std::string Real::hex() const {
  if (is_zero()) return "0";
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 16, 0, v_, kRnd);
  std::string mant(s);
  mpfr_free_str(s);
  // mpfr_get_str returns 0.MANT * 16^e; rewrite as integer mantissa @ exponent.
  const bool neg = !mant.empty() && mant[0] == '-';
  const std::string digits = neg ? mant.substr(1) : mant;
  const long exp16 = static_cast<long>(e) - static_cast<long>(digits.size());
  return (neg ? "-" : "") + digits + "@" + std::to_string(exp16);
}

Real& Real::operator+=(const Real& o) {
  Real out(min_prec(*this, o));
  mpfr_add(out.v_, v_, o.v_, kRnd);
  return *this = std::move(out);
}
Real& Real::operator-=(const Real& o) {
  Real out(min_prec(*this, o));
  mpfr_sub(out.v_, v_, o.v_, kRnd);
  return *this = std::move(out);
}
Real& Real::operator*=(const Real& o) {
  Real out(min_prec(*this, o));
  mpfr_mul(out.v_, v_, o.v_, kRnd);
  return *this = std::move(out);
}
Real& Real::operator/=(const Real& o) {
  Real out(min_prec(*this, o));
  mpfr_div(out.v_, v_, o.v_, kRnd);
  return *this = std::move(out);
}
Real& Real::operator*=(long k) {
  mpfr_mul_si(v_, v_, k, kRnd);
  return *this;
}
Real& Real::operator/=(long k) {
  mpfr_div_si(v_, v_, k, kRnd);
  return *this;
}

Real operator+(const Real& a, const Real& b) {
  Real out(min_prec(a, b));
  mpfr_add(out.v_, a.v_, b.v_, kRnd);
  return out;
}
Real operator-(const Real& a, const Real& b) {
  Real out(min_prec(a, b));
  mpfr_sub(out.v_, a.v_, b.v_, kRnd);
  return out;
}
Real operator*(const Real& a, const Real& b) {
  Real out(min_prec(a, b));
  mpfr_mul(out.v_, a.v_, b.v_, kRnd);
  return out;
}
Real operator/(const Real& a, const Real& b) {
  Real out(min_prec(a, b));
  mpfr_div(out.v_, a.v_, b.v_, kRnd);
  return out;
}
Real operator*(const Real& a, long k) {
  Real out(a.precision());
  mpfr_mul_si(out.v_, a.v_, k, kRnd);
  return out;
}
Real operator/(const Real& a, long k) {
  Real out(a.precision());
  mpfr_div_si(out.v_, a.v_, k, kRnd);
  return out;
}
Real operator-(const Real& a) {
  Real out(a.precision());
  mpfr_neg(out.v_, a.v_, kRnd);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.str(); }

Real pi(long precision_bits) {
  Real out(precision_bits);
  mpfr_const_pi(out.raw(), kRnd);
  return out;
}

Real exp(const Real& x) {
  Real out(x.precision());
  mpfr_exp(out.raw(), x.raw(), kRnd);
  return out;
}

Real log(const Real& x) {
  Real out(x.precision());
  mpfr_log(out.raw(), x.raw(), kRnd);
  return out;
}

Real sqrt(const Real& x) {
  Real out(x.precision());
  mpfr_sqrt(out.raw(), x.raw(), kRnd);
  return out;
}

Real sin(const Real& x) {
  Real out(x.precision());
  mpfr_sin(out.raw(), x.raw(), kRnd);
  return out;
}

Real cos(const Real& x) {
  Real out(x.precision());
  mpfr_cos(out.raw(), x.raw(), kRnd);
  return out;
}

Real abs(const Real& x) {
  Real out(x.precision());
  mpfr_abs(out.raw(), x.raw(), kRnd);
  return out;
}

Real atan2(const Real& y, const Real& x) {
  Real out(min_prec(y, x));
  mpfr_atan2(out.raw(), y.raw(), x.raw(), kRnd);
  return out;
}

Real ldexp(const Real& x, long k) {
  Real out(x.precision());
  mpfr_mul_2si(out.raw(), x.raw(), k, kRnd);
  return out;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real pow2(long k, long precision_bits) {
  Real out(precision_bits);
  mpfr_set_ui_2exp(out.raw(), 1, k, kRnd);
  return out;
}

Complex& Complex::operator+=(const Complex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real re = re_ * o.re_ - im_ * o.im_;
  Real im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) { return *this *= inverse(o); }

Complex& Complex::operator*=(const Real& r) {
  re_ *= r;
  im_ *= r;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Complex& z) {
  return os << "(" << z.re().str(20) << ", " << z.im().str(20) << ")";
}

Complex conj(const Complex& z) { return {z.re(), -z.im()}; }

Real norm(const Complex& z) { return z.re() * z.re() + z.im() * z.im(); }

Real abs(const Complex& z) {
  Real out(z.precision());
  mpfr_hypot(out.raw(), z.re().raw(), z.im().raw(), kRnd);
  return out;
}

Real log_abs(const Complex& z) { return log(abs(z)); }

Complex exp(const Complex& z) {
  const Real r = exp(z.re());
  return {r * cos(z.im()), r * sin(z.im())};
}

Complex expi(const Real& x) {
  Real s(x.precision()), c(x.precision());
  mpfr_sin_cos(s.raw(), c.raw(), x.raw(), kRnd);
  return {std::move(c), std::move(s)};
}

Complex root_of_unity(const Rational& x, long precision_bits) {
  const Rational r = x - Rational(x.floor());
  Real angle = Real(r, precision_bits + 8) * pi(precision_bits + 8) * 2;
  return expi(angle).with_precision(precision_bits);
}

Complex inverse(const Complex& z) {
  if (z.is_zero()) throw PreconditionError("Complex: inverse of zero");
  const Real n = norm(z);
  return {z.re() / n, -z.im() / n};
}

Complex pow(const Complex& z, long k) {
  if (k < 0) return pow(inverse(z), -k);
  Complex result(Real(1, z.precision()), Real(0, z.precision()));
  Complex base = z;
  unsigned long e = static_cast<unsigned long>(k);
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Complex imag_unit(long precision_bits) { return {Real(0, precision_bits), Real(1, precision_bits)}; }

}  // namespace soule
