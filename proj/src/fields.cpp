#include "soule/fields.hpp"

#include <cmath>
#include <cstdlib>
#include <optional>
#include <tuple>

#include "soule/bernoulli.hpp"
#include "soule/errors.hpp"

namespace soule {

namespace {

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

long mulmod(long a, long b, long m) {
  return static_cast<long>(static_cast<__int128>(a) * b % m);
}

}  // namespace

QuadField::QuadField(long d_k, int w_k, long ell, long t, long n)
    : d_k_(d_k), w_k_(w_k), ell_(ell), t_(t), n_(n), chi_(DirichletChar::kronecker(-d_k)) {
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      if (norm({a, b}) == 1) units_.push_back({a, b});
}

const std::array<long, 9>& QuadField::discriminants() {
  static const std::array<long, 9> ds = {3, 4, 7, 8, 11, 19, 43, 67, 163};
  return ds;
}

const QuadField& QuadField::get(long d_k) {
  static const std::array<QuadField, 9> fields = {
      QuadField(3, 6, 3, 1, 1),    QuadField(4, 4, 2, 0, 1),     QuadField(7, 2, 7, 1, 2),
      QuadField(8, 2, 2, 0, 2),    QuadField(11, 2, 11, 1, 3),   QuadField(19, 2, 19, 1, 5),
      QuadField(43, 2, 43, 1, 11), QuadField(67, 2, 67, 1, 17),  QuadField(163, 2, 163, 1, 41),
  };
  for (const auto& f : fields)
    if (f.d_k() == d_k) return f;
  throw PreconditionError("d_K = " + std::to_string(d_k) +
                          " is not a class-number-one imaginary quadratic discriminant");
}

Complex QuadField::omega(long precision_bits) const {
  const long disc = 4 * n_ - t_ * t_;  // |omega - conj(omega)|^2
  Real im = sqrt(Real(disc, precision_bits)) / 2;
  return {Real(Rational(t_, 2), precision_bits), im};
}

Complex QuadField::embed(const OkElem& x, long precision_bits) const {
  return Complex(Real(x.a, precision_bits)) + omega(precision_bits) * Real(x.b, precision_bits);
}

OkElem QuadField::mul(const OkElem& x, const OkElem& y) const {
  // (a + b w)(c + d w) = ac + (ad + bc) w + bd (t w - n)
  return {x.a * y.a - n_ * x.b * y.b, x.a * y.b + x.b * y.a + t_ * x.b * y.b};
}

OkElem QuadField::reduce(const OkElem& x, long m) const { return {mod(x.a, m), mod(x.b, m)}; }

OkElem QuadField::mul_mod(const OkElem& x, const OkElem& y, long m) const {
  const OkElem u = reduce(x, m), v = reduce(y, m);
  const long bd = mulmod(u.b, v.b, m);
  const long a = mod(mulmod(u.a, v.a, m) - mulmod(n_, bd, m), m);
  const long b = mod(mulmod(u.a, v.b, m) + mulmod(u.b, v.a, m) + mulmod(t_, bd, m), m);
  return {a, b};
}

OkElem QuadField::pow_mod(OkElem x, unsigned long e, long m) const {
  OkElem result = reduce({1, 0}, m);
  x = reduce(x, m);
  while (e) {
    if (e & 1) result = mul_mod(result, x, m);
    e >>= 1;
    if (e) x = mul_mod(x, x, m);
  }
  return result;
}

long QuadField::norm_mod(const OkElem& x, long m) const {
  const OkElem u = reduce(x, m);
  return mod(mulmod(u.a, u.a, m) + mulmod(mulmod(t_, u.a, m), u.b, m) + mulmod(mulmod(n_, u.b, m), u.b, m), m);
}

std::string QuadField::format(const OkElem& x) const {
  const std::string w = d_k_ == 4 ? "i" : (d_k_ == 8 ? "sqrt(-2)" : "w");
  if (x.b == 0) return std::to_string(x.a);
  std::string s = x.a != 0 ? std::to_string(x.a) + (x.b > 0 ? "+" : "-") : (x.b < 0 ? "-" : "");
  const long ab = std::labs(x.b);
  if (ab != 1) s += std::to_string(ab) + "*";
  return s + w;
}

int kronecker_chi(const QuadField& field, long n) { return field.chi()(n); }

bool is_split(const QuadField& field, long p) {
  if (p < 5 || !is_prime(p)) throw PreconditionError("is_split: p must be a prime >= 5, got " + std::to_string(p));
  if (field.d_k() % p == 0) throw RamifiedError(field.d_k(), p);
  return kronecker_chi(field, p) == 1;
}

SplitPrimeData find_split(const QuadField& field, long p) {
  if (!is_split(field, p)) throw NotSplitError(field.d_k(), p);
  const long bound = static_cast<long>(std::ceil(std::sqrt(static_cast<double>(p)))) + 2;
  std::optional<OkElem> best;
  auto key = [](const OkElem& x) { return std::make_tuple(std::labs(x.b), std::labs(x.a), x.b <= 0, x.a <= 0); };
  for (long b = -bound; b <= bound; ++b)
    for (long a = -bound; a <= bound; ++a) {
      const OkElem x{a, b};
      if (field.norm(x) != p) continue;
      if (!best || key(x) < key(*best)) best = x;
    }
  if (!best)
    throw SearchError("find_split: no element of norm " + std::to_string(p) + " within the search box");
  return {p, *best, field.conj(*best)};
}

GaussSum gauss_sum(const QuadField& field, long precision_bits) {
  if (precision_bits < 64) throw PreconditionError("gauss_sum: precision must be at least 64 bits");
  const long d = field.d_k();
  Complex g(precision_bits);
  for (long b = 1; b < d; ++b) {
    const int c = kronecker_chi(field, b);
    if (c == 0) continue;
    const Complex z = root_of_unity(Rational(-b, d), precision_bits);
    g = c > 0 ? g + z : g - z;
  }
  // chi_K is odd, so sum chi(b) zeta^{-b} = chi(-1) sum chi(b) zeta^{b} = -i sqrt(d).
  const int sign = -1;
  Complex predicted(Real(0, precision_bits), sqrt(Real(d, precision_bits)) * sign);
  return {g, sign, predicted};
}

}  // namespace soule
