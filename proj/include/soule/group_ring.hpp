/**
 * @file group_ring.hpp
 * @brief Q[(Z/MZ)^x]: Stickelberger elements, smoothing, the involution and
 *        Kersey's exponents nu_n(c, b).
 *
 * An element is stored as a map from the residue x (coprime to M, in [0, M))
 * to the coefficient of sigma_x. The Stickelberger element
 *   theta_{d,n} = sum_a B_1(<a/dp^n>) sigma_a^{-1}
 * therefore has coefficient B_1(<a/dp^n>) at the key a^{-1} mod dp^n.
 */
#pragma once

#include <functional>
#include <map>
#include <vector>

#include "soule/fields.hpp"
#include "soule/rational.hpp"

namespace soule {

class GroupRingElem {
 public:
  explicit GroupRingElem(long modulus);
  /// The basis element sigma_x.
  static GroupRingElem sigma(long modulus, long x);

  long modulus() const noexcept { return modulus_; }
  const std::map<long, Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(long x) const;
  /// Adds c to the coefficient of sigma_x; x must be coprime to the modulus.
  void add_term(long x, const Rational& c);
  bool is_zero() const { return coeffs_.empty(); }

  GroupRingElem& operator+=(const GroupRingElem& o);
  GroupRingElem& operator-=(const GroupRingElem& o);
  GroupRingElem& operator*=(const Rational& s);

  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
  friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
  friend GroupRingElem operator*(GroupRingElem a, const Rational& s) { return a *= s; }
  friend GroupRingElem operator*(const Rational& s, GroupRingElem a) { return a *= s; }
  /// Convolution: sigma_x * sigma_y = sigma_{xy}.
  friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);
  friend bool operator==(const GroupRingElem&, const GroupRingElem&) = default;

 private:
  long modulus_;
  std::map<long, Rational> coeffs_;
};

/// Inverse of a mod m (gcd must be 1).
long inverse_mod(long a, long m);
long power_of(long p, int n);

/// theta_{d,n} with modulus d * p^n. Requires gcd(d, p) = 1.
GroupRingElem stickelberger(long d, long p, int n);

/// (1 - c sigma_c^{-1}) theta. The result is checked to be Z_q-integral for
/// every prime q dividing the modulus (coefficients (c-1)/2 - k, so integers
/// for odd c); a violation throws IntegralityError with the offending key.
GroupRingElem smooth(const GroupRingElem& theta, long c);

/// sigma_x -> sigma_{x^{-1}}.
GroupRingElem involution(const GroupRingElem& theta);

/// sum_x coeff(sigma_x) * rule(x), with x the representative in [0, M).
Rational specialize(const GroupRingElem& theta, const std::function<Rational(long)>& rule);

/// nu_n(c, b) = -12 p^n sum_{a mod d_K p^n, ab = c mod p^n} (chi(a) + chi(b)) B_1(<a/d_K p^n>).
/// Zero when p | b (empty sum). Requires is_split(field, p) and p not dividing c.
Rational nu_exponent(const QuadField& field, long p, int n, long c, long b);

struct NuTable {
  long d_k = 0;
  long p = 0;
  int n = 0;
  long c = 0;
  /// b in [0, d_K p^n) -> nu_n(c, b).
  std::map<long, Rational> values;
};

/// nu_n(c, .) over all b, asserting integrality (IntegralityError on violation).
NuTable nu_table(const QuadField& field, long p, int n, long c);

/// Tables for every unit c mod p^n, in increasing c. Computed on `jobs`
/// threads; assembly order is independent of scheduling.
std::vector<NuTable> nu_tables(const QuadField& field, long p, int n, unsigned jobs = 1);

/// (Na nu_n(1, b) - nu_n(Na, b)) / p^n, asserted integral.
/// Requires chi_K(Na) = 1 and gcd(Na, d_K p) = 1.
Rational kersey_exponent(const QuadField& field, long p, int n, long na, long b);

}  // namespace soule
