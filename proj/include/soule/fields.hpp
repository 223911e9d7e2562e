/**
 * @file fields.hpp
 * @brief The nine imaginary quadratic fields of class number one.
 *
 * Elements of O_K are integer pairs (a, b) meaning a + b*omega, where omega
 * satisfies omega^2 = t*omega - n:
 *   d = 4: omega = i              (t = 0, n = 1)
 *   d = 8: omega = sqrt(-2)       (t = 0, n = 2)
 *   d odd: omega = (1+sqrt(-d))/2 (t = 1, n = (1+d)/4)
 */
#pragma once

#include <array>
#include <string>
#include <vector>

#include "soule/character.hpp"
#include "soule/real.hpp"

namespace soule {

struct OkElem {
  long a = 0;
  long b = 0;
  friend bool operator==(const OkElem&, const OkElem&) = default;
};

class QuadField {
 public:
  /// Throws PreconditionError unless d_k is one of the nine discriminants.
  static const QuadField& get(long d_k);
  static const std::array<long, 9>& discriminants();

  long d_k() const noexcept { return d_k_; }
  int w_k() const noexcept { return w_k_; }
  /// The prime dividing d_K.
  long ell() const noexcept { return ell_; }
  const DirichletChar& chi() const noexcept { return chi_; }
  long trace_omega() const noexcept { return t_; }
  long norm_omega() const noexcept { return n_; }

  Complex omega(long precision_bits) const;
  Complex embed(const OkElem& x, long precision_bits) const;

  OkElem add(const OkElem& x, const OkElem& y) const { return {x.a + y.a, x.b + y.b}; }
  OkElem sub(const OkElem& x, const OkElem& y) const { return {x.a - y.a, x.b - y.b}; }
  OkElem neg(const OkElem& x) const { return {-x.a, -x.b}; }
  OkElem mul(const OkElem& x, const OkElem& y) const;
  OkElem conj(const OkElem& x) const { return {x.a + x.b * t_, -x.b}; }
  long norm(const OkElem& x) const { return x.a * x.a + t_ * x.a * x.b + n_ * x.b * x.b; }

  /// Coefficients reduced into [0, m).
  OkElem reduce(const OkElem& x, long m) const;
  OkElem mul_mod(const OkElem& x, const OkElem& y, long m) const;
  OkElem pow_mod(OkElem x, unsigned long e, long m) const;
  long norm_mod(const OkElem& x, long m) const;

  /// The w_K units of O_K.
  const std::vector<OkElem>& units() const noexcept { return units_; }

  std::string format(const OkElem& x) const;

 private:
  QuadField(long d_k, int w_k, long ell, long t, long n);
  long d_k_;
  int w_k_;
  long ell_;
  long t_;
  long n_;
  DirichletChar chi_;
  std::vector<OkElem> units_;
};

/// chi_K(n), the Kronecker symbol of discriminant -d_K.
int kronecker_chi(const QuadField& field, long n);

/// True iff chi_K(p) = +1. Requires p >= 5 prime; throws RamifiedError if p | d_K.
bool is_split(const QuadField& field, long p);

struct SplitPrimeData {
  long p = 0;
  OkElem pi;
  OkElem pi_bar;
};

/// A generator pi of a prime above p. Search box |a|, |b| <= ceil(sqrt p) + 2;
/// among all norm-p elements the one minimizing (|b|, |a|) is chosen, with
/// b > 0 and then a > 0 preferred. Throws NotSplitError for inert p.
SplitPrimeData find_split(const QuadField& field, long p);

struct GaussSum {
  Complex value;
  /// The exact prediction is predicted_sign * i * sqrt(d_K).
  int predicted_sign = 0;
  Complex predicted;
};

/// g(chi_K) = sum_{b mod d_K} chi_K(b) zeta_{d_K}^{-b}.
GaussSum gauss_sum(const QuadField& field, long precision_bits);

}  // namespace soule
