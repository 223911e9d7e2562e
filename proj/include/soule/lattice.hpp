/**
 * @file lattice.hpp
 * @brief Arbitrary-precision lattice functions: Delta, A, s_2, eta, Weierstrass
 *        sigma/zeta/wp, the fundamental theta function and theta_a.
 *
 * Every evaluation first reduces tau = omega1/omega2 into the standard
 * fundamental domain (recording the SL_2(Z) matrix) and then sums q-series
 * until the next term falls below 2^{-(P+G)}. Values are computed at the
 * working precision P + G of the lattice; agreement checks use the tolerance
 * 2^{-(P-64)}.
 *
 * For L = omega2 (Z tau + Z), u = z/omega2, q = e^{2 pi i tau}, t = e^{2 pi i u}:
 *   G2(tau)   = (pi^2/3) (1 - 24 sum n q^n/(1-q^n))
 *   sigma(u)  = exp(G2 u^2/2) sin(pi u)/pi prod (1-q^n t)(1-q^n/t)/(1-q^n)^2
 *   Delta(L)  = (2 pi/omega2)^12 q prod (1-q^n)^24
 *   A(L)      = Im(tau) |omega2|^2 / pi
 *   s2(L)     = omega2^{-2} (G2(tau) - pi/Im(tau))
 *   eta(z, L) = conj(z)/A(L) + s2(L) z
 *   theta(z, L) = Delta(L) exp(-6 eta(z, L) z) sigma(z, L)^12
 * and for z = a1 omega1 + a2 omega2 the Siegel path
 *   theta = g^12,  g = -e^{pi i tau B2(a1)} e^{pi i a2 (a1-1)} (1-t) prod (1-q^n t)(1-q^n/t).
 */
#pragma once

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "soule/fields.hpp"
#include "soule/rational.hpp"
#include "soule/real.hpp"

namespace soule {

class LatticeBasis {
 public:
  /// Throws PreconditionError unless Im(omega1/omega2) > 0.
  LatticeBasis(const Complex& omega1, const Complex& omega2, PrecisionSpec precision);
  /// Omega * O_K with basis (Omega omega_K, Omega); Omega = 1 by default.
  static LatticeBasis cm(const QuadField& field, PrecisionSpec precision,
                         const std::optional<Complex>& big_omega = std::nullopt);

  const Complex& omega1() const noexcept { return omega1_; }
  const Complex& omega2() const noexcept { return omega2_; }
  const Complex& tau() const noexcept { return tau_; }
  const PrecisionSpec& precision() const noexcept { return precision_; }
  long working_bits() const noexcept { return precision_.working(); }

  /// The lattice c L with basis (c omega1, c omega2).
  LatticeBasis scaled(const Complex& c) const;
  /// m1 omega1 + m2 omega2.
  Complex point(long m1, long m2) const;

 private:
  Complex omega1_;
  Complex omega2_;
  Complex tau_;
  PrecisionSpec precision_;
};

/// (a1, a2) modulo Z^2; the lift is a1 omega1 + a2 omega2.
struct TorsionPoint {
  Rational a1;
  Rational a2;

  /// Representative in [0, 1)^2.
  TorsionPoint canonical() const;
  /// lcm of the denominators.
  BigInt order() const;
  bool is_zero() const;
  Complex lift(const LatticeBasis& lattice) const;
  friend bool operator==(const TorsionPoint&, const TorsionPoint&) = default;
};

/// A basis of the same lattice with tau in the standard fundamental domain:
/// (omega1', omega2') = (a omega1 + b omega2, c omega1 + d omega2), ad - bc = 1.
struct ReducedBasis {
  LatticeBasis basis;
  std::array<long, 4> matrix;
};
ReducedBasis reduce_basis(const LatticeBasis& lattice);

/// 2^{-(P-64)} * max(1, scale), the agreement tolerance used throughout.
Real verification_tolerance(const PrecisionSpec& precision, const Real& scale);

Real area_invariant(const LatticeBasis& lattice);
Complex s2_invariant(const LatticeBasis& lattice);
Complex quasi_period(const LatticeBasis& lattice, const Complex& z);
Complex discriminant(const LatticeBasis& lattice);

/// Throw LatticePointError if z is within tolerance of a lattice point.
Complex sigma_weierstrass(const LatticeBasis& lattice, const Complex& z);
Complex weierstrass_zeta(const LatticeBasis& lattice, const Complex& z);
Complex wp(const LatticeBasis& lattice, const Complex& z);
Complex wp_prime(const LatticeBasis& lattice, const Complex& z);

struct WeierstrassInvariants {
  Complex g2;
  Complex g3;
};
WeierstrassInvariants weierstrass_invariants(const LatticeBasis& lattice);

/// theta(z, L) by its definition.
Complex theta_fundamental(const LatticeBasis& lattice, const Complex& z);
/// theta at the canonical lift of t by the definition and by the Siegel
/// product; throws PathDisagreementError if they differ beyond tolerance.
Complex theta_fundamental(const LatticeBasis& lattice, const TorsionPoint& t);
/// Siegel path alone, at the given (not canonicalized) coordinates.
Complex theta_siegel(const LatticeBasis& lattice, const TorsionPoint& t);

/// Nonzero points of alpha^{-1} O_K / O_K in the coordinates of the basis (omega_K, 1).
std::vector<TorsionPoint> ideal_torsion(const QuadField& field, const OkElem& alpha);

struct ThetaAPaths {
  Complex quotient;  ///< theta(z, L)^{Na} / theta(z, alpha^{-1} L)
  Complex product;   ///< alpha^{-12} Delta^{Na-1} prod (wp(z) - wp(P))^{-6}
  std::size_t torsion_points = 0;
};
/// Both evaluations of theta_a; L must be Omega O_K for this field.
ThetaAPaths theta_a_paths(const QuadField& field, const LatticeBasis& lattice, const OkElem& alpha,
                          const Complex& z);
/// theta_a(z), asserting the two paths agree (PathDisagreementError otherwise).
Complex theta_a(const QuadField& field, const LatticeBasis& lattice, const OkElem& alpha, const Complex& z);

/// Thread-safe memo of per-tau q-series constants (G2 and the Delta product),
/// stored as exact hex strings so that warm and cold runs agree bit for bit.
class SeriesCache {
 public:
  std::optional<std::string> find(const std::string& key) const;
  void store(const std::string& key, const std::string& value);
  std::map<std::string, std::string> entries() const;
  void load(const std::map<std::string, std::string>& entries);
  std::size_t size() const;
  void clear();

 private:
  mutable std::mutex mutex_;
  std::map<std::string, std::string> entries_;
};
SeriesCache& series_cache();

}  // namespace soule
