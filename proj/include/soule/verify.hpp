/**
 * @file verify.hpp
 * @brief Numerical verification of the elliptic/cyclotomic unit identities.
 *
 * Conventions: K is embedded in C through QuadField::omega, zeta_N = e^{2 pi i/N},
 * Omega = 1 unless stated. The Artin symbol of a principal prime-to-p ideal
 * (alpha) acts on p-power torsion by multiplication by alpha in O_K/p^n.
 * Statements "modulo roots of unity" are checked on absolute values; root of
 * unity ratios are raised to an exponent that must kill them.
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "soule/fields.hpp"
#include "soule/lattice.hpp"
#include "soule/rational.hpp"
#include "soule/real.hpp"

namespace soule {

struct CmBasis {
  long d_k = 0;
  long p = 0;
  int n = 0;
  SplitPrimeData split;
  /// u with u = 1 mod pi^n and u = 0 mod pi_bar^n, coefficients in [0, p^n).
  OkElem idempotent;
  TorsionPoint omega_n;       ///< Omega / p^n
  TorsionPoint omega_p_n;     ///< u omega_n
  TorsionPoint omega_pbar_n;  ///< (1 - u) omega_n
};

/// With swap = true the roles of pi and pi_bar are exchanged.
CmBasis cm_basis(const QuadField& field, long p, int n, bool swap = false);

/// The torsion point x omega_n for x in O_K (coordinates in the basis (omega_K, 1)).
TorsionPoint scale_torsion(const OkElem& x, long pn);

/// (O_K/p^n)^x as coefficient pairs in [0, p^n)^2.
std::vector<OkElem> unit_group(const QuadField& field, long p, int n);

/// Transversal of ker(N: (O_K/p^n)^x -> (Z/p^n)^x) modulo the image of O_K^x.
/// The default picks the least element of each unit orbit; `alternate` the greatest.
std::vector<OkElem> norm_kernel_transversal(const QuadField& field, long p, int n, bool alternate = false);

/// Least element of (O_K/p^n)^x with norm = c mod p^n.
OkElem norm_representative(const QuadField& field, long p, int n, long c);

struct OrbitOptions {
  bool alternate_transversal = false;
  /// Multiplies the representative alpha_c by this unit.
  OkElem unit{1, 0};
  std::optional<Complex> big_omega;
};

/// log|N_{K(p^n)/K(mu_{p^n})} sigma_c(theta(Omega/p^n, L)^{p^n})|
///   = p^n sum_{beta in Ker} log|theta(beta alpha_c omega_n, L)|.
Real galois_orbit_theta(const QuadField& field, long p, int n, long c, PrecisionSpec precision,
                        const OrbitOptions& options = {});

struct RegulatorVector {
  long modulus = 0;
  std::map<long, Real> coords;
};

RegulatorVector kersey_lhs(const QuadField& field, long p, int n, PrecisionSpec precision, unsigned jobs = 1);

/// Exact weights -3 p^n sum_{a : ab = c mod p^n} (chi(a) + chi(b)) B_1(<a/d_K p^n>)
/// by direct summation over the (a, b) grid: c -> (b -> weight), zero weights omitted.
/// Throws IntegralityError if a b with zeta^b = 1 carries a nonzero weight.
std::map<long, std::map<long, Rational>> kersey_rhs_weights(const QuadField& field, long p, int n);

/// Number of (c, b) where the grid weight differs from nu_n(c, b)/4 (exact comparison).
long regrouping_mismatches(const QuadField& field, long p, int n);

/// log|1 - zeta_m^b| = log(2 |sin(pi b/m)|).
Real log_abs_one_minus_zeta(long b, long m, long precision_bits);

RegulatorVector kersey_rhs(const QuadField& field, long p, int n, PrecisionSpec precision);

struct ComparisonRow {
  std::string label;
  std::string lhs;
  std::string rhs;
  /// |lhs - rhs|.
  Real abs_diff;
  /// The row is judged on abs_diff / max(1, scale).
  Real scale;
};

/// max_abs_diff is the largest abs_diff / max(1, scale) over the rows and
/// tolerance is 2^{-(P-64)}; pass = exact_ok && max_abs_diff <= tolerance.
struct VerificationReport {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<ComparisonRow> rows;
  std::vector<std::string> notes;
  /// False if an exact (rational) side check failed.
  bool exact_ok = true;
  Real max_abs_diff;
  Real tolerance;
  bool pass = false;
  long precision_bits = 0;
  long guard_bits = 0;
  double wall_seconds = 0.0;
};

/// Recomputes max_abs_diff, tolerance and pass from the rows.
void judge(VerificationReport& r, const PrecisionSpec& precision);

VerificationReport verify_kersey(const QuadField& field, long p, int n, PrecisionSpec precision, unsigned jobs = 1);

/// (i) 4 log|sigma_c N(theta^{p^n})| = sum_b nu_n(c,b) log|1 - zeta^b| for the given c;
/// (ii) 4 log|N theta_a(omega_n)| = sum_b e(b) log|1 - zeta^b| with the Kersey exponents e(b),
/// the left side evaluated through theta_a itself;
/// plus the exact regrouping check between the two theorem forms.
VerificationReport verify_kersey_mult(const QuadField& field, long p, int n, long c, long na,
                                      PrecisionSpec precision);

/// The two norm identities from the proof of the key lemma at level n.
VerificationReport verify_norm_unit_identities(const QuadField& field, long p, int n, PrecisionSpec precision);

struct LedgerOptions {
  bool swap = false;
  std::optional<Complex> big_omega;
};

/// sum_{0 <= a,b < p^n, p not | gcd(a,b)} a^{m1-1} b^{m2-1} log|theta(a omega_p + b omega_pbar, L)|.
Real epsilon_log_ledger(const QuadField& field, long p, int n, unsigned long m1, unsigned long m2,
                        PrecisionSpec precision, const LedgerOptions& options = {});

/// |prod_{P in E[p]} theta(w + P)| = |theta(p w)| at w = omega_2 and w = omega_{p,2}.
VerificationReport verify_distribution(const QuadField& field, long p, PrecisionSpec precision);

/// theta(cz, cL) = theta(z, L), theta(uz, L) = theta(z, L) for units u, the
/// two-path agreement at the level-n CM torsion points and the Legendre relation.
VerificationReport verify_homogeneity(const QuadField& field, long p, int n, PrecisionSpec precision);

/// |theta| at two lifts of omega_n and omega_{p,n}, and the ratio to the power 12 d_K p^n.
VerificationReport verify_lift_independence(const QuadField& field, long p, int n, PrecisionSpec precision);

/// Quotient versus product formula for theta_a at a few points.
VerificationReport verify_theta_a(const QuadField& field, const OkElem& alpha, PrecisionSpec precision);

/// Least element of O_K (same tie-break as find_split) with norm na.
std::optional<OkElem> element_of_norm(const QuadField& field, long na);

}  // namespace soule
