/**
 * @file padic.hpp
 * @brief p-adic bookkeeping: Kubota-Leopoldt values at negative integers, the
 *        Bernoulli scalars attached to the elliptic Soule characters and the
 *        surjectivity criterion for split primes.
 */
#pragma once

#include <atomic>
#include <string>
#include <vector>

#include "soule/bernoulli.hpp"
#include "soule/character.hpp"
#include "soule/fields.hpp"
#include "soule/rational.hpp"

namespace soule {

/// L_p(1 - m, chi omega^m) = -(1 - chi(p) p^{m-1}) B_{m,chi} / m.
struct LpValue {
  unsigned long m = 0;
  DirichletChar chi = DirichletChar::trivial();
  long p = 0;
  Rational value;
  bool euler_removed = false;
};

/// Throws PreconditionError if m = 0, p is not prime or p divides the conductor.
LpValue lp_at_negative(unsigned long m, const DirichletChar& chi, long p);

enum class Parity { even, odd };

/// Counters for the Bernoulli families read by factorization_scalar.
struct FamilyReads {
  std::atomic<long> bernoulli{0};
  std::atomic<long> generalized{0};
};

struct FactorizationScalar {
  /// -6 w_K B_m / m (m even) or -3 w_K B_{m,chi_K} / m (m odd).
  Rational coefficient;
  /// (1 - p^{2m-2}) / (1 - p^{m-1}) = 1 + p^{m-1}.
  Rational euler_ratio;
  Parity parity = Parity::even;
};

/// Requires m >= 2 and p split in K.
FactorizationScalar factorization_scalar(const QuadField& field, long p, unsigned long m,
                                         FamilyReads* reads = nullptr);

/// Valuation bookkeeping for m = 0 or 1 mod p - 1.
struct ExceptionalCase {
  unsigned long m = 0;
  long p = 0;
  /// "m = 0 mod p-1" or "m = 1 mod p-1".
  std::string kind;
  /// v_p(m).
  long n = 0;
  /// For m = 0 mod p-1: v_p(A_m (1 + p^{m-1})); otherwise v_p(B_{m,chi_K} / m).
  Valuation computed;
  /// -(n + 1) in the first case; the lower bound 1 in the second.
  long predicted = 0;
  bool agree = false;
};

/// Throws PreconditionError unless m >= 2, p is split and m = 0 or 1 mod p - 1.
ExceptionalCase exceptional_valuation(const QuadField& field, long p, unsigned long m);

enum class SplitStatus { split, inert, ramified };
const char* to_string(SplitStatus s);
SplitStatus split_status(const QuadField& field, long p);

enum class Family { bernoulli, generalized };
const char* to_string(Family f);

struct CriterionEntry {
  unsigned long m = 0;
  Family family = Family::bernoulli;
  Rational value;
  Valuation vp;
};

/// Entries: B_{1,chi_K}; B_m for even m in [2, p-3]; B_{m,chi_K} for odd m in [3, p-2].
/// verdict holds iff no entry is divisible by p; witnesses are the failing m.
struct CriterionVerdict {
  long d_k = 0;
  long p = 0;
  SplitStatus status = SplitStatus::inert;
  std::vector<CriterionEntry> table;
  bool verdict = false;
  std::vector<unsigned long> witnesses;

  bool fails_even() const;
  bool fails_odd() const;
};

/// Requires a prime p >= 5. The split status is computed and reported, not required.
CriterionVerdict criterion_check(const QuadField& field, long p);

/// All primes 5 <= p <= p_max in ascending order. Requires p_max <= 10^4.
std::vector<CriterionVerdict> scan_primes(const QuadField& field, long p_max, unsigned jobs = 1);

struct PaperClaim {
  std::string id;
  std::string expected;
  std::string computed;
  bool agree = false;
};

/// Compares a scan with the published prime lists for Q(i), Q(sqrt-2) and Q(sqrt-3).
/// Claims outside the scanned range are omitted.
std::vector<PaperClaim> example_claims(const QuadField& field, const std::vector<CriterionVerdict>& scan);

}  // namespace soule
