/**
 * @file bernoulli.hpp
 * @brief Exact Bernoulli numbers, Bernoulli polynomials, generalized Bernoulli
 *        numbers of real characters, fractional parts and p-adic valuations.
 */
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "soule/character.hpp"
#include "soule/rational.hpp"

namespace soule {

/// Memo table for B_m (convention B_1 = -1/2). Values are produced by the
/// recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0. Reads take a shared lock;
/// extension takes the exclusive lock and only ever appends, so concurrent
/// requests for the same index are idempotent.
class BernoulliCache {
 public:
  Rational get(unsigned long m);

  /// Number of consecutive indices 0..size()-1 currently cached.
  std::size_t size() const;

  /// Snapshot of the table (for persistence).
  std::vector<Rational> snapshot() const;
  /// Seeds the table from a persisted prefix. The prefix is rejected (and the
  /// table left untouched) unless it passes the structural checks in seed().
  bool seed(const std::vector<Rational>& prefix);

 private:
  void extend_to(unsigned long m);

  mutable std::shared_mutex mutex_;
  std::vector<Rational> table_;
};

/// Process-wide cache used by the free functions below.
BernoulliCache& default_bernoulli_cache();

/// B_m with B_1 = -1/2.
Rational bernoulli_number(unsigned long m);

/// B_m(x) = sum_k C(m,k) B_k x^{m-k}.
Rational bernoulli_poly(unsigned long m, const Rational& x);

/// First Bernoulli polynomial B_1(x) = x - 1/2.
inline Rational bernoulli_b1(const Rational& x) { return x - Rational(1, 2); }

/// <a>: the representative of a mod Z in [0, 1).
Rational frac_part(const Rational& a);

/// B_{m,chi} = f^{m-1} sum_{a=1}^{f} chi(a) B_m(a/f), evaluated exactly.
/// For the trivial character (f = 1) this is B_m(1), i.e. B_1 = +1/2.
/// Throws PreconditionError for m = 0 or an imprimitive character.
Rational gen_bernoulli(unsigned long m, const DirichletChar& chi);

/// p-adic valuation. std::nullopt stands for +infinity (x = 0).
using Valuation = std::optional<long>;
Valuation padic_valuation(const Rational& x, long p);
Valuation padic_valuation(const BigInt& x, long p);

/// Primes q with (q - 1) | m, ascending. m >= 1.
std::vector<long> staudt_primes(unsigned long m);

/// True if n is prime (trial division; n is small here).
bool is_prime(long n);

}  // namespace soule
