#include "soule/bernoulli.hpp"

#include <mutex>

#include "soule/errors.hpp"

namespace soule {

namespace {

// B_n from B_0..B_{n-1}; odd indices >= 3 contribute nothing to the sum.
Rational recurrence_step(const std::vector<Rational>& table, unsigned long n) {
  mpq_class acc = 0;
  for (unsigned long k = 0; k < n; ++k) {
    if (k >= 3 && (k & 1)) continue;
    acc += mpq_class(binomial(n + 1, k)) * table[k].raw();
  }
  acc /= -static_cast<long>(n + 1);
  return Rational(acc);
}

}  // namespace

Rational BernoulliCache::get(unsigned long m) {
  {
    std::shared_lock lock(mutex_);
    if (m < table_.size()) return table_[m];
  }
  extend_to(m);
  std::shared_lock lock(mutex_);
  return table_[m];
}

void BernoulliCache::extend_to(unsigned long m) {
  std::unique_lock lock(mutex_);
  if (table_.empty()) table_.emplace_back(1);
  while (table_.size() <= m) table_.push_back(recurrence_step(table_, table_.size()));
}

std::size_t BernoulliCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

std::vector<Rational> BernoulliCache::snapshot() const {
  std::shared_lock lock(mutex_);
  return table_;
}

bool BernoulliCache::seed(const std::vector<Rational>& prefix) {
  // B_0, B_1, vanishing odd values, von Staudt-Clausen denominators, sign
  // alternation, and the defining recurrence at the last two indices (every
  // earlier entry appears there with a nonzero binomial weight).
  if (prefix.size() < 2 || prefix[0] != Rational(1) || prefix[1] != Rational(-1, 2)) return false;
  for (std::size_t n = 2; n < prefix.size(); ++n) {
    const Rational& b = prefix[n];
    if (n & 1) {
      if (!b.is_zero()) return false;
      continue;
    }
    Rational s = b;
    for (long q : staudt_primes(n)) s += Rational(1, q);
    if (!s.is_integer()) return false;
    const int expected_sign = (n % 4 == 2) ? 1 : -1;
    if (b.sign() != expected_sign) return false;
  }
  for (std::size_t n = prefix.size() >= 3 ? prefix.size() - 2 : 1; n < prefix.size(); ++n) {
    mpq_class s = 0;
    for (std::size_t k = 0; k <= n; ++k) s += mpq_class(binomial(n + 1, k)) * prefix[k].raw();
    if (s != 0) return false;
  }
  std::unique_lock lock(mutex_);
  if (prefix.size() > table_.size()) table_ = prefix;
  return true;
}

BernoulliCache& default_bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

Rational bernoulli_number(unsigned long m) { return default_bernoulli_cache().get(m); }

Rational bernoulli_poly(unsigned long m, const Rational& x) {
  default_bernoulli_cache().get(m);
  // Horner in x over the coefficients C(m,k) B_k of x^{m-k}.
  mpq_class acc = 0;
  for (unsigned long k = 0; k <= m; ++k) {
    acc *= x.raw();
    acc += mpq_class(binomial(m, k)) * bernoulli_number(k).raw();
  }
  return Rational(acc);
}

Rational frac_part(const Rational& a) { return a - Rational(a.floor()); }

Rational gen_bernoulli(unsigned long m, const DirichletChar& chi) {
  if (m == 0) throw PreconditionError("gen_bernoulli: m must be positive");
  if (!chi.is_primitive()) throw PreconditionError("gen_bernoulli: character must be primitive");
  const long f = chi.conductor();
  // f^{m-1} B_m(a/f) = sum_k C(m,k) B_k a^{m-k} f^{k-1}; keep everything integral
  // until the final division by f.
  std::vector<mpq_class> coeff(m + 1);
  for (unsigned long k = 0; k <= m; ++k) coeff[k] = mpq_class(binomial(m, k)) * bernoulli_number(k).raw();
  BigInt f_pow_km1 = 1;  // f^{k}
  std::vector<BigInt> f_pows(m + 1);
  for (unsigned long k = 0; k <= m; ++k) {
    f_pows[k] = f_pow_km1;
    f_pow_km1 *= f;
  }
  mpq_class total = 0;
  for (long a = 1; a <= f; ++a) {
    const int c = chi(a);
    if (c == 0) continue;
    mpq_class inner = 0;
    BigInt a_pow = 1;  // a^{m-k}, built from k = m downwards
    for (unsigned long k = m + 1; k-- > 0;) {
      inner += coeff[k] * mpq_class(a_pow * f_pows[k]);
      a_pow *= a;
    }
    total += c > 0 ? inner : mpq_class(-inner);
  }
  total /= f;
  return Rational(total);
}

Valuation padic_valuation(const BigInt& x, long p) {
  if (x == 0) return std::nullopt;
  BigInt prime = p;
  BigInt rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

Valuation padic_valuation(const Rational& x, long p) {
  if (x.is_zero()) return std::nullopt;
  return *padic_valuation(x.numerator(), p) - *padic_valuation(x.denominator(), p);
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long> staudt_primes(unsigned long m) {
  std::vector<long> out;
  for (unsigned long d = 1; d <= m; ++d)
    if (m % d == 0 && is_prime(static_cast<long>(d + 1))) out.push_back(static_cast<long>(d + 1));
  return out;
}

}  // namespace soule
