#include <doctest.h>

#include <thread>
#include <vector>

#include "soule/bernoulli.hpp"
#include "soule/character.hpp"
#include "soule/errors.hpp"
#include "soule/rational.hpp"

using namespace soule;

namespace {

// Akiyama-Tanigawa: produces B_n with B_1 = +1/2.
std::vector<Rational> akiyama_tanigawa(unsigned n_max) {
  std::vector<Rational> out;
  std::vector<Rational> a(n_max + 1);
  for (unsigned m = 0; m <= n_max; ++m) {
    a[m] = Rational(1, m + 1);
    for (unsigned j = m; j >= 1; --j) a[j - 1] = Rational(static_cast<long>(j)) * (a[j - 1] - a[j]);
    out.push_back(a[0]);
  }
  return out;
}

// Power-series oracle: sum_a chi(a) t e^{at} / (e^{ft} - 1) = sum_m B_{m,chi} t^m / m!.
std::vector<Rational> gen_bernoulli_series(const DirichletChar& chi, unsigned n_max) {
  const long f = chi.conductor();
  std::vector<Rational> fact(n_max + 2, Rational(1));
  for (unsigned k = 1; k < fact.size(); ++k) fact[k] = fact[k - 1] * Rational(static_cast<long>(k));
  // d(t) = (e^{ft} - 1) / t = sum_k f^{k+1} t^k / (k+1)!
  std::vector<Rational> d(n_max + 1), inv(n_max + 1);
  for (unsigned k = 0; k <= n_max; ++k) d[k] = pow(Rational(f), k + 1) / fact[k + 1];
  inv[0] = Rational(1) / d[0];
  for (unsigned k = 1; k <= n_max; ++k) {
    Rational s(0);
    for (unsigned j = 1; j <= k; ++j) s += d[j] * inv[k - j];
    inv[k] = -s / d[0];
  }
  std::vector<Rational> num(n_max + 1, Rational(0));
  for (long a = 1; a <= f; ++a) {
    const int c = chi(a);
    if (c == 0) continue;
    for (unsigned k = 0; k <= n_max; ++k) num[k] += Rational(c) * pow(Rational(a), k) / fact[k];
  }
  std::vector<Rational> out(n_max + 1, Rational(0));
  for (unsigned m = 0; m <= n_max; ++m) {
    Rational s(0);
    for (unsigned j = 0; j <= m; ++j) s += num[j] * inv[m - j];
    out[m] = s * fact[m];
  }
  return out;
}

int legendre_euler(long a, long p) {
  long r = 1, base = ((a % p) + p) % p, e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

}  // namespace

TEST_CASE("rational arithmetic and parsing") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational::parse("427/2") == Rational(427, 2));
  CHECK(Rational::parse("-5") == Rational(-5));
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(binomial(10, 3) == 120);
  CHECK_THROWS_AS(Rational(1, 0), PreconditionError);
}

TEST_CASE("Bernoulli numbers agree with the Akiyama-Tanigawa oracle") {
  const auto oracle = akiyama_tanigawa(80);
  for (unsigned m = 0; m <= 80; ++m) {
    const Rational expected = m == 1 ? -oracle[m] : oracle[m];
    CHECK_MESSAGE(bernoulli_number(m) == expected, "m = " << m);
  }
  CHECK(bernoulli_number(12) == Rational(-691, 2730));
}

TEST_CASE("von Staudt-Clausen holds for even m <= 120") {
  for (unsigned long m = 2; m <= 120; m += 2) {
    Rational s = bernoulli_number(m);
    for (long q : staudt_primes(m)) s += Rational(1, q);
    CHECK_MESSAGE(s.is_integer(), "m = " << m);
  }
  CHECK(staudt_primes(12) == std::vector<long>{2, 3, 5, 7, 13});
}

TEST_CASE("Bernoulli polynomials satisfy the difference equation") {
  for (unsigned long m = 1; m <= 12; ++m)
    for (const Rational& x : {Rational(0), Rational(1, 3), Rational(-5, 7)})
      CHECK(bernoulli_poly(m, x + Rational(1)) - bernoulli_poly(m, x) == Rational(static_cast<long>(m)) * pow(x, m - 1));
  CHECK(bernoulli_poly(3, Rational(1, 2)) == Rational(0));
}

TEST_CASE("generalized Bernoulli numbers agree with the power-series oracle") {
  for (long disc : {-3, -4, -7, -8, -11, -19, 5, 12}) {
    const DirichletChar chi = DirichletChar::kronecker(disc);
    const auto oracle = gen_bernoulli_series(chi, 16);
    for (unsigned long m = 1; m <= 16; ++m) CHECK_MESSAGE(gen_bernoulli(m, chi) == oracle[m], "D = " << disc << ", m = " << m);
  }
}

TEST_CASE("generalized Bernoulli golden values") {
  const DirichletChar chi4 = DirichletChar::kronecker(-4);
  CHECK(gen_bernoulli(1, chi4) == Rational(-1, 2));
  CHECK(gen_bernoulli(7, chi4) == Rational(427, 2));
  CHECK(padic_valuation(gen_bernoulli(7, chi4), 61) == 1L);
  // odd character: B_{m,chi} vanishes for even m
  for (unsigned long m = 2; m <= 12; m += 2) CHECK(gen_bernoulli(m, chi4).is_zero());
  // trivial character: B_{1} = +1/2 in this normalization
  CHECK(gen_bernoulli(1, DirichletChar::trivial()) == Rational(1, 2));
  CHECK_THROWS_AS(gen_bernoulli(0, chi4), PreconditionError);
}

TEST_CASE("Kronecker symbol matches Euler's criterion") {
  for (long p : {3L, 5L, 7L, 11L, 13L, 101L})
    for (long a = -30; a <= 30; ++a) CHECK(kronecker_symbol(a, p) == legendre_euler(a, p));
  const DirichletChar chi8 = DirichletChar::kronecker(-8);
  for (long n = 1; n < 64; n += 2) {
    const long r = n % 8;
    CHECK(chi8(n) == ((r == 1 || r == 3) ? 1 : -1));
  }
  CHECK(chi8.parity() == -1);
  CHECK(DirichletChar::kronecker(-4).conductor() == 4);
}

TEST_CASE("p-adic valuations") {
  CHECK(padic_valuation(Rational(0), 5) == std::nullopt);
  CHECK(padic_valuation(Rational(50, 3), 5) == 2L);
  CHECK(padic_valuation(Rational(3, 125), 5) == -3L);
  CHECK(padic_valuation(bernoulli_number(32), 37) == 1L);
}

TEST_CASE("cache: concurrent readers agree and seeding is validated") {
  BernoulliCache cache;
  std::vector<Rational> got(8);
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < 8; ++i) pool.emplace_back([&, i] { got[i] = cache.get(40 + 7 * i); });
  for (auto& t : pool) t.join();
  for (unsigned i = 0; i < 8; ++i) CHECK(got[i] == bernoulli_number(40 + 7 * i));

  auto prefix = cache.snapshot();
  BernoulliCache fresh;
  CHECK(fresh.seed(prefix));
  CHECK(fresh.get(30) == bernoulli_number(30));
  prefix[10] += Rational(1);
  BernoulliCache bad;
  CHECK_FALSE(bad.seed(prefix));
  CHECK(bad.size() == 0);
}
