#include <doctest.h>

#include <algorithm>

#include "soule/errors.hpp"
#include "soule/padic.hpp"

using namespace soule;

namespace {

bool contains(const std::vector<unsigned long>& xs, unsigned long x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); }

const PaperClaim* claim(const std::vector<PaperClaim>& cs, const std::string& id) {
  for (const auto& c : cs)
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("Kubota-Leopoldt values at negative integers") {
  const DirichletChar triv = DirichletChar::trivial();
  for (long p : {5L, 7L, 13L}) CHECK(lp_at_negative(1, triv, p).value.is_zero());
  CHECK(lp_at_negative(2, triv, 5).value == Rational(1, 3));
  const LpValue v = lp_at_negative(7, DirichletChar::kronecker(-4), 61);
  CHECK(v.value == -(Rational(1) - pow(Rational(61), 6)) * Rational(427, 2) / Rational(7));
  CHECK(*padic_valuation(v.value, 61) >= 1);
  for (unsigned long m = 3; m <= 99; m += 2) CHECK(lp_at_negative(m, triv, 7).value.is_zero());
  CHECK_THROWS_AS(lp_at_negative(3, DirichletChar::kronecker(-4), 2), PreconditionError);
  CHECK_THROWS_AS(lp_at_negative(0, triv, 5), PreconditionError);
}

TEST_CASE("factorization scalars") {
  const QuadField& gauss = QuadField::get(4);
  const FactorizationScalar a2 = factorization_scalar(gauss, 5, 2);
  CHECK(a2.coefficient == Rational(-2));
  CHECK(a2.euler_ratio == Rational(6));
  CHECK(a2.parity == Parity::even);
  const FactorizationScalar a7 = factorization_scalar(gauss, 61, 7);
  CHECK(a7.coefficient == Rational(-12) * Rational(427, 2) / Rational(7));
  CHECK(padic_valuation(a7.coefficient, 61) == 1L);
  CHECK(a7.parity == Parity::odd);
  CHECK_THROWS_AS(factorization_scalar(gauss, 7, 2), NotSplitError);
  CHECK_THROWS_AS(factorization_scalar(gauss, 5, 1), PreconditionError);
}

TEST_CASE("parity dispatch never reads the other family") {
  FamilyReads even, odd;
  for (long d : {3L, 4L, 8L})
    for (unsigned long m = 2; m <= 40; m += 2) factorization_scalar(QuadField::get(d), d == 8 ? 11 : (d == 3 ? 7 : 5), m, &even);
  for (long d : {3L, 4L, 8L})
    for (unsigned long m = 3; m <= 41; m += 2) factorization_scalar(QuadField::get(d), d == 8 ? 11 : (d == 3 ? 7 : 5), m, &odd);
  CHECK(even.bernoulli == 60);
  CHECK(even.generalized == 0);
  CHECK(odd.generalized == 60);
  CHECK(odd.bernoulli == 0);
}

TEST_CASE("Euler ratio is 1 + p^{m-1} and a p-adic unit") {
  for (unsigned long m = 2; m <= 20; ++m) {
    const FactorizationScalar s = factorization_scalar(QuadField::get(4), 13, m);
    CHECK(s.euler_ratio == Rational(1) + pow(Rational(13), m - 1));
    CHECK(padic_valuation(s.euler_ratio, 13) == 0L);
  }
}

TEST_CASE("valuation of the scalar tracks the Bernoulli family") {
  for (long d : {3L, 4L, 8L})
    for (long p = 5; p <= 100; ++p) {
      if (!is_prime(p) || d % p == 0 || !is_split(QuadField::get(d), p)) continue;
      const QuadField& k = QuadField::get(d);
      for (unsigned long m = 2; m <= static_cast<unsigned long>(p - 2); ++m) {
        const FactorizationScalar s = factorization_scalar(k, p, m);
        const Rational fam = m % 2 == 0 ? bernoulli_number(m) : gen_bernoulli(m, k.chi());
        const Valuation lhs = padic_valuation(s.coefficient * s.euler_ratio, p);
        const Valuation vf = padic_valuation(fam, p);
        REQUIRE(lhs.has_value());
        REQUIRE(vf.has_value());
        CHECK(*lhs == *vf - *padic_valuation(Rational(static_cast<long>(m)), p));
      }
    }
}

TEST_CASE("exceptional cases follow von Staudt-Clausen and the Carlitz congruence") {
  for (auto [d, p] : {std::pair{4L, 5L}, std::pair{4L, 13L}, std::pair{3L, 7L}, std::pair{3L, 13L}, std::pair{8L, 11L}}) {
    const QuadField& k = QuadField::get(d);
    for (unsigned long j = 1; j <= static_cast<unsigned long>(p) + 1; ++j) {
      const unsigned long m0 = j * static_cast<unsigned long>(p - 1);
      const ExceptionalCase e0 = exceptional_valuation(k, p, m0);
      CHECK(e0.kind == "m = 0 mod p-1");
      CHECK(e0.predicted == -(e0.n + 1));
      CHECK_MESSAGE(e0.agree, "d=" << d << " p=" << p << " m=" << m0);
      const ExceptionalCase e1 = exceptional_valuation(k, p, m0 + 1);
      CHECK(e1.kind == "m = 1 mod p-1");
      CHECK_MESSAGE(e1.agree, "d=" << d << " p=" << p << " m=" << m0 + 1);
    }
  }
  // m = p(p-1) has v_p(m) = 1, so the prediction is -2.
  const ExceptionalCase e = exceptional_valuation(QuadField::get(4), 5, 20);
  CHECK(e.n == 1);
  CHECK(e.computed == -2L);
  CHECK_THROWS_AS(exceptional_valuation(QuadField::get(4), 5, 6), PreconditionError);
}

TEST_CASE("criterion verdicts") {
  const QuadField& gauss = QuadField::get(4);
  CHECK(criterion_check(gauss, 13).verdict);
  const CriterionVerdict v61 = criterion_check(gauss, 61);
  CHECK_FALSE(v61.verdict);
  CHECK(v61.witnesses == std::vector<unsigned long>{7});
  CHECK(v61.fails_odd());
  CHECK_FALSE(v61.fails_even());
  const CriterionVerdict v37 = criterion_check(gauss, 37);
  CHECK(v37.fails_even());
  CHECK(contains(v37.witnesses, 32));
  const CriterionVerdict v23 = criterion_check(QuadField::get(8), 23);
  CHECK(v23.status == SplitStatus::inert);
  CHECK(contains(v23.witnesses, 11));
  CHECK(criterion_check(QuadField::get(7), 7).status == SplitStatus::ramified);
  CHECK_THROWS_AS(criterion_check(gauss, 3), PreconditionError);
}

TEST_CASE("criterion table covers exactly m in [1, p-2]") {
  for (long p : {5L, 13L, 61L}) {
    const CriterionVerdict v = criterion_check(QuadField::get(4), p);
    CHECK(v.table.size() == static_cast<std::size_t>(p - 2));
    for (const auto& e : v.table) {
      CHECK(e.m <= static_cast<unsigned long>(p - 2));
      if (e.m >= 2) CHECK((e.family == Family::bernoulli) == (e.m % 2 == 0));
    }
    CHECK(v.verdict == v.witnesses.empty());
  }
}

TEST_CASE("even-family failures are exactly the irregular primes below 100") {
  const std::vector<long> irregular{37, 59, 67};
  for (const auto& v : scan_primes(QuadField::get(19), 100, 4)) {
    const bool expected = std::find(irregular.begin(), irregular.end(), v.p) != irregular.end();
    CHECK_MESSAGE(v.fails_even() == expected, "p = " << v.p);
  }
}

TEST_CASE("scans and published lists") {
  CHECK(scan_primes(QuadField::get(4), 3).empty());
  CHECK_THROWS_AS(scan_primes(QuadField::get(4), 10001), PreconditionError);

  const auto a = scan_primes(QuadField::get(4), 70, 1);
  const auto b = scan_primes(QuadField::get(4), 70, 7);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].witnesses == b[i].witnesses);

  const auto qi = example_claims(QuadField::get(4), a);
  CHECK(qi.size() == 4);
  for (const auto& c : qi) CHECK_MESSAGE(c.agree, c.id);

  const auto q2 = example_claims(QuadField::get(8), scan_primes(QuadField::get(8), 50));
  for (long p : {7L, 31L, 47L}) {
    const auto* c = claim(q2, "Q(sqrt-2) listed prime " + std::to_string(p) + " is split");
    REQUIRE(c);
    CHECK_FALSE(c->agree);
  }
  for (long p : {17L, 41L}) CHECK(claim(q2, "Q(sqrt-2) listed prime " + std::to_string(p) + " is split")->agree);
  CHECK(claim(q2, "Q(sqrt-2) 23 | B_{11,chi_K}")->agree);

  const auto q3 = example_claims(QuadField::get(3), scan_primes(QuadField::get(3), 110, 4));
  const auto* reg = claim(q3, "Q(sqrt-3) 103 is regular");
  REQUIRE(reg);
  CHECK_FALSE(reg->agree);
  CHECK(reg->computed == "103 | B_m for m = 24");
}
