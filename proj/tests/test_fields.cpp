#include <doctest.h>

#include <random>

#include "soule/bernoulli.hpp"
#include "soule/errors.hpp"
#include "soule/fields.hpp"

using namespace soule;

namespace {

bool has_root_mod(long t, long n, long p) {
  for (long x = 0; x < p; ++x)
    if (((x * x - t * x + n) % p + p) % p == 0) return true;
  return false;
}

}  // namespace

TEST_CASE("arithmetic in O_K matches the complex embedding") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-40, 40);
  for (long d : QuadField::discriminants()) {
    const QuadField& k = QuadField::get(d);
    for (int it = 0; it < 50; ++it) {
      const OkElem x{coef(rng), coef(rng)}, y{coef(rng), coef(rng)};
      CHECK(k.norm(k.mul(x, y)) == k.norm(x) * k.norm(y));
      const Complex prod = k.embed(x, 128) * k.embed(y, 128);
      CHECK(abs(prod - k.embed(k.mul(x, y), 128)).to_double() < 1e-25);
      CHECK(k.mul(x, k.conj(x)) == OkElem{k.norm(x), 0});
    }
  }
}

TEST_CASE("omega satisfies its minimal polynomial") {
  for (long d : QuadField::discriminants()) {
    const QuadField& k = QuadField::get(d);
    const Complex w = k.omega(200);
    const Complex r = w * w - w * Real(k.trace_omega(), 200) + Complex(k.norm_omega(), 0, 200);
    CHECK(abs(r).to_double() < 1e-50);
    CHECK(w.im().sign() > 0);
  }
}

TEST_CASE("splitting agrees with roots of the minimal polynomial") {
  for (long d : QuadField::discriminants()) {
    const QuadField& k = QuadField::get(d);
    for (long p = 5; p < 400; ++p) {
      if (!is_prime(p) || d % p == 0) continue;
      CHECK_MESSAGE(is_split(k, p) == has_root_mod(k.trace_omega(), k.norm_omega(), p), "d = " << d << ", p = " << p);
    }
  }
  CHECK_THROWS_AS(is_split(QuadField::get(7), 7), RamifiedError);
  CHECK_THROWS_AS(is_split(QuadField::get(4), 3), PreconditionError);
  CHECK_THROWS_AS(is_split(QuadField::get(4), 9), PreconditionError);
}

TEST_CASE("find_split returns a generator of norm p and its conjugate") {
  const SplitPrimeData a = find_split(QuadField::get(4), 5);
  CHECK(a.pi == OkElem{2, 1});
  CHECK(a.pi_bar == OkElem{2, -1});
  const SplitPrimeData b = find_split(QuadField::get(3), 7);
  CHECK(b.pi == OkElem{2, 1});
  for (long d : QuadField::discriminants()) {
    const QuadField& k = QuadField::get(d);
    for (long p = 5; p < 200; ++p) {
      if (!is_prime(p) || d % p == 0 || !is_split(k, p)) continue;
      const SplitPrimeData s = find_split(k, p);
      CHECK(k.norm(s.pi) == p);
      CHECK(s.pi_bar == k.conj(s.pi));
    }
  }
  CHECK_THROWS_AS(find_split(QuadField::get(4), 7), NotSplitError);
}

TEST_CASE("unit groups") {
  for (long d : QuadField::discriminants()) {
    const QuadField& k = QuadField::get(d);
    CHECK(static_cast<long>(k.units().size()) == k.w_k());
    for (const auto& u : k.units()) CHECK(k.norm(u) == 1);
  }
  CHECK(QuadField::get(3).w_k() == 6);
  CHECK(QuadField::get(4).w_k() == 4);
}

TEST_CASE("modular arithmetic") {
  const QuadField& k = QuadField::get(8);
  const OkElem x{3, 5};
  OkElem acc{1, 0};
  for (int e = 0; e < 9; ++e) acc = k.mul_mod(acc, x, 121);
  CHECK(acc == k.pow_mod(x, 9, 121));
  CHECK(k.norm_mod(x, 121) == k.norm(x) % 121);
}

TEST_CASE("Gauss sum equals -i sqrt(d_K)") {
  for (long d : QuadField::discriminants()) {
    const GaussSum g = gauss_sum(QuadField::get(d), 256);
    CHECK(g.predicted_sign == -1);
    CHECK(abs(g.value - g.predicted).to_double() < 1e-60);
    CHECK(g.value.re().to_double() == doctest::Approx(0.0));
  }
  CHECK_THROWS_AS(gauss_sum(QuadField::get(4), 32), PreconditionError);
}

TEST_CASE("kronecker_chi is the character of discriminant -d_K") {
  for (long d : QuadField::discriminants()) {
    const QuadField& k = QuadField::get(d);
    for (long n = -50; n <= 50; ++n) CHECK(kronecker_chi(k, n) == kronecker_symbol(-d, n));
  }
}
