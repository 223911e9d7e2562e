// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "soule/bernoulli.hpp"
#include "soule/errors.hpp"
#include "soule/fields.hpp"
#include "soule/group_ring.hpp"
#include "soule/lattice.hpp"
#include "soule/padic.hpp"
#include "soule/report.hpp"
#include "soule/verify.hpp"

using namespace soule;

namespace {

const PrecisionSpec kPrec{256, 32};

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string sci(const Real& x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x.to_double());
  return buf;
}

long ipow(long p, int n) {
  long r = 1;
  while (n-- > 0) r *= p;
  return r;
}

const PaperClaim* find_claim(const std::vector<PaperClaim>& cs, const std::string& id) {
  for (const auto& c : cs)
    if (c.id == id) return &c;
  return nullptr;
}

// Numeric reports: every one must pass; the worst scaled error goes into the summary.
void numeric(Outcome& o, Real& worst, const VerificationReport& r, const std::string& tag) {
  o.require(r.pass && r.exact_ok, tag + " failed (" + sci(r.max_abs_diff) + ")");
  if (r.max_abs_diff > worst) worst = r.max_abs_diff;
}

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_s > 0 && secs > budget_s) o.require(false, "runtime over " + std::to_string(budget_s) + " s");
  if (!o.pass) ++failures;
  std::printf("[%s] %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str(), secs);
  std::fflush(stdout);
}

const Real kTol = pow2(-(kPrec.bits - 64), kPrec.working());

}  // namespace

int main() {
  criterion(1, "B_{7,chi_-4} = 427/2 and v_61 = 1", 1.0, [] {
    Outcome o;
    const Rational b = gen_bernoulli(7, DirichletChar::kronecker(-4));
    o.require(b == Rational(427, 2), "value " + b.str());
    o.require(padic_valuation(b, 61) == 1L, "v_61 != 1");
    if (o.pass) o.detail = "exact";
    return o;
  });

  criterion(2, "criterion tables and published lists", 30.0, [] {
    Outcome o;
    const auto qi = scan_primes(QuadField::get(4), 70, 4);
    std::vector<long> passing;
    for (const auto& v : qi)
      if (v.status == SplitStatus::split && v.verdict) passing.push_back(v.p);
    o.require(passing == std::vector<long>{5, 13, 17, 29, 41, 53}, "Q(i) pass set differs");
    for (const auto& v : qi) {
      if (v.p == 37) o.require(v.fails_even(), "37 does not fail in the even family");
      if (v.p == 61) {
        o.require(v.fails_odd() && !v.fails_even(), "61 does not fail in the odd family only");
        o.require(v.witnesses == std::vector<unsigned long>{7}, "61 witness is not m = 7");
      }
    }
    for (const auto& c : example_claims(QuadField::get(4), qi)) o.require(c.agree, "claim differs: " + c.id);

    const auto q2 = example_claims(QuadField::get(8), scan_primes(QuadField::get(8), 50, 4));
    const auto* b11 = find_claim(q2, "Q(sqrt-2) 23 | B_{11,chi_K}");
    o.require(b11 && b11->agree, "23 does not divide B_{11,chi}");
    const CriterionVerdict v23 = criterion_check(QuadField::get(8), 23);
    o.require(v23.witnesses == std::vector<unsigned long>{11}, "23 does not fail exactly at m = 11");
    int flags = 0;
    for (long p : {7L, 31L, 47L}) {
      const auto* c = find_claim(q2, "Q(sqrt-2) listed prime " + std::to_string(p) + " is split");
      if (c && !c->agree) ++flags;
    }
    o.require(flags == 3, "split-status flags for 7/31/47 missing");

    const auto q3 = example_claims(QuadField::get(3), scan_primes(QuadField::get(3), 110, 4));
    const auto* r103 = find_claim(q3, "Q(sqrt-3) 103 is regular");
    o.require(r103 && !r103->agree, "regularity flag for 103 missing");
    if (o.pass) o.detail = "Q(i) {5,13,17,29,41,53}; 37 even; 61 at m = 7; 23 at m = 11; 4 discrepancy flags reported";
    return o;
  });

  criterion(3, "Kersey regulator identity", 300.0, [] {
    Outcome o;
    Real worst(0L, kPrec.working());
    for (auto [d, p, n] : {std::tuple{4L, 5L, 1}, std::tuple{3L, 7L, 1}, std::tuple{8L, 11L, 1}})
      numeric(o, worst, verify_kersey(QuadField::get(d), p, n, kPrec, 4),
              "(" + std::to_string(d) + "," + std::to_string(p) + "," + std::to_string(n) + ")");
    if (o.pass) o.detail = "max error " + sci(worst) + ", tolerance " + sci(kTol);
    return o;
  });

  criterion(4, "Kersey multiplicative identity and regrouping", 300.0, [] {
    Outcome o;
    Real worst(0L, kPrec.working());
    for (long c : {1L, 2L, 3L, 4L}) numeric(o, worst, verify_kersey_mult(QuadField::get(4), 5, 1, c, 9, kPrec), "c=" + std::to_string(c));
    numeric(o, worst, verify_kersey_mult(QuadField::get(3), 7, 1, 2, 4, kPrec), "(3,7,1,2,4)");
    long mismatches = 0;
    for (auto [d, p, n] : {std::tuple{4L, 5L, 1}, std::tuple{3L, 7L, 1}}) mismatches += regrouping_mismatches(QuadField::get(d), p, n);
    o.require(mismatches == 0, std::to_string(mismatches) + " regrouping mismatches");
    if (o.pass) o.detail = "max error " + sci(worst) + ", tolerance " + sci(kTol) + ", 0 regrouping mismatches";
    return o;
  });

  criterion(5, "nu and Kersey exponents are integers", 0, [] {
    Outcome o;
    long checked = 0, violations = 0;
    for (long d : QuadField::discriminants()) {
      const QuadField& k = QuadField::get(d);
      for (long p = 5; p <= 13; ++p) {
        if (!is_prime(p) || d % p == 0 || !is_split(k, p)) continue;
        for (int n : {1, 2}) {
          const long pn = ipow(p, n), m = d * pn;
          for (long c = 1; c < pn; ++c) {
            if (c % p == 0) continue;
            for (long b = 0; b < m; ++b) {
              ++checked;
              try {
                if (!nu_exponent(k, p, n, c, b).is_integer()) ++violations;
              } catch (const IntegralityError&) {
                ++violations;
              }
            }
          }
          int used = 0;
          for (long na = 2; na < 80 && used < 2; ++na) {
            if (kronecker_chi(k, na) != 1 || std::gcd(na, d * p) != 1) continue;
            ++used;
            for (long b = 0; b < m; ++b) {
              ++checked;
              try {
                if (!kersey_exponent(k, p, n, na, b).is_integer()) ++violations;
              } catch (const IntegralityError&) {
                ++violations;
              }
            }
          }
        }
      }
    }
    o.require(violations == 0, std::to_string(violations) + " violations");
    o.detail = std::to_string(checked) + " values, " + std::to_string(violations) + " violations";
    return o;
  });

  criterion(6, "theta two-path, homogeneity, distribution, lift independence, Legendre", 0, [] {
    Outcome o;
    Real worst(0L, kPrec.working());
    for (auto [d, p, n] : {std::tuple{4L, 5L, 1}, std::tuple{3L, 7L, 1}, std::tuple{8L, 11L, 1}}) {
      const QuadField& k = QuadField::get(d);
      const std::string tag = "d=" + std::to_string(d);
      numeric(o, worst, verify_homogeneity(k, p, n, kPrec), "homogeneity " + tag);
      numeric(o, worst, verify_distribution(k, p, kPrec), "distribution " + tag);
      numeric(o, worst, verify_lift_independence(k, p, 2, kPrec), "lift " + tag);
    }
    if (o.pass) o.detail = "max error " + sci(worst) + ", tolerance " + sci(kTol);
    return o;
  });

  criterion(7, "theta_a quotient and product definitions", 0, [] {
    Outcome o;
    Real worst(0L, kPrec.working());
    numeric(o, worst, verify_theta_a(QuadField::get(4), {1, 1}, kPrec), "alpha = 1+i");
    numeric(o, worst, verify_theta_a(QuadField::get(4), {3, 0}, kPrec), "alpha = 3");
    if (o.pass) o.detail = "max error " + sci(worst) + ", tolerance " + sci(kTol);
    return o;
  });

  criterion(8, "factorization scalars, parity dispatch, exceptional valuations", 0, [] {
    Outcome o;
    const QuadField& gauss = QuadField::get(4);
    const FactorizationScalar a2 = factorization_scalar(gauss, 5, 2);
    o.require(a2.coefficient == Rational(-2), "A_2 = " + a2.coefficient.str());
    for (long p : {5L, 13L, 17L})
      for (unsigned long m = 2; m <= 12; ++m)
        o.require(factorization_scalar(gauss, p, m).euler_ratio == Rational(1) + pow(Rational(p), m - 1),
                  "Euler ratio at p=" + std::to_string(p) + " m=" + std::to_string(m));
    FamilyReads even, odd;
    for (unsigned long m = 2; m <= 40; m += 2) factorization_scalar(gauss, 13, m, &even);
    for (unsigned long m = 3; m <= 41; m += 2) factorization_scalar(gauss, 13, m, &odd);
    o.require(even.generalized == 0 && odd.bernoulli == 0, "cross-family reads");
    int cases = 0;
    for (auto [d, p] : {std::pair{4L, 5L}, std::pair{4L, 13L}, std::pair{3L, 7L}, std::pair{8L, 11L}})
      for (unsigned long j = 1; j <= 6; ++j) {
        const ExceptionalCase e = exceptional_valuation(QuadField::get(d), p, j * (p - 1));
        ++cases;
        o.require(e.agree && e.predicted == -(e.n + 1), "valuation at p=" + std::to_string(p) + " m=" + std::to_string(e.m));
      }
    if (o.pass)
      o.detail = "A_2 = -2; cross-family reads 0/" + std::to_string(even.bernoulli + odd.generalized) + "; " +
                 std::to_string(cases) + " m = 0 mod p-1 valuations match";
    return o;
  });

  criterion(9, "norm-unit identities", 0, [] {
    Outcome o;
    Real worst(0L, kPrec.working());
    numeric(o, worst, verify_norm_unit_identities(QuadField::get(4), 5, 1, kPrec), "(4,5,1)");
    numeric(o, worst, verify_norm_unit_identities(QuadField::get(3), 7, 1, kPrec), "(3,7,1)");
    if (o.pass) o.detail = "max error " + sci(worst) + ", tolerance " + sci(kTol);
    return o;
  });

  criterion(10, "determinism across reruns, caches and worker counts", 0, [] {
    Outcome o;
    BernoulliCache fresh;
    for (unsigned long m = 0; m <= 200; ++m)
      if (fresh.get(m) != bernoulli_number(m)) o.require(false, "Bernoulli B_" + std::to_string(m));

    const QuadField& k = QuadField::get(8);
    series_cache().clear();
    const std::string cold = to_json(verify_kersey(k, 11, 1, kPrec, 1), false).dump();
    const std::string warm = to_json(verify_kersey(k, 11, 1, kPrec, 3), false).dump();
    const auto saved = series_cache().entries();
    series_cache().clear();
    series_cache().load(saved);
    const std::string reloaded = to_json(verify_kersey(k, 11, 1, kPrec, 2), false).dump();
    o.require(cold == warm && cold == reloaded, "verify report changed between runs");

    const auto lhs_a = kersey_lhs(k, 11, 1, kPrec, 1), lhs_b = kersey_lhs(k, 11, 1, kPrec, 5);
    for (const auto& [c, v] : lhs_a.coords) o.require(v.hex() == lhs_b.coords.at(c).hex(), "regulator bits differ at c=" + std::to_string(c));

    o.require(criterion_csv(scan_primes(QuadField::get(4), 100, 1)) == criterion_csv(scan_primes(QuadField::get(4), 100, 6)),
              "criterion scan depends on jobs");
    o.require(nu_csv(nu_tables(QuadField::get(4), 5, 2, 1)) == nu_csv(nu_tables(QuadField::get(4), 5, 2, 4)),
              "nu tables depend on jobs");

    Report r1("verify kersey", RunConfig{}), r2("verify kersey", RunConfig{});
    r1.add_result(to_json(verify_kersey(k, 11, 1, kPrec), false));
    r2.add_result(to_json(verify_kersey(k, 11, 1, kPrec), false));
    o.require(r1.to_json(false).dump() == r2.to_json(false).dump(), "report JSON differs");
    if (o.pass) o.detail = "bit-identical reports, Bernoulli tables, regulator vectors, scans and nu tables";
    return o;
  });

  std::printf("%s: %d of 10 criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
