#include "soule/padic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

#include "soule/errors.hpp"

namespace soule {

namespace {

constexpr long kMaxScanPrime = 10000;

Rational p_power(long p, unsigned long e) { return pow(Rational(p), e); }

std::string join(const std::vector<unsigned long>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i];
  return os.str();
}

std::string join(const std::vector<long>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i];
  return os.str();
}

std::string valuation_str(const Valuation& v) { return v ? std::to_string(*v) : "inf"; }

const CriterionVerdict* find_prime(const std::vector<CriterionVerdict>& scan, long p) {
  for (const auto& v : scan)
    if (v.p == p) return &v;
  return nullptr;
}

long scan_max(const std::vector<CriterionVerdict>& scan) { return scan.empty() ? 0 : scan.back().p; }

std::vector<long> passing_split(const std::vector<CriterionVerdict>& scan, long bound) {
  std::vector<long> out;
  for (const auto& v : scan)
    if (v.p <= bound && v.status == SplitStatus::split && v.verdict) out.push_back(v.p);
  return out;
}

std::string describe(const CriterionVerdict& v) {
  std::ostringstream os;
  os << to_string(v.status) << ", " << (v.verdict ? "passes" : "fails");
  if (!v.witnesses.empty()) os << " at m = " << join(v.witnesses);
  return os.str();
}

void imaginary_gaussian_claims(const std::vector<CriterionVerdict>& scan, std::vector<PaperClaim>& out) {
  const long top = scan_max(scan);
  if (top >= 53) {
    const std::vector<long> expected{5, 13, 17, 29, 41, 53};
    const auto computed = passing_split(scan, std::min(top, 60L));
    out.push_back({"Q(i) first passing split primes", join(expected), join(computed), computed == expected});
  }
  if (const auto* v = find_prime(scan, 37)) {
    out.push_back({"Q(i) 37 irregular", "split, fails in the even family", describe(*v),
                   v->status == SplitStatus::split && v->fails_even()});
  }
  if (const auto* v = find_prime(scan, 61)) {
    const bool has7 = std::find(v->witnesses.begin(), v->witnesses.end(), 7UL) != v->witnesses.end();
    out.push_back({"Q(i) 61 | B_{7,chi_K}", "split, regular, fails at odd m = 7", describe(*v),
                   v->status == SplitStatus::split && !v->fails_even() && has7});
    long first = 0;
    for (const auto& w : scan)
      if (w.status == SplitStatus::split && !w.fails_even() && w.fails_odd()) {
        first = w.p;
        break;
      }
    out.push_back({"Q(i) first regular split prime failing the criterion", "61", std::to_string(first), first == 61});
  }
}

void sqrt_minus_two_claims(const std::vector<CriterionVerdict>& scan, std::vector<PaperClaim>& out) {
  const long top = scan_max(scan);
  const std::vector<long> listed{7, 17, 31, 41, 47};
  if (top >= 47) {
    std::vector<long> computed = passing_split(scan, 47);
    out.push_back({"Q(sqrt-2) first primes satisfying the criterion", join(listed), join(computed), computed == listed});
  }
  for (long p : listed) {
    if (const auto* v = find_prime(scan, p))
      out.push_back({"Q(sqrt-2) listed prime " + std::to_string(p) + " is split", "split, passes", describe(*v),
                     v->status == SplitStatus::split && v->verdict});
  }
  if (const auto* v = find_prime(scan, 23)) {
    Valuation v11;
    for (const auto& e : v->table)
      if (e.m == 11) v11 = e.vp;
    out.push_back({"Q(sqrt-2) 23 | B_{11,chi_K}", "v_23(B_{11,chi_K}) >= 1",
                   "v_23 = " + valuation_str(v11) + "; " + describe(*v), !v11 || *v11 >= 1});
    out.push_back({"Q(sqrt-2) 23 is split", "split", to_string(v->status), v->status == SplitStatus::split});
  }
}

void sqrt_minus_three_claims(const std::vector<CriterionVerdict>& scan, std::vector<PaperClaim>& out) {
  if (const auto* v = find_prime(scan, 103)) {
    std::vector<unsigned long> even;
    for (const auto& e : v->table)
      if (e.family == Family::bernoulli && (!e.vp || *e.vp > 0)) even.push_back(e.m);
    out.push_back({"Q(sqrt-3) 103 is regular", "no even m <= 100 with 103 | B_m",
                   even.empty() ? "none" : "103 | B_m for m = " + join(even), even.empty()});
    long first = 0;
    for (const auto& w : scan)
      if (w.status == SplitStatus::split && !w.fails_even() && w.fails_odd()) {
        first = w.p;
        break;
      }
    out.push_back({"Q(sqrt-3) first regular split prime failing the criterion", "103",
                   first ? std::to_string(first) : "none up to " + std::to_string(scan_max(scan)), first == 103});
  }
}

}  // namespace

LpValue lp_at_negative(unsigned long m, const DirichletChar& chi, long p) {
  if (m == 0) throw PreconditionError("lp_at_negative: m must be positive");
  if (!is_prime(p)) throw PreconditionError("lp_at_negative: p must be prime");
  if (chi.conductor() % p == 0) throw PreconditionError("lp_at_negative: p divides the conductor");
  const Rational b = gen_bernoulli(m, chi);
  const Rational euler = Rational(1) - Rational(chi(p)) * p_power(p, m - 1);
  LpValue out;
  out.m = m;
  out.chi = chi;
  out.p = p;
  out.value = -euler * b / Rational(static_cast<long>(m));
  return out;
}

FactorizationScalar factorization_scalar(const QuadField& field, long p, unsigned long m, FamilyReads* reads) {
  if (m < 2) throw PreconditionError("factorization_scalar: m must be at least 2");
  if (!is_split(field, p)) throw NotSplitError(field.d_k(), p);
  FactorizationScalar out;
  const Rational mm(static_cast<long>(m));
  const long w = field.w_k();
  if (m % 2 == 0) {
    if (reads) ++reads->bernoulli;
    out.coefficient = Rational(-6 * w) * bernoulli_number(m) / mm;
    out.parity = Parity::even;
  } else {
    if (reads) ++reads->generalized;
    out.coefficient = Rational(-3 * w) * gen_bernoulli(m, field.chi()) / mm;
    out.parity = Parity::odd;
  }
  const Rational pm = p_power(p, m - 1);
  out.euler_ratio = (Rational(1) - pm * pm) / (Rational(1) - pm);
  return out;
}

ExceptionalCase exceptional_valuation(const QuadField& field, long p, unsigned long m) {
  if (m < 2) throw PreconditionError("exceptional_valuation: m must be at least 2");
  if (!is_split(field, p)) throw NotSplitError(field.d_k(), p);
  const unsigned long r = m % static_cast<unsigned long>(p - 1);
  if (r > 1) throw PreconditionError("exceptional_valuation: m must be 0 or 1 mod p-1");
  ExceptionalCase out;
  out.m = m;
  out.p = p;
  out.n = *padic_valuation(Rational(static_cast<long>(m)), p);
  if (r == 0) {
    out.kind = "m = 0 mod p-1";
    const FactorizationScalar s = factorization_scalar(field, p, m);
    out.computed = padic_valuation(s.coefficient * s.euler_ratio, p);
    out.predicted = -(out.n + 1);
    out.agree = out.computed && *out.computed == out.predicted;
  } else {
    out.kind = "m = 1 mod p-1";
    out.computed = padic_valuation(gen_bernoulli(m, field.chi()) / Rational(static_cast<long>(m)), p);
    out.predicted = 1;
    out.agree = !out.computed || *out.computed >= out.predicted;
  }
  return out;
}

const char* to_string(SplitStatus s) {
  switch (s) {
    case SplitStatus::split: return "split";
    case SplitStatus::inert: return "inert";
    case SplitStatus::ramified: return "ramified";
  }
  return "?";
}

const char* to_string(Family f) { return f == Family::bernoulli ? "B_m" : "B_{m,chi_K}"; }

SplitStatus split_status(const QuadField& field, long p) {
  if (field.d_k() % p == 0) return SplitStatus::ramified;
  return kronecker_chi(field, p) == 1 ? SplitStatus::split : SplitStatus::inert;
}

bool CriterionVerdict::fails_even() const {
  for (const auto& e : table)
    if (e.family == Family::bernoulli && (!e.vp || *e.vp > 0)) return true;
  return false;
}

bool CriterionVerdict::fails_odd() const {
  for (const auto& e : table)
    if (e.family == Family::generalized && (!e.vp || *e.vp > 0)) return true;
  return false;
}

CriterionVerdict criterion_check(const QuadField& field, long p) {
  if (p < 5 || !is_prime(p)) throw PreconditionError("criterion_check: p must be a prime >= 5");
  CriterionVerdict out;
  out.d_k = field.d_k();
  out.p = p;
  out.status = split_status(field, p);
  auto add = [&](unsigned long m, Family family, Rational value) {
    CriterionEntry e{m, family, std::move(value), {}};
    e.vp = padic_valuation(e.value, p);
    if (!e.vp || *e.vp > 0) out.witnesses.push_back(m);
    out.table.push_back(std::move(e));
  };
  add(1, Family::generalized, gen_bernoulli(1, field.chi()));
  for (unsigned long m = 2; m <= static_cast<unsigned long>(p - 2); ++m) {
    if (m % 2 == 0) {
      if (m <= static_cast<unsigned long>(p - 3)) add(m, Family::bernoulli, bernoulli_number(m));
    } else {
      add(m, Family::generalized, gen_bernoulli(m, field.chi()));
    }
  }
  out.verdict = out.witnesses.empty();
  return out;
}

std::vector<CriterionVerdict> scan_primes(const QuadField& field, long p_max, unsigned jobs) {
  if (p_max > kMaxScanPrime)
    throw PreconditionError("scan_primes: p_max must be at most " + std::to_string(kMaxScanPrime));
  std::vector<long> primes;
  for (long p = 5; p <= p_max; ++p)
    if (is_prime(p)) primes.push_back(p);
  std::vector<CriterionVerdict> out(primes.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(primes.size())));
  std::vector<std::exception_ptr> errors(primes.size());
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers && !primes.empty(); ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < primes.size(); i += workers) {
        try {
          out[i] = criterion_check(field, primes[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<PaperClaim> example_claims(const QuadField& field, const std::vector<CriterionVerdict>& scan) {
  std::vector<PaperClaim> out;
  switch (field.d_k()) {
    case 4: imaginary_gaussian_claims(scan, out); break;
    case 8: sqrt_minus_two_claims(scan, out); break;
    case 3: sqrt_minus_three_claims(scan, out); break;
    default: break;
  }
  return out;
}

}  // namespace soule
