#include "soule/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "soule/bernoulli.hpp"
#include "soule/errors.hpp"
#include "soule/group_ring.hpp"

namespace soule {

namespace {

using Clock = std::chrono::steady_clock;

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

bool less_elem(const OkElem& x, const OkElem& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); }

std::string fmt(const Real& x) { return x.str(40); }

std::string fmt(const Complex& z) {
  std::ostringstream os;
  os << z.re().str(30) << (z.im().sign() < 0 ? " - " : " + ") << abs(z.im()).str(30) << "i";
  return os.str();
}

void add_row(VerificationReport& r, std::string label, const Real& lhs, const Real& rhs, const Real& scale) {
  r.rows.push_back({std::move(label), fmt(lhs), fmt(rhs), abs(lhs - rhs), abs(scale)});
}

void add_row(VerificationReport& r, std::string label, const Complex& lhs, const Complex& rhs) {
  const Real scale = max(abs(lhs), abs(rhs));
  r.rows.push_back({std::move(label), fmt(lhs), fmt(rhs), abs(lhs - rhs), scale});
}

void begin(VerificationReport& r, std::string identity, const QuadField& field, const PrecisionSpec& precision) {
  r.identity = std::move(identity);
  r.parameters.emplace_back("d_K", std::to_string(field.d_k()));
  r.precision_bits = precision.bits;
  r.guard_bits = precision.guard;
}

void finish(VerificationReport& r, const PrecisionSpec& precision, Clock::time_point start) {
  judge(r, precision);
  r.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
}

long ipow(long p, int n) { return power_of(p, n); }

void require_split_level(const QuadField& field, long p, int n) {
  if (n < 1) throw PreconditionError("level n must be positive");
  if (!is_split(field, p)) throw NotSplitError(field.d_k(), p);
}

TorsionPoint add_points(const TorsionPoint& x, const TorsionPoint& y) { return {x.a1 + y.a1, x.a2 + y.a2}; }

TorsionPoint scale_point(const TorsionPoint& x, long k) { return {x.a1 * Rational(k), x.a2 * Rational(k)}; }

Real log_abs_theta(const LatticeBasis& lattice, const TorsionPoint& t) {
  return log_abs(theta_fundamental(lattice, t));
}

}  // namespace

void judge(VerificationReport& r, const PrecisionSpec& precision) {
  const long w = precision.working();
  Real worst(0L, w);
  for (const auto& row : r.rows) {
    const Real scaled = row.abs_diff / max(Real(1L, w), row.scale);
    if (scaled > worst) worst = scaled;
  }
  r.max_abs_diff = worst;
  r.tolerance = pow2(-(precision.bits - 64), w);
  r.pass = r.exact_ok && !r.rows.empty() && r.max_abs_diff <= r.tolerance;
}

TorsionPoint scale_torsion(const OkElem& x, long pn) {
  return TorsionPoint{Rational(x.b, pn), Rational(x.a, pn)}.canonical();
}

CmBasis cm_basis(const QuadField& field, long p, int n, bool swap) {
  require_split_level(field, p, n);
  SplitPrimeData sp = find_split(field, p);
  if (swap) std::swap(sp.pi, sp.pi_bar);
  const long pn = ipow(p, n);
  const long t = field.trace_omega(), nw = field.norm_omega();
  // omega -> r with pi(r) = 0 mod p, lifted to a root of X^2 - tX + n mod p^n.
  long r = mod(-sp.pi.a * inverse_mod(sp.pi.b, p), p);
  auto f = [&](long x, long m) {
    const __int128 v = static_cast<__int128>(x) * x - static_cast<__int128>(t) * x + nw;
    return static_cast<long>(((v % m) + m) % m);
  };
  if (f(r, p) != 0) throw SearchError("cm_basis: pi does not define a root of the minimal polynomial");
  for (int it = 0; it < 64 && f(r, pn) != 0; ++it) {
    const long deriv = mod(2 * r - t, pn);
    r = mod(r - static_cast<long>(static_cast<__int128>(f(r, pn)) * inverse_mod(deriv, pn) % pn), pn);
  }
  if (f(r, pn) != 0) throw SearchError("cm_basis: Hensel lifting failed");
  auto phi = [&](const OkElem& x) {
    return mod(static_cast<long>((static_cast<__int128>(x.a) + static_cast<__int128>(x.b) * r) % pn), pn);
  };
  const OkElem pibar_n = field.pow_mod(sp.pi_bar, static_cast<unsigned long>(n), pn);
  const long k = inverse_mod(phi(pibar_n), pn);
  const OkElem u = field.mul_mod(pibar_n, {k, 0}, pn);
  const OkElem one_minus_u = field.reduce({1 - u.a, -u.b}, pn);
  CmBasis out;
  out.d_k = field.d_k();
  out.p = p;
  out.n = n;
  out.split = sp;
  out.idempotent = u;
  out.omega_n = TorsionPoint{Rational(0), Rational(1, pn)};
  out.omega_p_n = scale_torsion(u, pn);
  out.omega_pbar_n = scale_torsion(one_minus_u, pn);
  return out;
}

std::vector<OkElem> unit_group(const QuadField& field, long p, int n) {
  const long pn = ipow(p, n);
  std::vector<OkElem> out;
  for (long x = 0; x < pn; ++x)
    for (long y = 0; y < pn; ++y)
      if (field.norm_mod({x, y}, pn) % p != 0) out.push_back({x, y});
  return out;
}

std::vector<OkElem> norm_kernel_transversal(const QuadField& field, long p, int n, bool alternate) {
  const long pn = ipow(p, n);
  std::set<std::pair<long, long>> reps;
  for (const auto& x : unit_group(field, p, n)) {
    if (field.norm_mod(x, pn) != 1 % pn) continue;
    OkElem best = field.reduce(x, pn);
    for (const auto& u : field.units()) {
      const OkElem y = field.mul_mod(u, x, pn);
      if (alternate ? less_elem(best, y) : less_elem(y, best)) best = y;
    }
    reps.emplace(best.a, best.b);
  }
  std::vector<OkElem> out;
  for (const auto& [a, b] : reps) out.push_back({a, b});
  return out;
}

OkElem norm_representative(const QuadField& field, long p, int n, long c) {
  const long pn = ipow(p, n);
  if (mod(c, p) == 0) throw PreconditionError("norm_representative: c must be prime to p");
  for (long x = 0; x < pn; ++x)
    for (long y = 0; y < pn; ++y)
      if (field.norm_mod({x, y}, pn) == mod(c, pn)) return {x, y};
  throw SearchError("norm_representative: no element of norm " + std::to_string(c) + " mod " + std::to_string(pn));
}

Real galois_orbit_theta(const QuadField& field, long p, int n, long c, PrecisionSpec precision,
                        const OrbitOptions& options) {
  require_split_level(field, p, n);
  const long pn = ipow(p, n);
  const LatticeBasis lattice = LatticeBasis::cm(field, precision, options.big_omega);
  const OkElem alpha = field.mul_mod(norm_representative(field, p, n, c), options.unit, pn);
  Real sum(0L, precision.working());
  for (const auto& beta : norm_kernel_transversal(field, p, n, options.alternate_transversal))
    sum += log_abs_theta(lattice, scale_torsion(field.mul_mod(beta, alpha, pn), pn));
  return sum * pn;
}

RegulatorVector kersey_lhs(const QuadField& field, long p, int n, PrecisionSpec precision, unsigned jobs) {
  require_split_level(field, p, n);
  const long pn = ipow(p, n);
  std::vector<long> cs;
  for (long c = 1; c < pn; ++c)
    if (c % p != 0) cs.push_back(c);
  std::vector<Real> values(cs.size(), Real(precision.working()));
  std::vector<std::exception_ptr> errors(cs.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(cs.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < cs.size(); i += workers) {
        try {
          values[i] = galois_orbit_theta(field, p, n, cs[i], precision);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  RegulatorVector out{pn, {}};
  for (std::size_t i = 0; i < cs.size(); ++i) out.coords.emplace(cs[i], values[i]);
  return out;
}

std::map<long, std::map<long, Rational>> kersey_rhs_weights(const QuadField& field, long p, int n) {
  require_split_level(field, p, n);
  const long pn = ipow(p, n);
  const long m = field.d_k() * pn;
  std::map<long, std::map<long, Rational>> out;
  for (long c = 1; c < pn; ++c) {
    if (c % p == 0) continue;
    auto& row = out[c];
    for (long b = 0; b < m; ++b) {
      Rational w(0);
      for (long a = 0; a < m; ++a) {
        if (mod(a * b - c, pn) != 0) continue;
        w += Rational(kronecker_chi(field, a) + kronecker_chi(field, b)) * bernoulli_b1(Rational(a, m));
      }
      w *= Rational(-3 * pn);
      if (w.is_zero()) continue;
      if (b == 0) throw IntegralityError(b, w.str(), "kersey_rhs: nonzero weight where 1 - zeta^b = 0");
      row.emplace(b, std::move(w));
    }
  }
  return out;
}

long regrouping_mismatches(const QuadField& field, long p, int n) {
  const auto weights = kersey_rhs_weights(field, p, n);
  const long m = field.d_k() * ipow(p, n);
  long bad = 0;
  for (const auto& [c, row] : weights)
    for (long b = 0; b < m; ++b) {
      auto it = row.find(b);
      const Rational w = it == row.end() ? Rational(0) : it->second;
      if (w != nu_exponent(field, p, n, c, b) / Rational(4)) ++bad;
    }
  return bad;
}

Real log_abs_one_minus_zeta(long b, long m, long precision_bits) {
  const Real s = sin(pi(precision_bits) * Real(Rational(mod(b, m), m), precision_bits));
  return log(abs(s) * 2);
}

RegulatorVector kersey_rhs(const QuadField& field, long p, int n, PrecisionSpec precision) {
  const long pn = ipow(p, n);
  const long m = field.d_k() * pn;
  const long w = precision.working();
  RegulatorVector out{pn, {}};
  for (const auto& [c, row] : kersey_rhs_weights(field, p, n)) {
    Real sum(0L, w);
    for (const auto& [b, weight] : row) sum += Real(weight, w) * log_abs_one_minus_zeta(b, m, w);
    out.coords.emplace(c, sum);
  }
  return out;
}

VerificationReport verify_kersey(const QuadField& field, long p, int n, PrecisionSpec precision, unsigned jobs) {
  const auto start = Clock::now();
  VerificationReport r;
  begin(r, "kersey", field, precision);
  r.parameters.emplace_back("p", std::to_string(p));
  r.parameters.emplace_back("n", std::to_string(n));
  const RegulatorVector lhs = kersey_lhs(field, p, n, precision, jobs);
  const RegulatorVector rhs = kersey_rhs(field, p, n, precision);
  Real scale(1L, precision.working());
  for (const auto& [c, v] : lhs.coords) scale = max(scale, abs(v));
  for (const auto& [c, v] : rhs.coords) scale = max(scale, abs(v));
  for (const auto& [c, v] : lhs.coords) add_row(r, "sigma_" + std::to_string(c), v, rhs.coords.at(c), scale);
  r.notes.push_back("norm kernel transversal size " +
                    std::to_string(norm_kernel_transversal(field, p, n).size()));
  const long bad = regrouping_mismatches(field, p, n);
  r.notes.push_back("exact regrouping mismatches against nu/4: " + std::to_string(bad));
  if (bad != 0) r.exact_ok = false;
  finish(r, precision, start);
  return r;
}

std::optional<OkElem> element_of_norm(const QuadField& field, long na) {
  if (na < 1) return std::nullopt;
  const long bound = 2 * static_cast<long>(std::ceil(std::sqrt(static_cast<double>(na)))) + 2;
  std::optional<OkElem> best;
  auto key = [](const OkElem& x) { return std::make_tuple(std::labs(x.b), std::labs(x.a), x.b < 0, x.a <= 0); };
  for (long b = -bound; b <= bound; ++b)
    for (long a = -bound; a <= bound; ++a) {
      const OkElem x{a, b};
      if (field.norm(x) == na && (!best || key(x) < key(*best))) best = x;
    }
  return best;
}

VerificationReport verify_kersey_mult(const QuadField& field, long p, int n, long c, long na,
                                      PrecisionSpec precision) {
  const auto start = Clock::now();
  require_split_level(field, p, n);
  if (mod(c, p) == 0) throw PreconditionError("kersey-mult: c must be prime to p");
  if (na < 2 || kronecker_chi(field, na) != 1 || std::gcd(na, field.d_k() * p) != 1)
    throw PreconditionError("kersey-mult: need Na > 1, chi_K(Na) = 1 and gcd(Na, d_K p) = 1");
  const auto alpha = element_of_norm(field, na);
  if (!alpha) throw PreconditionError("kersey-mult: no principal ideal of norm " + std::to_string(na));
  VerificationReport r;
  begin(r, "kersey-mult", field, precision);
  r.parameters.emplace_back("p", std::to_string(p));
  r.parameters.emplace_back("n", std::to_string(n));
  r.parameters.emplace_back("c", std::to_string(c));
  r.parameters.emplace_back("Na", std::to_string(na));
  r.parameters.emplace_back("alpha", field.format(*alpha));

  const long pn = ipow(p, n);
  const long m = field.d_k() * pn;
  const long w = precision.working();
  const long cc = mod(c, pn);

  // (i) fourth-power identity at sigma_c.
  const Real g_c = galois_orbit_theta(field, p, n, cc, precision);
  Real rhs_i(0L, w);
  for (long b = 0; b < m; ++b) {
    const Rational e = nu_exponent(field, p, n, cc, b);
    if (!e.is_zero()) rhs_i += Real(e, w) * log_abs_one_minus_zeta(b, m, w);
  }
  const Real lhs_i = g_c * 4;
  add_row(r, "(i) sigma_" + std::to_string(cc) + ": 4 log|N theta^{p^n}|", lhs_i, rhs_i, max(abs(lhs_i), abs(rhs_i)));

  // (ii) theta_a identity, left side through theta_a itself.
  const LatticeBasis lattice = LatticeBasis::cm(field, precision);
  Real log_norm(0L, w);
  for (const auto& beta : norm_kernel_transversal(field, p, n)) {
    const Complex z = scale_torsion(beta, pn).lift(lattice);
    log_norm += log_abs(theta_a(field, lattice, *alpha, z));
  }
  Real rhs_ii(0L, w);
  for (long b = 0; b < m; ++b) {
    const Rational e = kersey_exponent(field, p, n, na, b);
    if (!e.is_zero()) rhs_ii += Real(e, w) * log_abs_one_minus_zeta(b, m, w);
  }
  const Real lhs_ii = log_norm * 4;
  add_row(r, "(ii) 4 log|N theta_a(omega_n)|", lhs_ii, rhs_ii, max(abs(lhs_ii), abs(rhs_ii)));

  // The same norm through the Galois orbits: (Na G(1) - G(Na)) / p^n.
  const Real via_orbits =
      (galois_orbit_theta(field, p, n, 1, precision) * na - galois_orbit_theta(field, p, n, mod(na, pn), precision)) / pn;
  add_row(r, "log|N theta_a(omega_n)| via sigma_{Na}", log_norm, via_orbits, max(abs(log_norm), abs(via_orbits)));

  const long bad = regrouping_mismatches(field, p, n);
  r.notes.push_back("exact regrouping mismatches against nu/4: " + std::to_string(bad));
  if (bad != 0) r.exact_ok = false;
  finish(r, precision, start);
  return r;
}

VerificationReport verify_norm_unit_identities(const QuadField& field, long p, int n, PrecisionSpec precision) {
  const auto start = Clock::now();
  if (p < 5 || !is_prime(p) || n < 1) throw PreconditionError("norm-units: need a prime p >= 5 and n >= 1");
  if (field.d_k() % p == 0) throw RamifiedError(field.d_k(), p);
  VerificationReport r;
  begin(r, "norm-units", field, precision);
  r.parameters.emplace_back("p", std::to_string(p));
  r.parameters.emplace_back("n", std::to_string(n));
  const long w = precision.working();
  const long d = field.d_k();
  const long pn = ipow(p, n);
  const long m = d * pn;
  const long ell = field.ell();
  const long phi_d = d - d / ell;

  std::vector<long> h;
  for (long a = 1; a < m; ++a)
    if (a % pn == 1 % pn && std::gcd(a, m) == 1 && kronecker_chi(field, a) == 1) h.push_back(a);
  // iota: -1 mod d, 1 mod p^n.
  long a_iota = 0;
  for (long a = 1; a < m; ++a)
    if (mod(a + 1, d) == 0 && mod(a - 1, pn) == 0) a_iota = a;
  r.notes.push_back("|H| = " + std::to_string(h.size()) + ", a_iota = " + std::to_string(a_iota));

  const Complex one(Real(1L, w), Real(0L, w));
  auto zeta = [&](long k, long mod_) { return root_of_unity(Rational(mod(k, mod_), mod_), w); };
  auto norm_of = [&](long mult, bool minus_zeta_inverse) {
    Complex acc = one;
    for (long a : h) {
      const long k = static_cast<long>(static_cast<__int128>(a) * mult % m);
      acc *= minus_zeta_inverse ? -zeta(-k, m) : one - zeta(k, m);
    }
    return acc;
  };

  const Complex n1 = norm_of(1, false);
  const Complex n_iota = norm_of(a_iota, false);
  const long ell_inv = inverse_mod(ell, pn);
  const Complex rhs1 = (one - zeta(1, pn)) / (one - zeta(ell_inv, pn));
  add_row(r, "N(1-zeta) N(1-iota zeta) = (1-zeta_{p^n})/(1-zeta_{p^n}^{1/ell})", n1 * n_iota, rhs1);
  add_row(r, "iota applied twice", norm_of(static_cast<long>(static_cast<__int128>(a_iota) * a_iota % m), false), n1);

  const Complex v = norm_of(1, true);
  add_row(r, "|N(-zeta^{-1})| = 1", Complex(abs(v)), one);
  add_row(r, "N(-zeta^{-1})^{2 d_K p^n} = 1", pow(v, 2 * m), one);
  add_row(r, "N(-zeta^{-1})^{2 d_K} = zeta_{p^n}^{-phi(d_K)}", pow(v, 2 * d), zeta(-phi_d, pn));
  add_row(r, "N(1-zeta^{-1}) = N(-zeta^{-1}) N(1-zeta)", norm_of(m - 1, false), v * n1);

  // Exact form of the exponent: the mu_{p^n} part of N(-zeta^{-1}) is
  // zeta_{p^n}^{-sum(H)/d_K}, which must equal -phi(d_K)/(2 d_K) mod p^n.
  long sum_h = 0;
  for (long a : h) sum_h = mod(sum_h + a, pn);
  const long lhs_exp = mod(-sum_h * inverse_mod(d, pn), pn);
  const long rhs_exp = mod(-phi_d * inverse_mod(2 * d, pn), pn);
  r.notes.push_back("mu_{p^n} exponent of N(-zeta^{-1}): " + std::to_string(lhs_exp) + ", predicted -phi(d_K)/(2 d_K) = " +
                    std::to_string(rhs_exp) + " mod p^n");
  if (lhs_exp != rhs_exp) r.exact_ok = false;
  finish(r, precision, start);
  return r;
}

Real epsilon_log_ledger(const QuadField& field, long p, int n, unsigned long m1, unsigned long m2,
                        PrecisionSpec precision, const LedgerOptions& options) {
  if (m1 < 1 || m2 < 1) throw PreconditionError("epsilon ledger: m1, m2 must be positive");
  const CmBasis basis = cm_basis(field, p, n, options.swap);
  const LatticeBasis lattice = LatticeBasis::cm(field, precision, options.big_omega);
  const long pn = ipow(p, n);
  const long w = precision.working();
  Real sum(0L, w);
  for (long a = 0; a < pn; ++a)
    for (long b = 0; b < pn; ++b) {
      if (a % p == 0 && b % p == 0) continue;
      BigInt e1, e2;
      mpz_ui_pow_ui(e1.get_mpz_t(), static_cast<unsigned long>(a), m1 - 1);
      mpz_ui_pow_ui(e2.get_mpz_t(), static_cast<unsigned long>(b), m2 - 1);
      const TorsionPoint pt = add_points(scale_point(basis.omega_p_n, a), scale_point(basis.omega_pbar_n, b));
      sum += Real(BigInt(e1 * e2), w) * log_abs_theta(lattice, pt);
    }
  return sum;
}

VerificationReport verify_distribution(const QuadField& field, long p, PrecisionSpec precision) {
  const auto start = Clock::now();
  if (p < 5 || !is_prime(p)) throw PreconditionError("distribution: p must be a prime >= 5");
  VerificationReport r;
  begin(r, "distribution", field, precision);
  r.parameters.emplace_back("p", std::to_string(p));
  const LatticeBasis lattice = LatticeBasis::cm(field, precision);
  std::vector<std::pair<std::string, TorsionPoint>> points = {{"omega_2", {Rational(0), Rational(1, p * p)}}};
  if (field.d_k() % p != 0 && is_split(field, p)) points.emplace_back("omega_{p,2}", cm_basis(field, p, 2).omega_p_n);
  const long w = precision.working();
  for (const auto& [name, pt] : points) {
    Real lhs(0L, w);
    for (long i = 0; i < p; ++i)
      for (long j = 0; j < p; ++j) lhs += log_abs_theta(lattice, add_points(pt, {Rational(i, p), Rational(j, p)}));
    const Real rhs = log_abs_theta(lattice, scale_point(pt, p));
    add_row(r, "log|prod theta(" + name + " + P)| = log|theta(p " + name + ")|", lhs, rhs, max(abs(lhs), abs(rhs)));
  }
  finish(r, precision, start);
  return r;
}

VerificationReport verify_homogeneity(const QuadField& field, long p, int n, PrecisionSpec precision) {
  const auto start = Clock::now();
  VerificationReport r;
  begin(r, "homogeneity", field, precision);
  r.parameters.emplace_back("p", std::to_string(p));
  r.parameters.emplace_back("n", std::to_string(n));
  const long w = precision.working();
  const LatticeBasis lattice = LatticeBasis::cm(field, precision);
  std::mt19937_64 rng(0x5eed0000ULL + static_cast<unsigned long long>(field.d_k()));
  std::uniform_int_distribution<long> coord(1, 996);
  auto rational = [&] { return Rational(coord(rng), 997); };

  for (int k = 0; k < 3; ++k) {
    const TorsionPoint zp{rational(), rational()};
    const Complex z = zp.lift(lattice);
    const Complex c(Real(rational() * Rational(4) - Rational(2), w), Real(rational() * Rational(4) - Rational(2), w));
    const Complex lhs = theta_fundamental(lattice.scaled(c), c * z);
    add_row(r, "theta(cz, cL) = theta(z, L) #" + std::to_string(k + 1), lhs, theta_fundamental(lattice, z));
  }
  {
    const Complex z = TorsionPoint{rational(), rational()}.lift(lattice);
    const Complex base = theta_fundamental(lattice, z);
    for (const auto& u : field.units()) {
      if (u == OkElem{1, 0}) continue;
      add_row(r, "theta(u z, L) = theta(z, L), u = " + field.format(u),
              theta_fundamental(lattice, field.embed(u, w) * z), base);
    }
  }
  if (field.d_k() % p != 0 && is_split(field, p)) {
    const CmBasis basis = cm_basis(field, p, n);
    for (const auto& [name, pt] : std::vector<std::pair<std::string, TorsionPoint>>{
             {"omega_n", basis.omega_n}, {"omega_{p,n}", basis.omega_p_n}, {"omega_{pbar,n}", basis.omega_pbar_n}}) {
      const TorsionPoint c = pt.canonical();
      add_row(r, "definition = Siegel^12 at " + name, theta_fundamental(lattice, c.lift(lattice)),
              theta_siegel(lattice, c));
    }
  }
  {
    const Complex legendre = quasi_period(lattice, lattice.omega1()) * lattice.omega2() -
                             quasi_period(lattice, lattice.omega2()) * lattice.omega1();
    const Complex expected(Real(0L, w), -(pi(w) * 2));
    add_row(r, "Legendre: eta(w1) w2 - eta(w2) w1 = -2 pi i", legendre, expected);
  }
  finish(r, precision, start);
  return r;
}

VerificationReport verify_lift_independence(const QuadField& field, long p, int n, PrecisionSpec precision) {
  const auto start = Clock::now();
  VerificationReport r;
  begin(r, "lift-independence", field, precision);
  r.parameters.emplace_back("p", std::to_string(p));
  r.parameters.emplace_back("n", std::to_string(n));
  const CmBasis basis = cm_basis(field, p, n);
  const LatticeBasis lattice = LatticeBasis::cm(field, precision);
  const long w = precision.working();
  const long killing = 12 * field.d_k() * ipow(p, n);
  const Complex one(Real(1L, w), Real(0L, w));
  for (const auto& [name, pt] :
       std::vector<std::pair<std::string, TorsionPoint>>{{"omega_n", basis.omega_n}, {"omega_{p,n}", basis.omega_p_n}}) {
    const Complex z = pt.canonical().lift(lattice);
    const Complex base = theta_fundamental(lattice, z);
    for (const auto& [m1, m2] : std::vector<std::pair<long, long>>{{3, -2}, {-1, 5}}) {
      const Complex other = theta_fundamental(lattice, z + lattice.point(m1, m2));
      const std::string shift = "(" + std::to_string(m1) + "," + std::to_string(m2) + ")";
      add_row(r, "|theta| at " + name + " + " + shift, Complex(abs(other)), Complex(abs(base)));
      add_row(r, "ratio^{12 d_K p^n} at " + name + " + " + shift, pow(other / base, killing), one);
    }
  }
  finish(r, precision, start);
  return r;
}

VerificationReport verify_theta_a(const QuadField& field, const OkElem& alpha, PrecisionSpec precision) {
  const auto start = Clock::now();
  VerificationReport r;
  begin(r, "theta-a", field, precision);
  r.parameters.emplace_back("alpha", field.format(alpha));
  r.parameters.emplace_back("Na", std::to_string(field.norm(alpha)));
  const LatticeBasis lattice = LatticeBasis::cm(field, precision);
  std::mt19937_64 rng(0xa11a0000ULL + static_cast<unsigned long long>(field.norm(alpha)));
  std::uniform_int_distribution<long> coord(1, 1008);
  auto rational = [&] { return Rational(coord(rng), 1009); };
  std::size_t npoints = 0;
  for (int k = 0; k < 3; ++k) {
    const Complex z = TorsionPoint{rational(), rational()}.lift(lattice);
    const ThetaAPaths paths = theta_a_paths(field, lattice, alpha, z);
    npoints = paths.torsion_points;
    add_row(r, "quotient = product at z#" + std::to_string(k + 1), paths.quotient, paths.product);
    if (k == 0) {
      const ThetaAPaths shifted = theta_a_paths(field, lattice, alpha, z + lattice.omega1());
      add_row(r, "|theta_a(z + omega1)| = |theta_a(z)|", Complex(abs(shifted.quotient)), Complex(abs(paths.quotient)));
    }
  }
  r.notes.push_back("points of E[a] \\ O: " + std::to_string(npoints));
  finish(r, precision, start);
  return r;
}

}  // namespace soule
