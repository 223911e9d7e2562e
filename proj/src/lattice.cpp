#include "soule/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "soule/errors.hpp"

namespace soule {

namespace {

constexpr long kMaxTerms = 200000;
constexpr int kMaxReductionSteps = 10000;

Complex mul_i(const Complex& z) { return {-z.im(), z.re()}; }

/// e^{2 pi i x}.
Complex exp_2pi_i(const Complex& x) {
  const long w = x.precision();
  return exp(mul_i(x) * (pi(w) * 2));
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Rational bernoulli2(const Rational& x) { return x * x - x + Rational(1, 6); }

std::string cache_key(const std::string& what, const Complex& tau, long w) {
  return what + "|" + tau.re().hex() + "|" + tau.im().hex() + "|" + std::to_string(w);
}

std::optional<Complex> cache_find(const std::string& key, long w) {
  auto v = series_cache().find(key);
  if (!v) return std::nullopt;
  const auto comma = v->find(',');
  return Complex(Real::parse(v->substr(0, comma), w, 16), Real::parse(v->substr(comma + 1), w, 16));
}

void cache_store(const std::string& key, const Complex& z) {
  series_cache().store(key, z.re().hex() + "," + z.im().hex());
}

/// A lattice in reduced position together with its nome and per-tau series.
struct Frame {
  LatticeBasis basis;
  std::array<long, 4> matrix;
  long w;
  Complex q;
  double log2q;
  Complex g2;  // G2(tau)
};

/// Number of q-series terms for which |q|^n * 2^{extra} can still exceed 2^{-(W+8)}.
long term_bound(double log2q, double extra, long w) {
  const double n = (static_cast<double>(w) + 8.0 + std::max(0.0, extra)) / -log2q;
  const long terms = static_cast<long>(std::ceil(n)) + 1;
  if (terms > kMaxTerms) throw PrecisionError("q-series does not converge fast enough", w, 0.0);
  return std::max<long>(terms, 1);
}

Complex eisenstein_g2(const Complex& q, double log2q, long w) {
  // (pi^2/3)(1 - 24 sum n q^n/(1-q^n))
  const long terms = term_bound(log2q, std::log2(static_cast<double>(kMaxTerms)), w);
  Complex sum(w);
  Complex qn(Real(1, w), Real(0, w));
  const Complex one(Real(1, w), Real(0, w));
  for (long n = 1; n <= terms; ++n) {
    qn *= q;
    sum += qn / (one - qn) * Real(n, w);
  }
  const Real pi2 = pi(w) * pi(w) / 3;
  return (one - sum * Real(24, w)) * pi2;
}

Frame make_frame(const LatticeBasis& lattice) {
  ReducedBasis rb = reduce_basis(lattice);
  const long w = lattice.working_bits();
  const Complex& tau = rb.basis.tau();
  Complex q = exp_2pi_i(tau);
  const double log2q = -2.0 * std::numbers::pi * tau.im().to_double() / std::log(2.0);
  const std::string key = cache_key("G2", tau, w);
  Complex g2(w);
  if (auto hit = cache_find(key, w)) {
    g2 = *hit;
  } else {
    g2 = eisenstein_g2(q, log2q, w);
    cache_store(key, g2);
  }
  return Frame{rb.basis, rb.matrix, w, std::move(q), log2q, std::move(g2)};
}

double log2_abs_t(const Complex& u) {
  // |e^{2 pi i u}| = e^{-2 pi Im u}
  return -2.0 * std::numbers::pi * u.im().to_double() / std::log(2.0);
}

void require_off_lattice(const Frame& f, const Complex& z) {
  const LatticeBasis& b = f.basis;
  const Real det = (b.omega1() * conj(b.omega2())).im();
  const Real x1 = (z * conj(b.omega2())).im() / det;
  const Real x2 = (b.omega1() * conj(z)).im() / det;
  const long r1 = std::lround(x1.to_double()), r2 = std::lround(x2.to_double());
  Real best(-1L, f.w);
  for (long d1 = -1; d1 <= 1; ++d1)
    for (long d2 = -1; d2 <= 1; ++d2) {
      const Real dist = abs(z - b.point(r1 + d1, r2 + d2));
      if (best.sign() < 0 || dist < best) best = dist;
    }
  const Real tol = verification_tolerance(b.precision(), abs(b.omega2()));
  if (best <= tol)
    throw LatticePointError("argument is a lattice point", b.precision().bits, best.log2_abs());
}

/// prod_{n>=1} (1 - q^n t)(1 - q^n/t) / (1 - q^n)^2 and the matching loop for
/// the other series share this term count.
long product_terms(const Frame& f, const Complex& u) {
  return term_bound(f.log2q, std::fabs(log2_abs_t(u)), f.w);
}

/// sigma(u) for the lattice Z tau + Z.
Complex sigma_normalized(const Frame& f, const Complex& u) {
  const long w = f.w;
  const Complex one(Real(1, w), Real(0, w));
  const Complex t = exp_2pi_i(u);
  const Complex tinv = inverse(t);
  Complex prod = one;
  Complex qn = one;
  const long terms = product_terms(f, u);
  for (long n = 1; n <= terms; ++n) {
    qn *= f.q;
    const Complex den = one - qn;
    prod *= (one - qn * t) * (one - qn * tinv) / (den * den);
  }
  // sin(pi u)/pi = (e^{pi i u} - e^{-pi i u}) / (2 pi i)
  const Complex s = exp(mul_i(u) * pi(w));
  Complex sine = (s - inverse(s)) / mul_i(Complex(pi(w) * 2));
  const Complex gauss = exp(f.g2 * u * u * Real(Rational(1, 2), w));
  return gauss * sine * prod;
}

Complex delta_frame(const Frame& f) {
  const long w = f.w;
  const std::string key = cache_key("DeltaProduct", f.basis.tau(), w);
  Complex prod(w);
  if (auto hit = cache_find(key, w)) {
    prod = *hit;
  } else {
    const Complex one(Real(1, w), Real(0, w));
    Complex acc = one, qn = one;
    const long terms = term_bound(f.log2q, 0.0, w);
    for (long n = 1; n <= terms; ++n) {
      qn *= f.q;
      acc *= one - qn;
    }
    prod = f.q * pow(acc, 24);
    cache_store(key, prod);
  }
  const Complex c = Complex(pi(w) * 2) / f.basis.omega2();
  return pow(c, 12) * prod;
}

Real area_frame(const Frame& f) {
  return f.basis.tau().im() * norm(f.basis.omega2()) / pi(f.w);
}

Complex s2_frame(const Frame& f) {
  const Complex e2star = f.g2 - Complex(pi(f.w) / f.basis.tau().im());
  return e2star / (f.basis.omega2() * f.basis.omega2());
}

Complex eta_frame(const Frame& f, const Complex& z) {
  return conj(z) * (Real(1, f.w) / area_frame(f)) + s2_frame(f) * z;
}

Complex theta_definition(const Frame& f, const Complex& z) {
  require_off_lattice(f, z);
  const Complex u = z / f.basis.omega2();
  const Complex sigma = f.basis.omega2() * sigma_normalized(f, u);
  const Complex eta = eta_frame(f, z);
  return delta_frame(f) * exp(-(eta * z) * Real(6, f.w)) * pow(sigma, 12);
}

/// Siegel path at coordinates (a1, a2) of the reduced basis.
Complex theta_siegel_frame(const Frame& f, const Rational& a1, const Rational& a2) {
  const long w = f.w;
  const Complex one(Real(1, w), Real(0, w));
  const Complex& tau = f.basis.tau();
  const Complex u = tau * Real(a1, w) + Complex(Real(a2, w));
  const Complex t = exp_2pi_i(tau * Real(a1, w)) * root_of_unity(a2, w);
  const Complex tinv = inverse(t);
  Complex prod = one - t;
  Complex qn = one;
  const long terms = product_terms(f, u);
  for (long n = 1; n <= terms; ++n) {
    qn *= f.q;
    prod *= (one - qn * t) * (one - qn * tinv);
  }
  // -e^{pi i tau B2(a1)} e^{pi i a2 (a1 - 1)}
  const Complex lead = exp(mul_i(tau) * (pi(w) * Real(bernoulli2(a1), w)));
  const Complex phase = root_of_unity(a2 * (a1 - Rational(1)) / Rational(2), w);
  const Complex g = -(lead * phase * prod);
  return pow(g, 12);
}

Complex wp_normalized(const Frame& f, const Complex& u) {
  const long w = f.w;
  const Complex one(Real(1, w), Real(0, w));
  const Complex t = exp_2pi_i(u);
  const Complex tinv = inverse(t);
  auto sq = [](const Complex& x) { return x * x; };
  Complex sum = Complex(Real(Rational(1, 12), w)) + t / sq(one - t);
  Complex qn = one;
  const long terms = product_terms(f, u);
  for (long n = 1; n <= terms; ++n) {
    qn *= f.q;
    const Complex a = qn * t, b = qn * tinv;
    sum += a / sq(one - a) + b / sq(one - b) - qn / sq(one - qn) * Real(2, w);
  }
  const Complex two_pi_i = mul_i(Complex(pi(w) * 2));
  return two_pi_i * two_pi_i * sum;
}

Complex wp_prime_normalized(const Frame& f, const Complex& u) {
  const long w = f.w;
  const Complex one(Real(1, w), Real(0, w));
  auto fx = [&](const Complex& x) {
    const Complex d = one - x;
    return x * (one + x) / (d * d * d);
  };
  const Complex t = exp_2pi_i(u);
  const Complex tinv = inverse(t);
  Complex sum = fx(t);
  Complex qn = one;
  const long terms = product_terms(f, u);
  for (long n = 1; n <= terms; ++n) {
    qn *= f.q;
    sum += fx(qn * t) - fx(qn * tinv);
  }
  const Complex two_pi_i = mul_i(Complex(pi(w) * 2));
  return two_pi_i * two_pi_i * two_pi_i * sum;
}

Complex zeta_normalized(const Frame& f, const Complex& u) {
  const long w = f.w;
  const Complex one(Real(1, w), Real(0, w));
  const Complex t = exp_2pi_i(u);
  const Complex tinv = inverse(t);
  // pi cot(pi u) = pi i (t + 1)/(t - 1)
  Complex cot = mul_i(Complex(pi(w))) * (t + one) / (t - one);
  Complex sum(w);
  Complex qn = one;
  const long terms = product_terms(f, u);
  for (long n = 1; n <= terms; ++n) {
    qn *= f.q;
    const Complex a = qn * t, b = qn * tinv;
    sum += b / (one - b) - a / (one - a);
  }
  return f.g2 * u + cot + mul_i(Complex(pi(w) * 2)) * sum;
}

Complex at_working(const Complex& z, long w) { return z.with_precision(w); }

}  // namespace

LatticeBasis::LatticeBasis(const Complex& omega1, const Complex& omega2, PrecisionSpec precision)
    : omega1_(omega1.with_precision(precision.working())),
      omega2_(omega2.with_precision(precision.working())),
      tau_(precision.working()),
      precision_(precision) {
  if (omega2_.is_zero()) throw PreconditionError("LatticeBasis: omega2 must be nonzero");
  tau_ = omega1_ / omega2_;
  if (tau_.im().sign() <= 0) throw PreconditionError("LatticeBasis: basis must satisfy Im(omega1/omega2) > 0");
}

LatticeBasis LatticeBasis::cm(const QuadField& field, PrecisionSpec precision, const std::optional<Complex>& big_omega) {
  const long w = precision.working();
  const Complex om = big_omega ? big_omega->with_precision(w) : Complex(Real(1, w), Real(0, w));
  return LatticeBasis(om * field.omega(w), om, precision);
}

LatticeBasis LatticeBasis::scaled(const Complex& c) const {
  const Complex cw = c.with_precision(working_bits());
  return LatticeBasis(cw * omega1_, cw * omega2_, precision_);
}

Complex LatticeBasis::point(long m1, long m2) const {
  const long w = working_bits();
  return omega1_ * Real(m1, w) + omega2_ * Real(m2, w);
}

TorsionPoint TorsionPoint::canonical() const { return {a1 - Rational(a1.floor()), a2 - Rational(a2.floor())}; }

BigInt TorsionPoint::order() const { return lcm(a1.denominator(), a2.denominator()); }

bool TorsionPoint::is_zero() const { return a1.is_integer() && a2.is_integer(); }

Complex TorsionPoint::lift(const LatticeBasis& lattice) const {
  const long w = lattice.working_bits();
  return lattice.omega1() * Real(a1, w) + lattice.omega2() * Real(a2, w);
}

ReducedBasis reduce_basis(const LatticeBasis& lattice) {
  // Track (omega1', omega2') = M (omega1, omega2) with integer M; tau stays a
  // double-free MPFR quantity so the decisions are exact at working precision.
  long a = 1, b = 0, c = 0, d = 1;
  Complex tau = lattice.tau();
  const long w = lattice.working_bits();
  const Real half(Rational(1, 2), w);
  for (int step = 0; step < kMaxReductionSteps; ++step) {
    Real shifted = tau.re() + half;
    mpfr_floor(shifted.raw(), shifted.raw());
    const long k = mpfr_get_si(shifted.raw(), MPFR_RNDN);
    if (k != 0) {
      tau = tau - Complex(Real(k, w));
      a -= k * c;
      b -= k * d;
    }
    if (norm(tau) < Real(1, w) && !(abs(norm(tau) - Real(1, w)) < pow2(-(w - 8), w))) {
      tau = -inverse(tau);
      const long na = -c, nb = -d, nc = a, nd = b;
      a = na;
      b = nb;
      c = nc;
      d = nd;
      continue;
    }
    if (k == 0) break;
  }
  const Complex o1 = lattice.omega1() * Real(a, w) + lattice.omega2() * Real(b, w);
  const Complex o2 = lattice.omega1() * Real(c, w) + lattice.omega2() * Real(d, w);
  return {LatticeBasis(o1, o2, lattice.precision()), {a, b, c, d}};
}

Real verification_tolerance(const PrecisionSpec& precision, const Real& scale) {
  const long w = precision.working();
  return pow2(-(precision.bits - 64), w) * max(Real(1, w), abs(scale).with_precision(w));
}

Real area_invariant(const LatticeBasis& lattice) {
  const long w = lattice.working_bits();
  return abs((lattice.omega1() * conj(lattice.omega2())).im()) / pi(w);
}

Complex s2_invariant(const LatticeBasis& lattice) { return s2_frame(make_frame(lattice)); }

Complex quasi_period(const LatticeBasis& lattice, const Complex& z) {
  return eta_frame(make_frame(lattice), at_working(z, lattice.working_bits()));
}

Complex discriminant(const LatticeBasis& lattice) { return delta_frame(make_frame(lattice)); }

Complex sigma_weierstrass(const LatticeBasis& lattice, const Complex& z) {
  const Frame f = make_frame(lattice);
  const Complex zw = at_working(z, f.w);
  require_off_lattice(f, zw);
  return f.basis.omega2() * sigma_normalized(f, zw / f.basis.omega2());
}

Complex weierstrass_zeta(const LatticeBasis& lattice, const Complex& z) {
  const Frame f = make_frame(lattice);
  const Complex zw = at_working(z, f.w);
  require_off_lattice(f, zw);
  return zeta_normalized(f, zw / f.basis.omega2()) / f.basis.omega2();
}

Complex wp(const LatticeBasis& lattice, const Complex& z) {
  const Frame f = make_frame(lattice);
  const Complex zw = at_working(z, f.w);
  require_off_lattice(f, zw);
  const Complex o2 = f.basis.omega2();
  return wp_normalized(f, zw / o2) / (o2 * o2);
}

Complex wp_prime(const LatticeBasis& lattice, const Complex& z) {
  const Frame f = make_frame(lattice);
  const Complex zw = at_working(z, f.w);
  require_off_lattice(f, zw);
  const Complex o2 = f.basis.omega2();
  return wp_prime_normalized(f, zw / o2) / (o2 * o2 * o2);
}

WeierstrassInvariants weierstrass_invariants(const LatticeBasis& lattice) {
  const Frame f = make_frame(lattice);
  const long w = f.w;
  const Complex one(Real(1, w), Real(0, w));
  Complex s3(w), s5(w);
  Complex qn = one;
  const long terms = term_bound(f.log2q, 5.0 * std::log2(static_cast<double>(kMaxTerms)), w);
  for (long n = 1; n <= terms; ++n) {
    qn *= f.q;
    const Complex r = qn / (one - qn);
    const long n3 = n * n * n;
    s3 += r * Real(n3, w);
    s5 += r * (Real(n3, w) * Real(n * n, w));
  }
  const Complex e4 = one + s3 * Real(240, w);
  const Complex e6 = one - s5 * Real(504, w);
  const Real p = pi(w);
  const Real p2 = p * p;
  const Complex o2 = f.basis.omega2();
  const Complex o4 = pow(o2, 4), o6 = pow(o2, 6);
  return {e4 * (p2 * p2 * 4 / 3) / o4, e6 * (p2 * p2 * p2 * 8 / 27) / o6};
}

Complex theta_fundamental(const LatticeBasis& lattice, const Complex& z) {
  const Frame f = make_frame(lattice);
  return theta_definition(f, at_working(z, f.w));
}

Complex theta_siegel(const LatticeBasis& lattice, const TorsionPoint& t) {
  if (t.is_zero()) throw LatticePointError("torsion point is zero in C/L", lattice.precision().bits, 0.0);
  const Frame f = make_frame(lattice);
  const auto& m = f.matrix;  // (a, b, c, d)
  // z = a1 omega1 + a2 omega2 = a1' omega1' + a2' omega2' with (a1', a2') = (a1, a2) M^{-1}.
  const Rational a1p = t.a1 * Rational(m[3]) - t.a2 * Rational(m[2]);
  const Rational a2p = -t.a1 * Rational(m[1]) + t.a2 * Rational(m[0]);
  return theta_siegel_frame(f, a1p, a2p);
}

Complex theta_fundamental(const LatticeBasis& lattice, const TorsionPoint& t) {
  const TorsionPoint c = t.canonical();
  if (c.is_zero()) throw LatticePointError("torsion point is zero in C/L", lattice.precision().bits, 0.0);
  const Complex by_definition = theta_fundamental(lattice, c.lift(lattice));
  const Complex by_siegel = theta_siegel(lattice, c);
  const Real diff = abs(by_definition - by_siegel);
  const Real scale = max(abs(by_definition), abs(by_siegel));
  const Real tol = pow2(-(lattice.precision().bits - 64), lattice.working_bits()) * scale;
  if (diff > tol)
    throw PathDisagreementError("theta: definition and Siegel product disagree", lattice.precision().bits,
                                (diff / scale).log2_abs());
  return by_definition;
}

std::vector<TorsionPoint> ideal_torsion(const QuadField& field, const OkElem& alpha) {
  const long na = field.norm(alpha);
  if (na <= 1) throw PreconditionError("ideal_torsion: alpha must generate a nontrivial ideal");
  const OkElem abar = field.conj(alpha);
  std::set<std::pair<Rational, Rational>> seen;
  for (long x = 0; x < na; ++x)
    for (long y = 0; y < na; ++y) {
      const OkElem g = field.mul({x, y}, abar);
      const TorsionPoint pt = TorsionPoint{Rational(g.b, na), Rational(g.a, na)}.canonical();
      if (!pt.is_zero()) seen.emplace(pt.a1, pt.a2);
    }
  std::vector<TorsionPoint> out;
  for (const auto& [a1, a2] : seen) out.push_back({a1, a2});
  if (static_cast<long>(out.size()) != na - 1)
    throw SearchError("ideal_torsion: expected " + std::to_string(na - 1) + " points, found " +
                      std::to_string(out.size()));
  return out;
}

ThetaAPaths theta_a_paths(const QuadField& field, const LatticeBasis& lattice, const OkElem& alpha,
                          const Complex& z) {
  const long w = lattice.working_bits();
  const Complex ratio = lattice.tau() - field.omega(w);
  if (abs(ratio) > pow2(-(lattice.precision().bits / 2), w))
    throw PreconditionError("theta_a: the lattice basis must be (Omega omega_K, Omega)");
  const long na = field.norm(alpha);
  const std::vector<TorsionPoint> points = ideal_torsion(field, alpha);
  const Complex a = field.embed(alpha, w);
  const Complex ainv = inverse(a);
  const LatticeBasis shrunk(lattice.omega1() * ainv, lattice.omega2() * ainv, lattice.precision());
  const Complex zw = at_working(z, w);

  const Complex quotient = pow(theta_fundamental(lattice, zw), na) / theta_fundamental(shrunk, zw);

  const Complex wz = wp(lattice, zw);
  Complex prod = pow(a, -12) * pow(discriminant(lattice), na - 1);
  for (const auto& pt : points) prod *= pow(wz - wp(lattice, pt.lift(lattice)), -6);
  return {quotient, prod, points.size()};
}

Complex theta_a(const QuadField& field, const LatticeBasis& lattice, const OkElem& alpha, const Complex& z) {
  ThetaAPaths paths = theta_a_paths(field, lattice, alpha, z);
  const Real diff = abs(paths.quotient - paths.product);
  const Real scale = max(abs(paths.quotient), abs(paths.product));
  const Real tol = pow2(-(lattice.precision().bits - 64), lattice.working_bits()) * scale;
  if (diff > tol)
    throw PathDisagreementError("theta_a: quotient and product formulas disagree", lattice.precision().bits,
                                (diff / scale).log2_abs());
  return paths.quotient;
}

std::optional<std::string> SeriesCache::find(const std::string& key) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void SeriesCache::store(const std::string& key, const std::string& value) {
  std::lock_guard lock(mutex_);
  entries_.emplace(key, value);
}

std::map<std::string, std::string> SeriesCache::entries() const {
  std::lock_guard lock(mutex_);
  return entries_;
}

void SeriesCache::load(const std::map<std::string, std::string>& entries) {
  std::lock_guard lock(mutex_);
  for (const auto& kv : entries) entries_.insert(kv);
}

std::size_t SeriesCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

void SeriesCache::clear() {
  std::lock_guard lock(mutex_);
  entries_.clear();
}

SeriesCache& series_cache() {
  static SeriesCache cache;
  return cache;
}

}  // namespace soule
