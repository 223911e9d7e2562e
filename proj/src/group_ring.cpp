#include "soule/group_ring.hpp"

#include <numeric>
#include <thread>

#include "soule/bernoulli.hpp"
#include "soule/errors.hpp"

namespace soule {

namespace {

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

void require_coprime(long x, long m, const char* what) {
  if (std::gcd(mod(x, m), m) != 1)
    throw PreconditionError(std::string(what) + ": " + std::to_string(x) + " is not a unit mod " +
                            std::to_string(m));
}

void require_split(const QuadField& field, long p, int n) {
  if (n < 1) throw PreconditionError("level n must be positive");
  if (!is_split(field, p)) throw NotSplitError(field.d_k(), p);
}

}  // namespace

long inverse_mod(long a, long m) {
  BigInt r, x = mod(a, m), mm = m;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), mm.get_mpz_t()) == 0)
    throw PreconditionError(std::to_string(a) + " is not invertible mod " + std::to_string(m));
  return r.get_si();
}

long power_of(long p, int n) {
  long r = 1;
  for (int i = 0; i < n; ++i) r *= p;
  return r;
}

GroupRingElem::GroupRingElem(long modulus) : modulus_(modulus) {
  if (modulus < 1) throw PreconditionError("GroupRingElem: modulus must be positive");
}

GroupRingElem GroupRingElem::sigma(long modulus, long x) {
  GroupRingElem e(modulus);
  e.add_term(x, Rational(1));
  return e;
}

Rational GroupRingElem::coeff(long x) const {
  auto it = coeffs_.find(mod(x, modulus_));
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void GroupRingElem::add_term(long x, const Rational& c) {
  require_coprime(x, modulus_, "GroupRingElem");
  if (c.is_zero()) return;
  const long k = mod(x, modulus_);
  auto [it, inserted] = coeffs_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& o) {
  if (o.modulus_ != modulus_) throw PreconditionError("GroupRingElem: modulus mismatch");
  for (const auto& [x, c] : o.coeffs_) add_term(x, c);
  return *this;
}

GroupRingElem& GroupRingElem::operator-=(const GroupRingElem& o) {
  if (o.modulus_ != modulus_) throw PreconditionError("GroupRingElem: modulus mismatch");
  for (const auto& [x, c] : o.coeffs_) add_term(x, -c);
  return *this;
}

GroupRingElem& GroupRingElem::operator*=(const Rational& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [x, c] : coeffs_) c *= s;
  return *this;
}

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
  if (a.modulus_ != b.modulus_) throw PreconditionError("GroupRingElem: modulus mismatch");
  GroupRingElem out(a.modulus_);
  for (const auto& [x, c] : a.coeffs_)
    for (const auto& [y, d] : b.coeffs_)
      out.add_term(static_cast<long>(static_cast<__int128>(x) * y % a.modulus_), c * d);
  return out;
}

GroupRingElem stickelberger(long d, long p, int n) {
  if (d < 1 || n < 1 || !is_prime(p)) throw PreconditionError("stickelberger: need d >= 1, n >= 1, p prime");
  if (std::gcd(d, p) != 1) throw PreconditionError("stickelberger: gcd(d, p) must be 1");
  const long m = d * power_of(p, n);
  GroupRingElem theta(m);
  for (long a = 1; a < m; ++a) {
    if (std::gcd(a, m) != 1) continue;
    theta.add_term(inverse_mod(a, m), bernoulli_b1(Rational(a, m)));
  }
  return theta;
}

GroupRingElem smooth(const GroupRingElem& theta, long c) {
  const long m = theta.modulus();
  require_coprime(c, m, "smooth");
  GroupRingElem shifted = theta * GroupRingElem::sigma(m, inverse_mod(c, m));
  GroupRingElem out = theta - shifted * Rational(c);
  for (const auto& [x, coef] : out.coeffs())
    if (BigInt g = gcd(coef.denominator(), BigInt(m)); g != 1)
      throw IntegralityError(x, coef.str(), "smooth: coefficient is not integral at the primes of the modulus");
  return out;
}

GroupRingElem involution(const GroupRingElem& theta) {
  GroupRingElem out(theta.modulus());
  for (const auto& [x, c] : theta.coeffs()) out.add_term(inverse_mod(x, theta.modulus()), c);
  return out;
}

Rational specialize(const GroupRingElem& theta, const std::function<Rational(long)>& rule) {
  Rational total(0);
  for (const auto& [x, c] : theta.coeffs()) total += c * rule(x);
  return total;
}

Rational nu_exponent(const QuadField& field, long p, int n, long c, long b) {
  require_split(field, p, n);
  const long pn = power_of(p, n);
  if (mod(c, p) == 0) throw PreconditionError("nu_exponent: c must be prime to p");
  const long m = field.d_k() * pn;
  b = mod(b, m);
  if (b % p == 0) return Rational(0);
  const long a0 = mod(c * inverse_mod(b, pn), pn);
  const int chi_b = kronecker_chi(field, b);
  // -12 p^n (a/M - 1/2) = -6 (2a - M) / d_K
  long acc = 0;
  for (long a = a0; a < m; a += pn) acc += (kronecker_chi(field, a) + chi_b) * (2 * a - m);
  return Rational(-6 * acc, field.d_k());
}

NuTable nu_table(const QuadField& field, long p, int n, long c) {
  NuTable t{field.d_k(), p, n, c, {}};
  const long m = field.d_k() * power_of(p, n);
  for (long b = 0; b < m; ++b) {
    Rational v = nu_exponent(field, p, n, c, b);
    if (!v.is_integer()) throw IntegralityError(b, v.str(), "nu_n(" + std::to_string(c) + ", b) is not an integer");
    t.values.emplace(b, std::move(v));
  }
  return t;
}

std::vector<NuTable> nu_tables(const QuadField& field, long p, int n, unsigned jobs) {
  require_split(field, p, n);
  const long pn = power_of(p, n);
  std::vector<long> cs;
  for (long c = 1; c < pn; ++c)
    if (c % p != 0) cs.push_back(c);
  std::vector<NuTable> out(cs.size());
  std::vector<std::exception_ptr> errors(cs.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(cs.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < cs.size(); i += workers) {
        try {
          out[i] = nu_table(field, p, n, cs[i]);
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

Rational kersey_exponent(const QuadField& field, long p, int n, long na, long b) {
  require_split(field, p, n);
  if (na < 1 || kronecker_chi(field, na) != 1 || std::gcd(na, field.d_k() * p) != 1)
    throw PreconditionError("kersey_exponent: need chi_K(Na) = 1 and gcd(Na, d_K p) = 1");
  const long pn = power_of(p, n);
  Rational v = (Rational(na) * nu_exponent(field, p, n, 1, b) - nu_exponent(field, p, n, na, b)) / Rational(pn);
  if (!v.is_integer()) throw IntegralityError(b, v.str(), "Kersey exponent is not an integer");
  return v;
}

}  // namespace soule
