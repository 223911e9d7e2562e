#include "soule/rational.hpp"

#include <ostream>

#include "soule/errors.hpp"

namespace soule {

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw PreconditionError("Rational: zero denominator");
  q_.canonicalize();
}

Rational::Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
  if (den == 0) throw PreconditionError("Rational: zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw PreconditionError("Rational: cannot parse '" + text + "'");
  if (q.get_den() == 0) throw PreconditionError("Rational: zero denominator in '" + text + "'");
  return Rational(q);
}

BigInt Rational::floor() const {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw PreconditionError("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& x, unsigned long e) {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), x.raw().get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), x.raw().get_den_mpz_t(), e);
  return Rational(mpq_class(n, d));
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace soule
