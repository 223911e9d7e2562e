#include "soule/character.hpp"

#include <numeric>
#include <string>

#include "soule/errors.hpp"

namespace soule {

namespace {

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

int kronecker_symbol(long a, long n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  // Factor out powers of two from n using (a/2).
  int twos = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++twos;
  }
  if (twos > 0) {
    if (a % 2 == 0) return 0;
    const long r8 = mod(a, 8);
    if ((twos & 1) && (r8 == 3 || r8 == 5)) result = -result;
  }
  // Jacobi symbol (a/n) for odd positive n.
  a = mod(a, n);
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const long r8 = n % 8;
      if (r8 == 3 || r8 == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

DirichletChar DirichletChar::trivial() { return DirichletChar(1, {1}); }

DirichletChar DirichletChar::kronecker(long discriminant) {
  const long f = discriminant < 0 ? -discriminant : discriminant;
  if (f < 3) throw PreconditionError("kronecker: |D| must be at least 3");
  std::vector<std::int8_t> values(static_cast<std::size_t>(f));
  for (long a = 0; a < f; ++a) values[a] = static_cast<std::int8_t>(kronecker_symbol(discriminant, a));
  return DirichletChar(f, std::move(values));
}

DirichletChar DirichletChar::from_values(long modulus, std::vector<int> values) {
  if (modulus < 1 || static_cast<long>(values.size()) != modulus)
    throw PreconditionError("from_values: table size must equal the modulus");
  std::vector<std::int8_t> table(values.size());
  for (long a = 0; a < modulus; ++a) {
    const int v = values[a];
    if (v < -1 || v > 1) throw PreconditionError("from_values: values must lie in {-1,0,1}");
    if ((v == 0) != (std::gcd(a, modulus) != 1))
      throw PreconditionError("from_values: chi(a) = 0 exactly when gcd(a, modulus) > 1");
    table[a] = static_cast<std::int8_t>(v);
  }
  for (long a = 0; a < modulus; ++a)
    for (long b = 0; b < modulus; ++b)
      if (table[(a * b) % modulus] != table[a] * table[b])
        throw PreconditionError("from_values: table is not multiplicative at (" + std::to_string(a) +
                                "," + std::to_string(b) + ")");
  return DirichletChar(modulus, std::move(table));
}

int DirichletChar::operator()(long n) const { return values_[static_cast<std::size_t>(mod(n, modulus_))]; }

bool DirichletChar::is_primitive() const {
  if (modulus_ == 1) return true;
  for (long d = 1; d < modulus_; ++d) {
    if (modulus_ % d != 0) continue;
    // Induced from mod d iff chi(a) = 1 for every unit a = 1 mod d.
    bool induced = true;
    for (long a = 1; a < modulus_ && induced; a += d)
      if (std::gcd(a, modulus_) == 1 && (*this)(a) != 1) induced = false;
    if (induced) return false;
  }
  return true;
}

}  // namespace soule
