#pragma once

#include <cstdint>
#include <vector>

namespace soule {

/// Kronecker symbol (a/n) for arbitrary integers a, n.
int kronecker_symbol(long a, long n);

/// A real-valued Dirichlet character, stored as its value table modulo the
/// conductor. Only the trivial character and quadratic (Kronecker) characters
/// are representable, which is all the elliptic/cyclotomic comparison needs.
class DirichletChar {
 public:
  static DirichletChar trivial();
  /// chi_D(n) = (D/n) for a fundamental discriminant D.
  static DirichletChar kronecker(long discriminant);
  /// Builds a character from an explicit table of values mod `modulus`; the
  /// table is checked for complete multiplicativity and values in {-1,0,1}.
  static DirichletChar from_values(long modulus, std::vector<int> values);

  long conductor() const noexcept { return modulus_; }
  int operator()(long n) const;

  bool is_trivial() const noexcept { return modulus_ == 1; }
  /// chi(-1).
  int parity() const { return (*this)(-1); }
  /// True if the character does not factor through a proper divisor of the modulus.
  bool is_primitive() const;

  friend bool operator==(const DirichletChar&, const DirichletChar&) = default;

 private:
  DirichletChar(long modulus, std::vector<std::int8_t> values)
      : modulus_(modulus), values_(std::move(values)) {}
  long modulus_;
  std::vector<std::int8_t> values_;
};

}  // namespace soule
