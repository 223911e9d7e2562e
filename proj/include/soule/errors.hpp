#pragma once

#include <stdexcept>
#include <string>

namespace soule {

/// Base for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (bad range, non-split prime, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The prime is inert in K (chi_K(p) = -1).
class NotSplitError : public PreconditionError {
 public:
  NotSplitError(long d_k, long p)
      : PreconditionError(std::to_string(p) + " is not split in the field of discriminant -" +
                          std::to_string(d_k)),
        d_k_(d_k), p_(p) {}
  long d_k() const noexcept { return d_k_; }
  long p() const noexcept { return p_; }

 private:
  long d_k_;
  long p_;
};

/// The prime divides d_K.
class RamifiedError : public PreconditionError {
 public:
  RamifiedError(long d_k, long p)
      : PreconditionError(std::to_string(p) + " ramifies in the field of discriminant -" +
                          std::to_string(d_k)) {}
};

/// A bounded search that must succeed came back empty. Always a bug.
class SearchError : public Error {
 public:
  using Error::Error;
};

/// An exact quantity that must be integral (or p-integral) is not.
class IntegralityError : public Error {
 public:
  IntegralityError(long key, std::string coefficient, const std::string& what)
      : Error(what + ": key " + std::to_string(key) + " has coefficient " + coefficient),
        key_(key), coefficient_(std::move(coefficient)) {}
  long key() const noexcept { return key_; }
  const std::string& coefficient() const noexcept { return coefficient_; }

 private:
  long key_;
  std::string coefficient_;
};

/// Numerical failures carry the requested precision and the bound actually achieved
/// (as log2 of the error), so callers can retry at a higher precision.
class PrecisionError : public Error {
 public:
  PrecisionError(const std::string& what, long requested_bits, double achieved_log2)
      : Error(what + " (requested " + std::to_string(requested_bits) + " bits, achieved 2^" +
              std::to_string(achieved_log2) + ")"),
        requested_bits_(requested_bits), achieved_log2_(achieved_log2) {}
  long requested_bits() const noexcept { return requested_bits_; }
  double achieved_log2() const noexcept { return achieved_log2_; }

 private:
  long requested_bits_;
  double achieved_log2_;
};

/// The argument of sigma/wp/theta is (numerically) a lattice point.
class LatticePointError : public PrecisionError {
 public:
  using PrecisionError::PrecisionError;
};

/// Two independent evaluation paths of the same quantity disagree.
class PathDisagreementError : public PrecisionError {
 public:
  using PrecisionError::PrecisionError;
};

}  // namespace soule
