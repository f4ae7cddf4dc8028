#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cubres {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// The rational slope function collapsed modulo q (numerator and denominator
/// share a root), so no slope set exists for this (gamma, q) pair.
class DegenerateGammaError : public Error {
 public:
  using Error::Error;
};

/// An integer resisted factorization within the configured bounds.
class FactorError : public Error {
 public:
  FactorError(const std::string& what, mpz_class cofactor)
      : Error(what), cofactor_(std::move(cofactor)) {}
  const mpz_class& cofactor() const { return cofactor_; }

 private:
  mpz_class cofactor_;
};

/// The general-rule search ran out of auxiliary primes l before finding a
/// usable one.
class FallbackExhaustedError : public Error {
 public:
  using Error::Error;
};

}  // namespace cubres
