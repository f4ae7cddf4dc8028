#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cubres/error.hpp"

namespace cubres {

using Int = mpz_class;

/// Miller-Rabin: deterministic (first 13 prime bases) below 3.317e24,
/// those bases plus 64 fixed-seed random rounds above.
bool is_probable_prime(const Int& n);

/// Primes <= n by sieve of Eratosthenes.
std::vector<uint32_t> primes_up_to(uint32_t n);

/// Sign and prime factorization of a nonzero integer.
struct FactoredInteger {
  int sign = 1;
  std::vector<std::pair<Int, unsigned>> factors;  // (prime, exponent), primes ascending

  Int value() const;
};

/// Trial division to trial_bound, then Pollard rho on what remains, with a
/// primality check certifying every reported factor. Throws FactorError with
/// the offending cofactor if rho stalls.
FactoredInteger factor(const Int& c, const Int& trial_bound = Int(1000000));

namespace modarith {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod(uint64_t a, uint64_t e, uint64_t m);
/// Inverse of a mod m (gcd(a, m) must be 1).
uint64_t invmod(uint64_t a, uint64_t m);
/// Legendre symbol of a mod odd prime p, in {-1, 0, 1}.
int legendre(uint64_t a, uint64_t p);
/// A square root of a mod odd prime p via Tonelli-Shanks, if one exists.
std::optional<uint64_t> sqrtmod(uint64_t a, uint64_t p);

}  // namespace modarith

}  // namespace cubres
