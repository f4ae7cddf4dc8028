#pragma once

#include <utility>

#include "cubres/eisenstein.hpp"

namespace cubres {

/// Canonical decomposition of a prime p = 1 mod 3: the primary factor pi of
/// norm p whose pair L = 2a-b, M = b/3 has L > 0 and M > 0, so that
/// 4p = L^2 + 27 M^2 is the all-positive representation.
struct Decomposition {
  Int p;
  EisensteinInt pi;
  Int L;
  Int M;
  /// s in [0, p) with s^2 + s + 1 = 0 mod p and pi | (s - omega); the image
  /// of omega under reduction to {0,...,p-1}.
  Int omega_image;
};

/// Decompose a prime p = 1 mod 3. Finds a cube root of unity s mod p by
/// exponentiating small bases, takes gcd(p, s - omega), and normalizes to the
/// all-positive (L, M). Throws std::invalid_argument for p not prime or
/// p != 1 mod 3.
Decomposition decompose_prime(const Int& p);

/// Memoized decompose_prime; thread-safe. Handy for sweeps over many primes.
Decomposition decompose_cached(const Int& p);

/// (L, M) = (2a - b, b/3) for primary pi = a + b*omega; signs as given.
std::pair<Int, Int> lm_from_primary(const EisensteinInt& pi);

/// Inverse map: a = (L + 3M)/2, b = 3M. Requires L = M mod 2.
EisensteinInt primary_from_lm(const Int& L, const Int& M);

/// The unique r in [0, p) with alpha = r mod pi, i.e. (a + b*s) mod p.
Int rational_image(const EisensteinInt& alpha, const Decomposition& d);

}  // namespace cubres
