#pragma once

#include "cubres/decompose.hpp"
#include "cubres/eisenstein.hpp"

namespace cubres {

/// Evaluation context for the cubic residue character chi_pi attached to a
/// primary prime pi. Two shapes: complex pi of prime norm p = 1 mod 3
/// (exponent (p-1)/3, evaluated in Z/p), and rational pi = +-q with q prime,
/// q = 2 mod 3 (exponent (q^2-1)/3, evaluated in Z[omega]/q).
class CharacterContext {
 public:
  /// Context for any primary prime (either shape); validates primality.
  static CharacterContext for_primary(const EisensteinInt& pi);
  /// Complex context straight from a decomposition.
  static CharacterContext from_decomposition(const Decomposition& d);
  /// Rational context for prime q = 2 mod 3 (uses pi = +q).
  static CharacterContext rational(const Int& q);

  bool is_complex() const { return complex_; }
  const EisensteinInt& pi() const { return pi_; }
  /// Norm p for complex pi, q for rational pi.
  const Int& modulus_prime() const { return p_; }
  /// Image of omega in {0,...,p-1}; complex contexts only.
  const Int& omega_image() const;
  /// The rational prime pi arises from (p or q); for "arising from different
  /// primes" checks.
  const Int& source_prime() const { return p_; }

 private:
  CharacterContext() = default;
  EisensteinInt pi_;
  Int p_;
  Int omega_image_;
  bool complex_ = false;
};

/// chi_pi(alpha): nullopt when pi | alpha, else the cube root of unity
/// congruent to alpha^((N(pi)-1)/3) mod pi.
Chi chi(const CharacterContext& ctx, const EisensteinInt& alpha);
Chi chi(const CharacterContext& ctx, const Int& alpha);

/// F_q(L, M) = chi_pi(q) for pi built from the pair (L, M). Requires
/// (L^2 + 27 M^2)/4 to be a prime = 1 mod 3; nullopt iff that prime is q.
Chi F(const Int& q, const Int& L, const Int& M);

/// chi_pi(omega) = omega^((p-1)/3); complex contexts only.
CubeRoot chi_omega(const CharacterContext& ctx);

/// chi_pi(1 - omega) = omega^(2n) where a = +-(3n - 1); complex contexts only.
CubeRoot chi_one_minus_omega(const CharacterContext& ctx);

/// Cubic reciprocity probe: chi_pi(rho) == chi_rho(pi) for primary primes
/// arising from different rational primes. Test surface.
bool reciprocity_check(const EisensteinInt& pi, const EisensteinInt& rho);

}  // namespace cubres
