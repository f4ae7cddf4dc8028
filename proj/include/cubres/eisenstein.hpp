#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cubres {

using Int = mpz_class;

/// Element a + b*omega of Z[omega], omega = e^{2*pi*i/3}, so omega^2 = -1 - omega.
/// Coordinates are arbitrary-precision; values are immutable.
class EisensteinInt {
 public:
  EisensteinInt() : a_(0), b_(0) {}
  EisensteinInt(Int a, Int b) : a_(std::move(a)), b_(std::move(b)) {}
  EisensteinInt(long a, long b) : a_(a), b_(b) {}

  static EisensteinInt omega() { return {0, 1}; }
  static EisensteinInt omega_bar() { return {-1, -1}; }

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  EisensteinInt conj() const;
  Int norm() const;  // a^2 - a*b + b^2

  EisensteinInt operator-() const { return {-a_, -b_}; }
  friend EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y);

  friend bool operator==(const EisensteinInt& x, const EisensteinInt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  std::string str() const;

 private:
  Int a_, b_;
};

/// True iff 3 | b and the norm is coprime to 3 (divisors of 1-omega excluded).
bool is_primary(const EisensteinInt& x);

/// The six associates {+-x, +-omega*x, +-omega^2*x}.
std::array<EisensteinInt, 6> associates(const EisensteinInt& x);

/// The primary elements among the six associates; exactly two for any x with
/// norm coprime to 3. Throws std::invalid_argument otherwise.
std::vector<EisensteinInt> primary_associates(const EisensteinInt& x);

/// True iff d divides x exactly in Z[omega].
bool divides(const EisensteinInt& d, const EisensteinInt& x);

/// Quotient and remainder of x by d with each coordinate of the exact quotient
/// rounded to the nearest integer (ties toward zero); norm(rem) < norm(d).
std::pair<EisensteinInt, EisensteinInt> divmod(const EisensteinInt& x, const EisensteinInt& d);

/// Deterministic choice among the six associates: the primary one with a > 0
/// when the norm is coprime to 3, otherwise the associate with a > 0, b >= 0
/// and minimal b.
EisensteinInt canonical_associate(const EisensteinInt& x);

/// Euclidean gcd, canonicalized via canonical_associate. Both inputs zero is
/// an error.
EisensteinInt gcd(EisensteinInt x, EisensteinInt y);

/// x with both coordinates reduced into [0, q).
EisensteinInt mod_rational(const EisensteinInt& x, const Int& q);

/// base^e in R/mR by square-and-multiply. m must be either a rational prime
/// q (coordinates reduce mod q) or a complex element of prime norm p != 3
/// (values reduce to the integer residue set {0,...,p-1}).
EisensteinInt residue_pow(const EisensteinInt& base, const Int& e, const EisensteinInt& m);

/// Cube root of unity omega^e, e in {0,1,2}. Exact; never a float.
class CubeRoot {
 public:
  constexpr CubeRoot() : e_(0) {}
  explicit CubeRoot(long e) : e_(static_cast<int>(((e % 3) + 3) % 3)) {}

  static CubeRoot one() { return CubeRoot(0); }
  static CubeRoot omega() { return CubeRoot(1); }
  static CubeRoot omega_bar() { return CubeRoot(2); }

  int exponent() const { return e_; }
  CubeRoot conj() const { return CubeRoot(-e_); }
  CubeRoot pow(const Int& k) const {
    Int r = (e_ * (k % 3)) % 3;
    return CubeRoot(r.get_si());
  }
  friend CubeRoot operator*(CubeRoot x, CubeRoot y) { return CubeRoot(x.e_ + y.e_); }
  friend bool operator==(CubeRoot x, CubeRoot y) = default;

  /// "1", "w", or "w2".
  std::string str() const;

  /// The Eisenstein integer this root equals: 1, omega, or -1-omega.
  EisensteinInt lift() const;

 private:
  int e_;
};

/// A character value: a cube root of unity, or nullopt when the modulus
/// divides the argument (the zero of the character, distinct from exponent 0).
using Chi = std::optional<CubeRoot>;

/// "0", "1", "w", or "w2".
std::string chi_str(const Chi& v);

}  // namespace cubres
