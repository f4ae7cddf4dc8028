#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "cubres/eisenstein.hpp"

namespace cubres {

/// A point of the projective line over Z/q: a finite residue or infinity.
/// Doubles as the parameter domain of the slope functions (t runs over
/// 0..q-1 and infinity).
class Slope {
 public:
  Slope() : v_(0) {}
  static Slope finite(uint64_t r) { return Slope(r); }
  static Slope infinity() { return Slope(kInf); }

  bool is_infinity() const { return v_ == kInf; }
  uint64_t value() const;  // finite slopes only

  friend auto operator<=>(const Slope&, const Slope&) = default;

  std::string str() const;  // decimal or "inf"

 private:
  explicit Slope(uint64_t v) : v_(v) {}
  static constexpr uint64_t kInf = ~uint64_t(0);
  uint64_t v_;
};

/// 1/s on the projective line: 0 <-> inf, m <-> m^{-1} mod q.
Slope invert(Slope s, uint64_t q);

/// Value multiset of a slope function over the q+1 parameter values.
class SlopeSet {
 public:
  SlopeSet(uint64_t q) : q_(q), mult_(q + 1, 0) {}

  uint64_t q() const { return q_; }
  bool contains(Slope s) const { return mult_[index(s)] > 0; }
  uint32_t multiplicity(Slope s) const { return mult_[index(s)]; }
  void add(Slope s) { ++mult_[index(s)]; }
  std::vector<Slope> members() const;
  size_t distinct_count() const;
  uint64_t total_multiplicity() const;

 private:
  size_t index(Slope s) const { return s.is_infinity() ? q_ : s.value(); }
  uint64_t q_;
  std::vector<uint32_t> mult_;
};

/// gamma = c + d*omega determining the slope function with coefficients
/// C = 6c - 3d and D = d.
struct GammaParams {
  long long c = 1;
  long long d = 0;
  long long C() const { return 6 * c - 3 * d; }
  long long D() const { return d; }
  static GammaParams from(const EisensteinInt& gamma);
  GammaParams conj() const { return {c - d, -d}; }
};

/// (t^2 - 1)/(t^3 - 9t) evaluated projectively mod q (q >= 5 prime);
/// t = infinity maps to slope 0.
Slope lehmer_slope(Slope t, uint64_t q);

/// -(D t^3 - C t^2 - 9D t + C)/(C t^3 + 27D t^2 - 9C t - 27D) evaluated
/// projectively mod q; t = infinity maps to -D/C. Throws DegenerateGammaError
/// if numerator and denominator vanish together.
Slope gamma_slope(const GammaParams& gp, Slope t, uint64_t q);

/// Full value multiset of gamma_slope over t = 0..q-1, infinity. Cached per
/// (gamma mod q, q); thread-safe.
std::shared_ptr<const SlopeSet> slope_set(const GammaParams& gp, uint64_t q);

/// Membership test that avoids materializing the set for large q by counting
/// roots of numerator - s * denominator instead.
bool slope_set_contains(const GammaParams& gp, uint64_t q, Slope s);

/// The order-three map t -> (t - 3)/(t + 1); h(-1) = infinity, h(infinity) = 1.
Slope h_apply(Slope t, uint64_t q);

/// Slopes where L^2 + 27M^2 = 0 mod q: empty for q = 2 mod 3, the two values
/// +-(3*sqrt(-3))^{-1} for q = 1 mod 3.
std::vector<Slope> undefined_slopes(uint64_t q);

/// M/L on the projective line mod q. Throws if q divides both.
Slope slope_of(const Int& L, const Int& M, uint64_t q);

/// Slope criterion for q being a cubic residue: the slope of (L, M) lies in
/// the gamma = 1 slope set. q >= 5 prime, not both coordinates = 0 mod q.
bool lehmer_test(uint64_t q, const Int& L, const Int& M);

/// The original 1958 recipe, followed verbatim: quadratic residues r != 1,
/// u with r = (3u+1)/(3u-3) (u != 0, 1, -1/2, -1/3), then both roots of
/// mu^2 = r (9/(2u+1))^2. Returns the accepted L/M ratios, augmented with
/// {0, infinity} for the q | LM case. q > 3.
std::set<Slope> lehmer_original_ratios(uint64_t q);

/// Values of +-(t^3 - 3t^2 - 9t + 3)/(3(t^3 + 9t^2 - 9t - 9)) over the full
/// parameter line; the literal polynomials of the mod-9 rule.
SlopeSet omeqn_slope_set(uint64_t q, bool plus_sign);

/// Number of distinct roots of c3 t^3 + c2 t^2 + c1 t + c0 mod prime q;
/// exhaustive scan for small q, gcd with t^q - t above. Leading coefficient
/// must not vanish mod q.
int count_roots_cubic(const std::array<Int, 4>& coeffs, const Int& q);

}  // namespace cubres
