#include "cubres/character.hpp"

#include <stdexcept>

#include "cubres/primes.hpp"

namespace cubres {

CharacterContext CharacterContext::for_primary(const EisensteinInt& pi) {
  if (!is_primary(pi))
    throw std::invalid_argument("CharacterContext: pi is not primary");
  if (pi.b() == 0) {
    Int q = abs(pi.a());
    if (q % 3 != 2 || !is_probable_prime(q))
      throw std::invalid_argument("CharacterContext: rational pi must be +-q, q prime, q = 2 mod 3");
    CharacterContext ctx;
    ctx.pi_ = pi;
    ctx.p_ = q;
    ctx.complex_ = false;
    return ctx;
  }
  Int p = pi.norm();
  if (p % 3 != 1 || !is_probable_prime(p))
    throw std::invalid_argument("CharacterContext: norm of complex pi must be a prime = 1 mod 3");
  CharacterContext ctx;
  ctx.pi_ = pi;
  ctx.p_ = p;
  ctx.complex_ = true;
  Int binv;
  if (!mpz_invert(binv.get_mpz_t(), pi.b().get_mpz_t(), p.get_mpz_t()))
    throw std::logic_error("CharacterContext: b not invertible mod p");
  Int s = ((-pi.a()) * binv) % p;
  if (sgn(s) < 0) s += p;
  ctx.omega_image_ = s;
  return ctx;
}

CharacterContext CharacterContext::from_decomposition(const Decomposition& d) {
  CharacterContext ctx;
  ctx.pi_ = d.pi;
  ctx.p_ = d.p;
  ctx.omega_image_ = d.omega_image;
  ctx.complex_ = true;
  return ctx;
}

CharacterContext CharacterContext::rational(const Int& q) {
  return for_primary(EisensteinInt(q, Int(0)));
}

const Int& CharacterContext::omega_image() const {
  if (!complex_)
    throw std::invalid_argument("omega_image: rational context");
  return omega_image_;
}

namespace {

// Classify a residue r mod p against {1, s, s^2}; anything else means the
// context is corrupt (p composite or wrong s), which is a hard error.
CubeRoot classify_mod_p(const Int& r, const Int& p, const Int& s) {
  if (r == 1) return CubeRoot::one();
  if (r == s) return CubeRoot::omega();
  if (r == (s * s) % p) return CubeRoot::omega_bar();
  throw std::logic_error("chi: power is not a cube root of unity mod p");
}

}  // namespace

Chi chi(const CharacterContext& ctx, const EisensteinInt& alpha) {
  const Int& p = ctx.modulus_prime();
  if (ctx.is_complex()) {
    Int r = (alpha.a() + alpha.b() * ctx.omega_image()) % p;
    if (sgn(r) < 0) r += p;
    if (r == 0) return std::nullopt;
    Int e = (p - 1) / 3;
    Int y;
    mpz_powm(y.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return classify_mod_p(y, p, ctx.omega_image());
  }
  // rational pi = +-q: work in Z[omega]/q, a field with q^2 elements
  EisensteinInt a = mod_rational(alpha, p);
  if (a.is_zero()) return std::nullopt;
  Int e = (p * p - 1) / 3;
  EisensteinInt y = residue_pow(a, e, EisensteinInt(p, Int(0)));
  if (y == EisensteinInt(1, 0)) return CubeRoot::one();
  if (y == EisensteinInt(Int(0), Int(1))) return CubeRoot::omega();
  if (y == EisensteinInt(p - 1, p - 1)) return CubeRoot::omega_bar();
  throw std::logic_error("chi: power is not a cube root of unity mod q");
}

Chi chi(const CharacterContext& ctx, const Int& alpha) {
  return chi(ctx, EisensteinInt(alpha, Int(0)));
}

Chi F(const Int& q, const Int& L, const Int& M) {
  if (!is_probable_prime(q)) throw std::invalid_argument("F: q must be prime");
  if ((L - M) % 2 != 0)
    throw std::invalid_argument("F: L and M must have equal parity");
  Int four_p = L * L + 27 * M * M;
  Int p = four_p / 4;
  if (4 * p != four_p || p % 3 != 1 || !is_probable_prime(p))
    throw std::invalid_argument("F: (L^2 + 27M^2)/4 must be a prime = 1 mod 3");
  if (p == q) return std::nullopt;
  return chi(CharacterContext::for_primary(primary_from_lm(L, M)), q);
}

CubeRoot chi_omega(const CharacterContext& ctx) {
  if (!ctx.is_complex())
    throw std::invalid_argument("chi_omega: rational context");
  Int e = ((ctx.modulus_prime() - 1) / 3) % 3;
  return CubeRoot(e.get_si());
}

CubeRoot chi_one_minus_omega(const CharacterContext& ctx) {
  if (!ctx.is_complex())
    throw std::invalid_argument("chi_one_minus_omega: rational context");
  const Int& a = ctx.pi().a();
  Int amod;
  mpz_mod_ui(amod.get_mpz_t(), a.get_mpz_t(), 3);
  Int n;
  if (amod == 2)
    n = (a + 1) / 3;  // a = 3n - 1
  else if (amod == 1)
    n = (1 - a) / 3;  // a = -(3n - 1)
  else
    throw std::logic_error("chi_one_minus_omega: a divisible by 3 for primary pi");
  Int e = (2 * n) % 3;
  if (sgn(e) < 0) e += 3;
  return CubeRoot(e.get_si());
}

bool reciprocity_check(const EisensteinInt& pi, const EisensteinInt& rho) {
  CharacterContext cpi = CharacterContext::for_primary(pi);
  CharacterContext crho = CharacterContext::for_primary(rho);
  if (cpi.source_prime() == crho.source_prime())
    throw std::invalid_argument("reciprocity_check: same underlying rational prime");
  Chi lhs = chi(cpi, rho);
  Chi rhs = chi(crho, pi);
  return lhs.has_value() && rhs.has_value() && *lhs == *rhs;
}

}  // namespace cubres
