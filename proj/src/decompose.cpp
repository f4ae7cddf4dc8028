#include "cubres/decompose.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "cubres/primes.hpp"

namespace cubres {

namespace {

// Smallest base g (from 2, 3, 5, ...) with g^((p-1)/3) != 1 mod p; the result
// is a primitive cube root of unity. Deterministic for reproducible output.
Int cube_root_of_unity(const Int& p) {
  Int e = (p - 1) / 3;
  for (uint32_t g : primes_up_to(1000)) {
    if (p == g) continue;
    Int s;
    Int base(g);
    mpz_powm(s.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    if (s != 1) {
      Int check = (s * s + s + 1) % p;
      if (check != 0)
        throw std::logic_error("decompose_prime: s^2+s+1 != 0 (p not prime?)");
      return s;
    }
  }
  throw std::logic_error("decompose_prime: no non-cube base below 1000");
}

}  // namespace

Decomposition decompose_prime(const Int& p) {
  if (p % 3 != 1)
    throw std::invalid_argument("decompose_prime: p must be 1 mod 3");
  if (!is_probable_prime(p))
    throw std::invalid_argument("decompose_prime: p is not prime");

  Int s = cube_root_of_unity(p);
  EisensteinInt pi0 = gcd(EisensteinInt(p, Int(0)), EisensteinInt(s, Int(-1)));
  if (pi0.norm() != p)
    throw std::logic_error("decompose_prime: gcd does not have norm p");

  // Among the eight primary elements over pi0 and its conjugate, exactly one
  // yields L > 0 and M > 0.
  Decomposition out;
  out.p = p;
  bool found = false;
  for (const EisensteinInt& base : {pi0, pi0.conj()}) {
    for (const EisensteinInt& cand : associates(base)) {
      if (!is_primary(cand)) continue;
      auto [L, M] = lm_from_primary(cand);
      if (sgn(L) > 0 && sgn(M) > 0) {
        if (found) throw std::logic_error("decompose_prime: ambiguous canonical pi");
        out.pi = cand;
        out.L = L;
        out.M = M;
        found = true;
      }
    }
  }
  if (!found) throw std::logic_error("decompose_prime: no canonical pi");

  // Recompute omega's image from the chosen factor: omega = -a/b mod p.
  Int binv;
  if (!mpz_invert(binv.get_mpz_t(), out.pi.b().get_mpz_t(), p.get_mpz_t()))
    throw std::logic_error("decompose_prime: b not invertible mod p");
  Int si = ((-out.pi.a()) * binv) % p;
  if (sgn(si) < 0) si += p;
  out.omega_image = si;
  if ((si * si + si + 1) % p != 0)
    throw std::logic_error("decompose_prime: omega image is not a cube root of unity");
  return out;
}

Decomposition decompose_cached(const Int& p) {
  static std::map<Int, Decomposition> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
  }
  Decomposition d = decompose_prime(p);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(p, d).first->second;
}

std::pair<Int, Int> lm_from_primary(const EisensteinInt& pi) {
  if (!is_primary(pi)) throw std::invalid_argument("lm_from_primary: not primary");
  return {2 * pi.a() - pi.b(), pi.b() / 3};
}

EisensteinInt primary_from_lm(const Int& L, const Int& M) {
  if ((L - M) % 2 != 0)
    throw std::invalid_argument("primary_from_lm: L and M must have equal parity");
  return {(L + 3 * M) / 2, 3 * M};
}

Int rational_image(const EisensteinInt& alpha, const Decomposition& d) {
  Int r = (alpha.a() + alpha.b() * d.omega_image) % d.p;
  if (sgn(r) < 0) r += d.p;
  return r;
}

}  // namespace cubres
