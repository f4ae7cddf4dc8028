#include "cubres/primes.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubres {

namespace {

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned long r) {
  Int x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return false;
  for (unsigned long i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;  // composite witness
}

}  // namespace

bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  static const long kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (long p : kSmall) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Int d = n - 1;
  unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
  d >>= r;
  for (long p : kSmall)
    if (miller_rabin_witness(n, Int(p), d, r)) return false;
  // Bases 2..41 are known to be conclusive below 3.317e24.
  static const Int kDeterministicBound("3317044064679887385961981");
  if (n < kDeterministicBound) return true;
  static gmp_randclass rng(gmp_randinit_mt);
  static bool seeded = [] {
    rng.seed(0x5eed5eedUL);
    return true;
  }();
  (void)seeded;
  for (int i = 0; i < 64; ++i) {
    Int a = rng.get_z_range(n - 3) + 2;
    if (miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

std::vector<uint32_t> primes_up_to(uint32_t n) {
  std::vector<uint32_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (uint32_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (uint64_t j = uint64_t(i) * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

Int FactoredInteger::value() const {
  Int v = sign;
  for (const auto& [p, e] : factors) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

namespace {

// Pollard rho, Brent variant. Returns a nontrivial factor or 0 on failure.
Int pollard_rho(const Int& n) {
  if (n % 2 == 0) return 2;
  for (long c = 1; c <= 40; ++c) {
    Int x = 2, y = 2, d = 1;
    Int saved_x;
    long power = 1, lam = 1;
    while (d == 1) {
      if (lam == power) {
        x = y;
        power *= 2;
        lam = 0;
      }
      // batch gcd every 128 steps
      Int prod = 1;
      long batch = std::min<long>(128, power - lam);
      saved_x = y;
      for (long i = 0; i < batch; ++i) {
        y = (y * y + c) % n;
        prod = prod * (x - y) % n;
      }
      lam += batch;
      mpz_gcd(d.get_mpz_t(), prod.get_mpz_t(), n.get_mpz_t());
      if (lam > (1L << 22)) break;  // stall; try next c
    }
    if (d == n) {
      // retrace one step at a time
      y = saved_x;
      d = 1;
      while (d == 1) {
        y = (y * y + c) % n;
        Int diff = x - y;
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (d != 1 && d != n) return d;
  }
  return 0;
}

void factor_into(const Int& n, std::vector<std::pair<Int, unsigned>>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out.emplace_back(n, 1);
    return;
  }
  Int d = pollard_rho(n);
  if (d == 0) throw FactorError("factor: unfactored cofactor " + n.get_str(), n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

FactoredInteger factor(const Int& c, const Int& trial_bound) {
  if (c == 0) throw std::invalid_argument("factor: zero input");
  FactoredInteger f;
  f.sign = sgn(c) < 0 ? -1 : 1;
  Int n = abs(c);

  uint32_t tb = 1000000;
  if (trial_bound > 0 && trial_bound < tb) tb = trial_bound.get_ui();
  // trial division only needs primes up to sqrt(n)
  Int root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  if (root < tb) tb = static_cast<uint32_t>(root.get_ui()) + 1;

  for (uint32_t p : primes_up_to(tb)) {
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      f.factors.emplace_back(Int(p), e);
    }
    if (n == 1) break;
  }
  if (n > 1) {
    std::vector<std::pair<Int, unsigned>> rest;
    factor_into(n, rest);
    std::sort(rest.begin(), rest.end());
    for (auto& [p, e] : rest) {
      if (!f.factors.empty() && f.factors.back().first == p)
        f.factors.back().second += e;
      else
        f.factors.emplace_back(p, e);
    }
  }
  std::sort(f.factors.begin(), f.factors.end());
  return f;
}

namespace modarith {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

uint64_t invmod(uint64_t a, uint64_t m) {
  int64_t t = 0, new_t = 1;
  int64_t r = static_cast<int64_t>(m), new_r = static_cast<int64_t>(a % m);
  while (new_r != 0) {
    int64_t q = r / new_r;
    std::swap(t -= q * new_t, new_t);
    std::swap(r -= q * new_r, new_r);
  }
  if (r != 1) throw std::invalid_argument("invmod: not invertible");
  return static_cast<uint64_t>(t < 0 ? t + static_cast<int64_t>(m) : t);
}

int legendre(uint64_t a, uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::optional<uint64_t> sqrtmod(uint64_t a, uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (legendre(a, p) != 1) return std::nullopt;
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);

  // Tonelli-Shanks
  uint64_t q = p - 1, s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  uint64_t z = 2;
  while (legendre(z, p) != -1) ++z;
  uint64_t m = s;
  uint64_t c = powmod(z, q, p);
  uint64_t t = powmod(a, q, p);
  uint64_t r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    uint64_t b = powmod(c, uint64_t(1) << (m - i - 1), p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

}  // namespace modarith

}  // namespace cubres
