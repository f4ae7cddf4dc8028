#include "cubres/slopes.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "cubres/error.hpp"
#include "cubres/primes.hpp"

namespace cubres {

using modarith::invmod;
using modarith::legendre;
using modarith::mulmod;
using modarith::powmod;
using modarith::sqrtmod;

uint64_t Slope::value() const {
  if (is_infinity()) throw std::invalid_argument("Slope::value on infinity");
  return v_;
}

std::string Slope::str() const {
  return is_infinity() ? "inf" : std::to_string(v_);
}

Slope invert(Slope s, uint64_t q) {
  if (s.is_infinity()) return Slope::finite(0);
  if (s.value() == 0) return Slope::infinity();
  return Slope::finite(invmod(s.value(), q));
}

std::vector<Slope> SlopeSet::members() const {
  std::vector<Slope> out;
  for (uint64_t i = 0; i < q_; ++i)
    if (mult_[i] > 0) out.push_back(Slope::finite(i));
  if (mult_[q_] > 0) out.push_back(Slope::infinity());
  return out;
}

size_t SlopeSet::distinct_count() const {
  size_t n = 0;
  for (uint32_t m : mult_)
    if (m > 0) ++n;
  return n;
}

uint64_t SlopeSet::total_multiplicity() const {
  uint64_t n = 0;
  for (uint32_t m : mult_) n += m;
  return n;
}

GammaParams GammaParams::from(const EisensteinInt& gamma) {
  if (!gamma.a().fits_slong_p() || !gamma.b().fits_slong_p())
    throw std::invalid_argument("GammaParams: coordinates too large");
  return {gamma.a().get_si(), gamma.b().get_si()};
}

namespace {

uint64_t reduce_ll(long long x, uint64_t q) {
  long long r = x % static_cast<long long>(q);
  return static_cast<uint64_t>(r < 0 ? r + static_cast<long long>(q) : r);
}

// Cubic polynomial coefficients mod q, descending degree.
struct Cubic {
  uint64_t c3, c2, c1, c0;
  uint64_t eval(uint64_t t, uint64_t q) const {
    uint64_t v = c3;
    v = (mulmod(v, t, q) + c2) % q;
    v = (mulmod(v, t, q) + c1) % q;
    v = (mulmod(v, t, q) + c0) % q;
    return v;
  }
  bool is_zero() const { return c3 == 0 && c2 == 0 && c1 == 0 && c0 == 0; }
};

// Numerator and denominator of the slope function for gamma, reduced mod q.
// num = -D t^3 + C t^2 + 9D t - C (the leading minus folded in),
// den =  C t^3 + 27D t^2 - 9C t - 27D.
std::pair<Cubic, Cubic> gamma_polys(const GammaParams& gp, uint64_t q) {
  uint64_t C = reduce_ll(gp.C(), q);
  uint64_t D = reduce_ll(gp.D(), q);
  if (C == 0 && D == 0)
    throw DegenerateGammaError("gamma is 0 mod q");
  uint64_t nC = (q - C) % q, nD = (q - D) % q;
  Cubic num{nD, C, mulmod(9 % q, D, q), nC};
  Cubic den{C, mulmod(27 % q, D, q), mulmod(9 % q, nC, q), mulmod(27 % q, nD, q)};
  return {num, den};
}

Slope ratio(uint64_t n, uint64_t d, uint64_t q) {
  if (d == 0) return Slope::infinity();
  return Slope::finite(mulmod(n, invmod(d, q), q));
}

}  // namespace

Slope lehmer_slope(Slope t, uint64_t q) {
  if (q < 5) throw std::invalid_argument("lehmer_slope: q must be >= 5");
  if (t.is_infinity()) return Slope::finite(0);
  uint64_t tv = t.value() % q;
  uint64_t t2 = mulmod(tv, tv, q);
  uint64_t num = (t2 + q - 1) % q;
  uint64_t den = mulmod(tv, (t2 + q - 9 % q) % q, q);
  if (num == 0 && den == 0)
    throw std::logic_error("lehmer_slope: 0/0 cannot happen for q >= 5");
  return ratio(num, den, q);
}

Slope gamma_slope(const GammaParams& gp, Slope t, uint64_t q) {
  if (q < 5) throw std::invalid_argument("gamma_slope: q must be >= 5");
  auto [num, den] = gamma_polys(gp, q);
  if (t.is_infinity()) {
    if (num.c3 == 0 && den.c3 == 0)
      throw DegenerateGammaError("slope function degenerate at infinity");
    return ratio(num.c3, den.c3, q);
  }
  uint64_t tv = t.value() % q;
  uint64_t n = num.eval(tv, q), d = den.eval(tv, q);
  if (n == 0 && d == 0)
    throw DegenerateGammaError("slope function degenerate at t = " + std::to_string(tv) +
                               " mod " + std::to_string(q));
  return ratio(n, d, q);
}

std::shared_ptr<const SlopeSet> slope_set(const GammaParams& gp, uint64_t q) {
  // gamma and -gamma give the same function; canonicalize the cache key.
  uint64_t C = reduce_ll(gp.C(), q), D = reduce_ll(gp.D(), q);
  auto key = std::min(std::tuple{q, C, D}, std::tuple{q, (q - C) % q, (q - D) % q});

  static std::map<std::tuple<uint64_t, uint64_t, uint64_t>, std::shared_ptr<const SlopeSet>> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto set = std::make_shared<SlopeSet>(q);
  for (uint64_t t = 0; t < q; ++t) set->add(gamma_slope(gp, Slope::finite(t), q));
  set->add(gamma_slope(gp, Slope::infinity(), q));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(set)).first->second;
}

namespace {

void poly_trim(std::vector<uint64_t>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of x modulo y over F_q (coefficients little-endian, y nonzero).
std::vector<uint64_t> poly_mod(std::vector<uint64_t> x, const std::vector<uint64_t>& y, uint64_t q) {
  uint64_t lead_inv = invmod(y.back(), q);
  poly_trim(x);
  while (x.size() >= y.size()) {
    uint64_t c = x.back();
    if (c != 0) {
      uint64_t scale = mulmod(c, lead_inv, q);
      size_t shift = x.size() - y.size();
      for (size_t j = 0; j < y.size(); ++j)
        x[shift + j] = (x[shift + j] + q - mulmod(scale, y[j], q)) % q;
    }
    x.pop_back();
    poly_trim(x);
  }
  return x;
}

std::vector<uint64_t> poly_mul(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b,
                               uint64_t q) {
  std::vector<uint64_t> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + mulmod(a[i], b[j], q)) % q;
  return prod;
}

// Distinct roots of a nonzero polynomial of degree <= 3 over F_q via
// gcd(f, t^q - t); the degree of the gcd counts the roots.
int count_roots_poly_gcd(std::vector<uint64_t> f, uint64_t q) {
  poly_trim(f);
  if (f.empty()) throw std::invalid_argument("count_roots: zero polynomial");
  if (f.size() == 1) return 0;

  // t^q mod f by square and multiply.
  std::vector<uint64_t> result{1};
  std::vector<uint64_t> base = poly_mod({0, 1}, f, q);
  uint64_t e = q;
  while (e) {
    if (e & 1) result = poly_mod(poly_mul(result, base, q), f, q);
    base = poly_mod(poly_mul(base, base, q), f, q);
    e >>= 1;
    if (base.empty() && e) break;  // t^2^k = 0 mod f; powers stay 0
  }
  // g = t^q - t mod f
  std::vector<uint64_t> g = result;
  if (g.size() < 2) g.resize(2, 0);
  g[1] = (g[1] + q - 1) % q;
  poly_trim(g);

  std::vector<uint64_t> a = f, b = g;
  while (!b.empty()) {
    auto r = poly_mod(a, b, q);
    a = b;
    b = r;
  }
  return static_cast<int>(a.size()) - 1;
}

}  // namespace

bool slope_set_contains(const GammaParams& gp, uint64_t q, Slope s) {
  if (q < (uint64_t(1) << 20)) return slope_set(gp, q)->contains(s);

  auto [num, den] = gamma_polys(gp, q);
  // Value at t = infinity.
  if (num.c3 == 0 && den.c3 == 0)
    throw DegenerateGammaError("slope function degenerate at infinity");
  if (ratio(num.c3, den.c3, q) == s) return true;
  // s attained at finite t  <=>  num - s*den has a root. (Nondegeneracy of
  // the pair makes the root genuine.)
  std::vector<uint64_t> f(4);
  if (s.is_infinity()) {
    f = {den.c0, den.c1, den.c2, den.c3};
  } else {
    uint64_t sv = s.value() % q;
    f[0] = (num.c0 + q - mulmod(sv, den.c0, q)) % q;
    f[1] = (num.c1 + q - mulmod(sv, den.c1, q)) % q;
    f[2] = (num.c2 + q - mulmod(sv, den.c2, q)) % q;
    f[3] = (num.c3 + q - mulmod(sv, den.c3, q)) % q;
  }
  if (f[0] == 0) return true;  // t = 0 is a root
  bool all_zero = f[0] == 0 && f[1] == 0 && f[2] == 0 && f[3] == 0;
  if (all_zero) throw DegenerateGammaError("slope function constant mod q");
  return count_roots_poly_gcd(f, q) > 0;
}

Slope h_apply(Slope t, uint64_t q) {
  if (q < 5) throw std::invalid_argument("h_apply: q must be >= 5");
  if (t.is_infinity()) return Slope::finite(1);
  uint64_t tv = t.value() % q;
  uint64_t num = (tv + q - 3 % q) % q;
  uint64_t den = (tv + 1) % q;
  return ratio(num, den, q);
}

std::vector<Slope> undefined_slopes(uint64_t q) {
  if (q < 5) throw std::invalid_argument("undefined_slopes: q must be >= 5");
  if (q % 3 == 2) return {};
  auto root = sqrtmod(q - 3 % q, q);
  if (!root) throw std::logic_error("undefined_slopes: -3 must be a square for q = 1 mod 3");
  uint64_t u = invmod(mulmod(3 % q, *root, q), q);
  uint64_t v = q - u;
  if (u > v) std::swap(u, v);
  return {Slope::finite(u), Slope::finite(v)};
}

Slope slope_of(const Int& L, const Int& M, uint64_t q) {
  Int qz(static_cast<unsigned long>(q));
  Int lr, mr;
  mpz_mod(lr.get_mpz_t(), L.get_mpz_t(), qz.get_mpz_t());
  mpz_mod(mr.get_mpz_t(), M.get_mpz_t(), qz.get_mpz_t());
  uint64_t l = lr.get_ui(), m = mr.get_ui();
  if (l == 0 && m == 0)
    throw std::invalid_argument("slope_of: q divides both L and M");
  if (l == 0) return Slope::infinity();
  return Slope::finite(mulmod(m, invmod(l, q), q));
}

bool lehmer_test(uint64_t q, const Int& L, const Int& M) {
  if (q < 5) throw std::invalid_argument("lehmer_test: q must be >= 5");
  return slope_set_contains(GammaParams{1, 0}, q, slope_of(L, M, q));
}

std::set<Slope> lehmer_original_ratios(uint64_t q) {
  if (q <= 3) throw std::invalid_argument("lehmer_original_ratios: q must exceed 3");
  std::set<Slope> out{Slope::finite(0), Slope::infinity()};  // q | LM cases
  for (uint64_t r = 2; r < q; ++r) {
    if (legendre(r, q) != 1) continue;
    // u with r = (3u+1)/(3u-3); solve u = (3r+1)/(3r-3), r != 1 keeps it defined
    uint64_t den = (3 * r % q + q - 3 % q) % q;
    uint64_t u = mulmod((3 * r + 1) % q, invmod(den, q), q);
    if (u == 0 || u == 1) continue;
    if ((2 * u + 1) % q == 0) continue;  // u = -1/2
    if ((3 * u + 1) % q == 0) continue;  // u = -1/3
    uint64_t t = *sqrtmod(r, q);
    uint64_t mu = mulmod(mulmod(t, 9 % q, q), invmod((2 * u + 1) % q, q), q);
    out.insert(Slope::finite(mu));
    out.insert(Slope::finite((q - mu) % q));
  }
  return out;
}

SlopeSet omeqn_slope_set(uint64_t q, bool plus_sign) {
  if (q < 5) throw std::invalid_argument("omeqn_slope_set: q must be >= 5");
  // (t^3 - 3t^2 - 9t + 3) / (3t^3 + 27t^2 - 27t - 27), optionally negated.
  Cubic num{1, (q - 3 % q) % q, (q - 9 % q) % q, 3 % q};
  Cubic den{3 % q, 27 % q, (q - 27 % q) % q, (q - 27 % q) % q};
  if (!plus_sign) {
    num.c3 = (q - num.c3) % q;
    num.c2 = (q - num.c2) % q;
    num.c1 = (q - num.c1) % q;
    num.c0 = (q - num.c0) % q;
  }
  SlopeSet set(q);
  for (uint64_t t = 0; t < q; ++t) {
    uint64_t n = num.eval(t, q), d = den.eval(t, q);
    if (n == 0 && d == 0)
      throw std::logic_error("omeqn_slope_set: unexpected 0/0");
    set.add(ratio(n, d, q));
  }
  set.add(ratio(num.c3, den.c3, q));
  return set;
}

int count_roots_cubic(const std::array<Int, 4>& coeffs, const Int& q) {
  if (!is_probable_prime(q)) throw std::invalid_argument("count_roots_cubic: q must be prime");
  if (!q.fits_ulong_p())
    throw std::invalid_argument("count_roots_cubic: q too large");
  uint64_t qu = q.get_ui();
  auto red = [&](const Int& c) {
    Int r;
    mpz_mod(r.get_mpz_t(), c.get_mpz_t(), q.get_mpz_t());
    return static_cast<uint64_t>(r.get_ui());
  };
  uint64_t c3 = red(coeffs[0]), c2 = red(coeffs[1]), c1 = red(coeffs[2]), c0 = red(coeffs[3]);
  if (c3 == 0)
    throw std::invalid_argument("count_roots_cubic: leading coefficient vanishes mod q");
  if (qu <= 100000) {
    Cubic f{c3, c2, c1, c0};
    int n = 0;
    for (uint64_t t = 0; t < qu; ++t)
      if (f.eval(t, qu) == 0) ++n;
    return n;
  }
  return count_roots_poly_gcd({c0, c1, c2, c3}, qu);
}

}  // namespace cubres
