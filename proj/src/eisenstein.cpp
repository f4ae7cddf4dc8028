#include "cubres/eisenstein.hpp"

#include <stdexcept>

#include "cubres/primes.hpp"

namespace cubres {

EisensteinInt EisensteinInt::conj() const {
  // conj(a + b*omega) = a + b*omega^2 = (a - b) - b*omega
  return {a_ - b_, -b_};
}

Int EisensteinInt::norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
  // (a1 + b1 w)(a2 + b2 w) = a1 a2 + (a1 b2 + a2 b1) w + b1 b2 w^2, w^2 = -1 - w
  return {x.a_ * y.a_ - x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_ - x.b_ * y.b_};
}

std::string EisensteinInt::str() const {
  return a_.get_str() + (sgn(b_) < 0 ? "" : "+") + b_.get_str() + "w";
}

bool is_primary(const EisensteinInt& x) {
  return x.b() % 3 == 0 && x.norm() % 3 != 0;
}

std::array<EisensteinInt, 6> associates(const EisensteinInt& x) {
  EisensteinInt wx = EisensteinInt::omega() * x;
  EisensteinInt wwx = EisensteinInt::omega() * wx;
  return {x, -x, wx, -wx, wwx, -wwx};
}

std::vector<EisensteinInt> primary_associates(const EisensteinInt& x) {
  if (x.is_zero()) throw std::invalid_argument("primary_associates: zero input");
  if (x.norm() % 3 == 0)
    throw std::invalid_argument("primary_associates: norm divisible by 3");
  std::vector<EisensteinInt> out;
  for (const auto& y : associates(x))
    if (is_primary(y)) out.push_back(y);
  if (out.size() != 2)
    throw std::logic_error("primary_associates: expected exactly two");
  return out;
}

namespace {

// Nearest integer to x/n for n > 0, ties rounded toward zero.
Int round_div(const Int& x, const Int& n) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
  Int twice = 2 * r;
  if (twice > n) return q + 1;
  if (twice < n) return q;
  return sgn(q) >= 0 ? q : q + 1;  // tie: x/n = q + 1/2
}

}  // namespace

std::pair<EisensteinInt, EisensteinInt> divmod(const EisensteinInt& x, const EisensteinInt& d) {
  if (d.is_zero()) throw std::invalid_argument("divmod: division by zero");
  // x/d = x * conj(d) / norm(d); round each rational coordinate.
  EisensteinInt num = x * d.conj();
  Int n = d.norm();
  EisensteinInt q(round_div(num.a(), n), round_div(num.b(), n));
  EisensteinInt r = x - q * d;
  return {q, r};
}

bool divides(const EisensteinInt& d, const EisensteinInt& x) {
  if (d.is_zero()) return x.is_zero();
  EisensteinInt num = x * d.conj();
  Int n = d.norm();
  return num.a() % n == 0 && num.b() % n == 0;
}

EisensteinInt canonical_associate(const EisensteinInt& x) {
  if (x.is_zero()) return x;
  if (x.norm() % 3 != 0) {
    for (const auto& y : primary_associates(x))
      if (sgn(y.a()) > 0) return y;
    throw std::logic_error("canonical_associate: no primary with a > 0");
  }
  // The sector a > 0, b >= 0 holds exactly two of the six associates; take
  // the one with smaller b (then smaller a).
  std::optional<EisensteinInt> best;
  for (const auto& y : associates(x)) {
    if (sgn(y.a()) <= 0 || sgn(y.b()) < 0) continue;
    if (!best || y.b() < best->b() || (y.b() == best->b() && y.a() < best->a()))
      best = y;
  }
  if (!best) throw std::logic_error("canonical_associate: empty sector");
  return *best;
}

EisensteinInt gcd(EisensteinInt x, EisensteinInt y) {
  if (x.is_zero() && y.is_zero())
    throw std::invalid_argument("gcd: both inputs zero");
  while (!y.is_zero()) {
    auto [q, r] = divmod(x, y);
    x = y;
    y = r;
  }
  return canonical_associate(x);
}

EisensteinInt mod_rational(const EisensteinInt& x, const Int& q) {
  Int a, b;
  mpz_mod(a.get_mpz_t(), x.a().get_mpz_t(), q.get_mpz_t());
  mpz_mod(b.get_mpz_t(), x.b().get_mpz_t(), q.get_mpz_t());
  return {a, b};
}

namespace {

// Reduction mod a complex element of prime norm p: the integers {0,...,p-1}
// form a complete residue system, and omega = -a/b mod p.
struct ComplexReducer {
  Int p;
  Int s;  // image of omega
  explicit ComplexReducer(const EisensteinInt& m) : p(m.norm()) {
    if (!is_probable_prime(p) || p == 3)
      throw std::invalid_argument("residue_pow: modulus norm must be a prime != 3");
    Int binv;
    if (!mpz_invert(binv.get_mpz_t(), m.b().get_mpz_t(), p.get_mpz_t()))
      throw std::logic_error("residue_pow: b not invertible mod p");
    s = ((-m.a()) * binv) % p;
    if (sgn(s) < 0) s += p;
  }
  EisensteinInt reduce(const EisensteinInt& x) const {
    Int r = (x.a() + x.b() * s) % p;
    if (sgn(r) < 0) r += p;
    return {r, Int(0)};
  }
};

}  // namespace

EisensteinInt residue_pow(const EisensteinInt& base, const Int& e, const EisensteinInt& m) {
  if (m.is_zero()) throw std::invalid_argument("residue_pow: zero modulus");
  if (sgn(e) < 0) throw std::invalid_argument("residue_pow: negative exponent");

  const bool rational = (m.b() == 0);
  std::optional<ComplexReducer> red;
  Int q;
  if (rational) {
    q = abs(m.a());
    if (!is_probable_prime(q))
      throw std::invalid_argument("residue_pow: rational modulus must be prime");
  } else {
    red.emplace(m);
  }
  auto reduce = [&](const EisensteinInt& x) {
    return rational ? mod_rational(x, q) : red->reduce(x);
  };

  EisensteinInt result(1, 0);
  EisensteinInt acc = reduce(base);
  Int k = e;
  while (k != 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = reduce(result * acc);
    acc = reduce(acc * acc);
    k >>= 1;
  }
  return reduce(result);
}

std::string CubeRoot::str() const {
  switch (e_) {
    case 1: return "w";
    case 2: return "w2";
    default: return "1";
  }
}

EisensteinInt CubeRoot::lift() const {
  switch (e_) {
    case 1: return EisensteinInt::omega();
    case 2: return EisensteinInt::omega_bar();
    default: return {1, 0};
  }
}

std::string chi_str(const Chi& v) { return v ? v->str() : "0"; }

}  // namespace cubres
