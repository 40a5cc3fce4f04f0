#include "padic/arith.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace padic {

namespace {

bool miller_rabin_witness(const mpz_class& n, const mpz_class& a) {
  // returns true if a proves n composite
  mpz_class d = n - 1;
  unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
  mpz_class x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return false;
  for (unsigned long i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  static const std::array<unsigned long, 12> small = {2,  3,  5,  7,  11, 13,
                                                      17, 19, 23, 29, 31, 37};
  for (unsigned long q : small) {
    if (n == q) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), q)) return false;
  }
  if (n < 41 * 41) return true;
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
    // this witness set is deterministic for all n < 3.3e24
    for (unsigned long a : small) {
      if (miller_rabin_witness(n, mpz_class(a))) return false;
    }
    return true;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

PadicContext::PadicContext(mpz_class p, unsigned k) : p_(std::move(p)), k_(k) {
  if (p_ == 2) throw invalid_prime_error("p = 2 is not supported");
  if (!is_prime(p_)) {
    throw invalid_prime_error("p = " + p_.get_str() + " is not prime");
  }
  if (k_ < 1) throw error("precision exponent k must be >= 1");
  mpz_pow_ui(modulus_.get_mpz_t(), p_.get_mpz_t(), k_);
}

mpz_class PadicContext::reduce(const mpz_class& a) const {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), modulus_.get_mpz_t());
  return r;
}

Valuation ord_p(const mpz_class& n, const mpz_class& p) {
  if (n == 0) return Valuation::infinite();
  mpz_class m = abs(n);
  long v = 0;
  mpz_class q, r;
  for (;;) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    ++v;
    m = q;
  }
  return Valuation(v);
}

mpz_class unit_part(const mpz_class& n, const mpz_class& p) {
  if (n == 0) throw error("unit_part of zero");
  mpz_class m = n;
  mpz_class q, r;
  for (;;) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    m = q;
  }
  return m;
}

mpz_class mod_pow(const mpz_class& base, const mpz_class& exp,
                  const PadicContext& ctx) {
  if (exp < 0) throw error("mod_pow: negative exponent");
  mpz_class r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(),
           ctx.modulus().get_mpz_t());
  return r;
}

mpz_class mod_inverse(const mpz_class& a, const PadicContext& ctx) {
  if (mpz_divisible_p(a.get_mpz_t(), ctx.p().get_mpz_t())) {
    throw not_a_unit_error("mod_inverse: " + a.get_str() +
                           " is not a unit mod " + ctx.p().get_str() + "^" +
                           std::to_string(ctx.k()));
  }
  mpz_class r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), ctx.modulus().get_mpz_t())) {
    throw not_a_unit_error("mod_inverse: not invertible");
  }
  return r;
}

std::tuple<mpz_class, mpz_class, mpz_class> extended_gcd(const mpz_class& a,
                                                         const mpz_class& b) {
  if (a == 0 && b == 0) throw error("extended_gcd(0, 0)");
  mpz_class g, r, s;
  mpz_gcdext(g.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  // GMP already returns the minimal pair; clamp once in case of ties
  if (a != 0 && b != 0) {
    mpz_class bs = abs(b) / g;
    mpz_class as = abs(a) / g;
    while (abs(r) > bs) {
      r -= (r > 0 ? bs : -bs);
      s = (g - r * a) / b;
    }
    while (abs(s) > as) {
      s -= (s > 0 ? as : -as);
      r = (g - s * b) / a;
    }
  }
  return {g, r, s};
}

std::tuple<mpz_class, mpz_class, mpz_class> lagrange_gauss_reduce(
    const mpz_class& a2, const mpz_class& a3, const mpz_class& modulus) {
  const mpz_class& m = modulus;
  if (m <= 0) throw error("lagrange_gauss_reduce: modulus must be positive");
  mpz_class r2 = a2 % m, r3 = a3 % m;
  if (r2 < 0) r2 += m;
  if (r3 < 0) r3 += m;
  if (r2 == 0 && r3 == 0) {
    throw degenerate_lattice_error("both exponents vanish mod p-1");
  }

  // The lattice {(e*a2 mod m, e*a3 mod m)} + mZ^2 in Hermite form:
  //   b1 = (g1, u*a3 mod m)  with g1 = gcd(a2, m), u*a2 = g1 mod m
  //   b2 = (0, g2)           with g2 = gcd((m/g1)*a3, m)
  struct Vec {
    mpz_class x, y, e;  // x = e*a2, y = e*a3 mod m
  };
  auto [g1, u, t1] = extended_gcd(r2 == 0 ? m : r2, m);
  if (r2 == 0) u = 0;  // b1 degenerates to (m, *), folded below
  mpz_class step = m / g1;
  auto [g2, s2, t2] = extended_gcd(step * r3 == 0 ? m : mpz_class(step * r3),
                                   m);
  Vec b1{g1, ((u * r3) % m + m) % m, ((u % m) + m) % m};
  Vec b2{0, g2, ((s2 * step) % m + m) % m};
  if (step * r3 % m == 0) b2 = Vec{0, m, 0};

  // explicit mpz_class return: the deduced gmpxx expression template would
  // dangle once the temporaries die
  auto norm2 = [](const Vec& v) -> mpz_class { return v.x * v.x + v.y * v.y; };

  // Lagrange-Gauss reduction of (b1, b2); terminates with b2 the shortest
  // nonzero vector of the lattice
  for (;;) {
    if (norm2(b2) > norm2(b1)) std::swap(b1, b2);
    mpz_class den = norm2(b2);
    if (den == 0) break;
    mpz_class num = b1.x * b2.x + b1.y * b2.y;
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(),
                den.get_mpz_t());
    if (r * 2 > den) q += 1;
    if (q == 0) break;
    b1.x -= q * b2.x;
    b1.y -= q * b2.y;
    b1.e -= q * b2.e;
  }
  Vec best = (b2.x == 0 && b2.y == 0) ? b1 : b2;
  mpz_class e = best.e % m;
  if (e < 0) e += m;
  return {e, best.x, best.y};
}

mpz_class primitive_root(const mpz_class& p) {
  mpz_class order = p - 1;
  // factor p-1 by trial division
  std::vector<mpz_class> prime_factors;
  mpz_class n = order, d = 2;
  while (d * d <= n) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      prime_factors.push_back(d);
      while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) n /= d;
    }
    d += 1;
  }
  if (n > 1) prime_factors.push_back(n);
  PadicContext ctx(p, 1);
  for (mpz_class g = 2; g < p; ++g) {
    bool ok = true;
    for (const auto& q : prime_factors) {
      if (mod_pow(g, order / q, ctx) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw error("no primitive root found (p not prime?)");
}

}  // namespace padic
