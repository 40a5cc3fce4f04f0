// Arbitrary-precision integer and Z/p^k arithmetic: valuations, modular
// powering, inverses, extended gcd, and a 2-d lattice reducer.
#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <tuple>

#include <gmpxx.h>

namespace padic {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct not_a_unit_error : error {
  using error::error;
};
struct invalid_prime_error : error {
  using error::error;
};
struct degenerate_lattice_error : error {
  using error::error;
};
struct budget_error : error {
  using error::error;
};

/// p-adic valuation of an integer: a non-negative integer or infinity
/// (the valuation of 0).
class Valuation {
 public:
  Valuation() : inf_(true), v_(0) {}
  explicit Valuation(long v) : inf_(false), v_(v) {}
  static Valuation infinite() { return Valuation(); }

  bool is_infinite() const { return inf_; }
  long value() const {
    if (inf_) throw error("valuation is infinite");
    return v_;
  }

  Valuation operator+(const Valuation& o) const {
    if (inf_ || o.inf_) return infinite();
    return Valuation(v_ + o.v_);
  }
  bool operator==(const Valuation& o) const {
    return inf_ == o.inf_ && (inf_ || v_ == o.v_);
  }
  bool operator<(const Valuation& o) const {
    if (inf_) return false;
    if (o.inf_) return true;
    return v_ < o.v_;
  }
  bool operator<=(const Valuation& o) const { return *this < o || *this == o; }

 private:
  bool inf_;
  long v_;
};

/// Deterministic primality check. Trial division for small n, Miller-Rabin
/// with a witness set covering all 64-bit integers otherwise; inputs beyond
/// 64 bits fall back to GMP's test with many rounds.
bool is_prime(const mpz_class& n);

/// The prime p together with a working precision k; all Z/p^k arithmetic
/// flows through one of these. p = 2 is rejected.
class PadicContext {
 public:
  PadicContext(mpz_class p, unsigned k);

  const mpz_class& p() const { return p_; }
  unsigned k() const { return k_; }
  const mpz_class& modulus() const { return modulus_; }

  /// Same prime, different precision.
  PadicContext with_precision(unsigned k) const { return PadicContext(p_, k); }

  /// Canonical residue in [0, p^k).
  mpz_class reduce(const mpz_class& a) const;

 private:
  mpz_class p_;
  unsigned k_;
  mpz_class modulus_;
};

/// Exact exponent of p in n; infinite for n = 0.
Valuation ord_p(const mpz_class& n, const mpz_class& p);

/// n / p^ord_p(n); requires n != 0.
mpz_class unit_part(const mpz_class& n, const mpz_class& p);

/// base^exp mod p^k by binary powering; exp >= 0.
mpz_class mod_pow(const mpz_class& base, const mpz_class& exp,
                  const PadicContext& ctx);

/// Inverse of a mod p^k; throws not_a_unit_error when p | a.
mpz_class mod_inverse(const mpz_class& a, const PadicContext& ctx);

/// g = gcd(a,b) > 0 and R*a + S*b = g with the minimal Bezout pair
/// (|R| <= |b|/g, |S| <= |a|/g). Throws on a = b = 0.
std::tuple<mpz_class, mpz_class, mpz_class> extended_gcd(const mpz_class& a,
                                                         const mpz_class& b);

/// Lagrange-Gauss reduction of the rank-2 lattice
/// {(e*a2 mod m, e*a3 mod m) : e in Z} with m = p-1. Returns (e, m2, m3)
/// with e*a_i = m_i mod m and |m_i| <= gcd(a2,a3,m)*sqrt(2m).
std::tuple<mpz_class, mpz_class, mpz_class> lagrange_gauss_reduce(
    const mpz_class& a2, const mpz_class& a3, const mpz_class& modulus);

/// Smallest positive primitive root mod p (p an odd prime).
mpz_class primitive_root(const mpz_class& p);

}  // namespace padic
