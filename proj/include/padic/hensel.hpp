// Newton iteration in Z_p: single certified steps, lifting to a target
// precision, and certificates that an approximant converges quadratically.
#pragma once

#include <optional>
#include <vector>

#include "padic/poly.hpp"

namespace padic {

struct hensel_precondition_error : error {
  using error::error;
};

/// Certificate for an approximate root z0 = numerator/denominator of f:
/// ord_p f(z0) >= 2*ell + cert_j with ell = ord_p f'(z0) and cert_j >= 1,
/// so Newton steps from z0 converge quadratically to a unique root.
struct ApproxRoot {
  mpz_class numerator = 0;
  mpz_class denominator = 1;  // a power of p
  long valuation = 0;
  std::vector<long> prefix_digits;  // leading digits of the Z_p-side root
  mpz_class unit_value = 0;         // unit part of the root, mod p^unit_k
  unsigned unit_k = 0;
  long ell = 0;
  long cert_j = 1;
  bool degenerate = false;
  int multiplicity = 1;
};

/// ord_p f(z), determined by evaluating mod p^max_window; returns max_window
/// when f(z) vanishes to at least that order.
long ord_of_value(const SparsePoly& f, const mpz_class& z, const mpz_class& p,
                  unsigned max_window);

/// One Newton step z' = z - f(z)/f'(z) carried out mod p^k (the context's
/// precision). Requires ord_p f(z) >= 2*ell + 1 for ell = ord_p f'(z).
mpz_class hensel_step(const SparsePoly& f, const mpz_class& z,
                      const PadicContext& ctx);

/// Iterate Newton steps until f(z) = 0 mod p^{K + ell}; the result is the
/// unique associated root mod p^K. seed must satisfy the step precondition.
mpz_class lift_to_precision(const SparsePoly& f, const mpz_class& seed,
                            unsigned K, const mpz_class& p);

std::vector<long> digits_of(const mpz_class& value, const mpz_class& p,
                            unsigned count);

struct CertifyResult {
  bool certified = false;
  long ell = 0;    // ord_p f'(z0) (meaningful if finite within the window)
  long ord_f = 0;  // ord_p f(z0), clamped to the window
  long cert_j = 0;
  std::string reason;
};

/// Check the quadratic-convergence precondition at an integer residue z0.
CertifyResult certify_root(const SparsePoly& f, const mpz_class& z0,
                           const mpz_class& p, unsigned window);

}  // namespace padic
