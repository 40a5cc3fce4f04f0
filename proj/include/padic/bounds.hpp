// Explicit root-separation bounds: the p-adic linear-forms-in-logarithms
// valuation bound, the binomial separation bound, and the trinomial
// separation pipeline. All real arithmetic rounds upward so the returned
// values are valid (possibly loose) upper bounds.
#pragma once

#include <string>
#include <vector>

#include <mpfr.h>

#include "padic/poly.hpp"

namespace padic {

struct domain_error : error {
  using error::error;
};

/// Upper bound on ord_p(a_1^{b_1} ... a_n^{b_n} - 1):
///   11145 * (24(n+1)^2/log p)^{n+2} * (p-1) * (prod logA_i) * log(4B)
///     * max{ log(2^12 * 3n(n+1) * logA_n), (log p)/n }
/// with logB = log B. Inputs are natural logs; logA must be non-decreasing
/// with logA_i >= log p and logB >= log 3.
/// The result is written into `out` (initialized by the caller) using the
/// given precision and rounding mode.
void yu_valuation_bound_mpfr(mpfr_t out, unsigned n, const mpz_class& p,
                             const std::vector<double>& logA, double logB,
                             mpfr_prec_t prec, mpfr_rnd_t rnd);

/// Same bound as a double, rounded up.
double yu_valuation_bound(unsigned n, const mpz_class& p,
                          const std::vector<double>& logA, double logB);

/// Upper bound on |log |z1 - z2|_p| for distinct roots of c1 + c2 x^d with
/// |c_i| <= H. Pass p = 0 for the Archimedean case (documentation only).
double binomial_separation_bound(long d, const mpz_class& H,
                                 const mpz_class& p);

struct TrinomialBound {
  double input_size_s = 0;   // sum of log((|c_i|+2)(|a_i|+2))
  double ord_bound = 0;      // upper bound on ord_p(z1 - z2)
  double log_bound = 0;      // ord_bound * log p = bound on |log |z1-z2|_p|
  long k_required = 0;       // ceil(2*ord_bound + 1), clamped to LONG_MAX
};

/// Separation bound for a (square-free) trinomial via the valuation bound
/// with n = 2, A_i = max{e^{2s}, p}, B = max{e^s, 3}, plus the p-adic Rolle
/// correction 1/(p-1).
TrinomialBound trinomial_separation_bound(const SparsePoly& f,
                                          const mpz_class& p);

}  // namespace padic
