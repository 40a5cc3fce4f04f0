// Independent brute-force check: count roots in Q_p by square-free
// reduction, per-valuation rescaling, and level-by-level enumeration of
// residues mod p^k, certifying each surviving residue. Slow but it shares no
// machinery with the solvers beyond basic arithmetic.
#pragma once

#include <vector>

#include "padic/poly.hpp"

namespace padic {

/// All residues r in [0, p^k) with f(r) = 0 mod p^k, by scanning every
/// residue. Each evaluation costs one unit of budget; p^k > budget throws
/// budget_error before any work.
std::vector<mpz_class> exhaustive_roots_mod(const SparsePoly& f,
                                            const PadicContext& ctx,
                                            unsigned long budget = 10000000);

/// ord_p Res(f, f') by exact subresultant computation on the dense form.
/// Throws not_square_free_error when the resultant vanishes.
long resultant_valuation(const SparsePoly& f, const mpz_class& p);

/// Number of distinct roots of f in Q_p (including 0). Budget counts
/// polynomial evaluations across the whole computation.
long count_qp_roots_oracle(const SparsePoly& f, const mpz_class& p,
                           unsigned long budget = 10000000);

}  // namespace padic
