// Hard tetranomial family: sparse degree-d polynomials with two genuinely
// distinct Z_p roots that agree to ~(h-1)d/2 base-p digits, so any solver
// that separates roots digit-by-digit needs precision linear in d.
#pragma once

#include "padic/poly.hpp"

namespace padic {

struct tetra_parameter_error : error {
  using error::error;
};
struct tetra_precision_error : error {
  using error::error;
};

struct TetranomialInstance {
  mpz_class p;
  long h = 0;
  long d = 0;
  SparsePoly poly;         // p^{2h} x^d - x^2 + 2 p^{h-1} x - p^{2h-2}
  long beta = 0;           // (h-1)d/2 + h: valuation scale of the root pair
  long expected_gap = 0;   // lower bound on ord_p(x_1 - x_2), equals beta
};

/// Requires h >= 3, d even with 4 <= d <= floor(e^h), p an odd prime.
TetranomialInstance make_instance(const mpz_class& p, long h, long d);

struct SeparationResult {
  long measured_gap = 0;        // ord_p(x_1 - x_2), exact
  long digits_to_distinguish = 0;  // measured_gap + 1
  mpz_class root1, root2;       // the two roots mod p^{beta + K}
  long ord_f_root1 = 0;         // ord_p f(root_i), clamped to the window;
  long ord_f_root2 = 0;         // both >= 2*beta + K certifies genuineness
};

/// Lift the two roots to total precision K (base-p digits) and measure
/// their separation. Requires K > expected_gap + 4; anything less cannot
/// even represent the digits where the roots first differ.
SeparationResult measure_separation(const TetranomialInstance& inst,
                                    unsigned K);

/// measured_gap + 1: how many base-p digits a solver must resolve before
/// the two expansions differ.
long digits_to_distinguish(const TetranomialInstance& inst, unsigned K);

}  // namespace padic
