// Lower Newton polygon of a polynomial at a prime: exact rational slopes,
// valuation census of roots, and the integral-slope feasibility screen.
#pragma once

#include <vector>

#include "padic/poly.hpp"

namespace padic {

struct single_term_error : error {
  using error::error;
};

struct PolygonEdge {
  long from_exp;
  long from_val;
  long to_exp;
  long to_val;
  mpq_class slope;  // (to_val - from_val) / (to_exp - from_exp)
  long length;      // to_exp - from_exp
};

/// Lower edges of the convex hull of {(a_i, ord_p c_i)}, left to right
/// (strictly increasing slope). Throws single_term_error when t = 1.
std::vector<PolygonEdge> lower_hull(const SparsePoly& f, const mpz_class& p);

/// (valuation, count) pairs: roots in C_p of valuation v = -slope, counted
/// with multiplicity = horizontal length. Requires f(0) != 0.
std::vector<std::pair<mpq_class, long>> roots_by_valuation(const SparsePoly& f,
                                                           const mpz_class& p);

struct IntegralCandidates {
  bool any = false;
  std::vector<long> valuations;  // descending (polygon order)
};

/// Integer-valued root valuations admitted by the polygon; empty means f can
/// have no roots in Q_p other than 0.
IntegralCandidates has_integral_valuation_candidates(const SparsePoly& f,
                                                     const mpz_class& p);

}  // namespace padic
