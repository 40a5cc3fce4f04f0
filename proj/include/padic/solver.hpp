// Exact root counting and solving over Q_p for binomials and trinomials,
// with certified approximate roots and selectable precision policies.
#pragma once

#include <string>
#include <vector>

#include "padic/hensel.hpp"
#include "padic/polygon.hpp"
#include "padic/tree.hpp"

namespace padic {

struct unsupported_error : error {
  using error::error;
};
struct precision_not_certified_error : error {
  using error::error;
};

enum class PolicyKind { ExactResultant, AdaptiveDoubling, YuFormula };

struct PrecisionPolicy {
  PolicyKind kind = PolicyKind::ExactResultant;
  unsigned initial_k = 0;  // 0 = derive from the polynomial
  unsigned k_cap = 4096;
  long dense_cap = 2000;
};

struct SolveReport {
  long root_count = 0;  // distinct roots in Q_p, including 0 when present
  std::vector<ApproxRoot> roots;  // the nonzero roots, deterministically sorted
  long zero_root_multiplicity = 0;
  PolicyKind policy = PolicyKind::ExactResultant;
  unsigned final_k = 0;
  bool certified = true;
  std::string message;
  std::vector<PolygonEdge> polygon;
  long tree_nodes = 0;
  int tree_depth = 0;
};

/// 0 or gcd(d, p-1), by the valuation-congruence and unit-power tests.
long count_binomial_roots(const SparsePoly& f, const mpz_class& p);

/// All roots in Q_p of a binomial, as certified approximate roots.
SolveReport solve_binomial(const SparsePoly& f, const mpz_class& p);

/// Roots of a trinomial that are also roots of its derivative (each has
/// multiplicity exactly 2), found by combining the two binomial conditions
/// through a Bezout relation on the exponents and filtering candidates
/// against both original conditions exactly.
std::vector<ApproxRoot> degenerate_roots_trinomial(const SparsePoly& f,
                                                   const mpz_class& p,
                                                   unsigned digits_target = 16);

SolveReport solve_trinomial(const SparsePoly& f, const mpz_class& p,
                            const PrecisionPolicy& policy);

/// Dispatch on the term count after stripping powers of x and content.
SolveReport solve(const SparsePoly& f, const mpz_class& p,
                  const PrecisionPolicy& policy = {});

/// Deterministic ordering: valuation, then digit prefix.
bool root_order(const ApproxRoot& a, const ApproxRoot& b);

}  // namespace padic
