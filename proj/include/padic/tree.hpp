// The digit-refinement tree of a polynomial mod p^k: each node carries a
// shifted/rescaled polynomial attached to a base-p digit prefix. Summing the
// non-degenerate mod-p root counts over all nodes counts the non-degenerate
// Z_p roots once the precision k dominates the root separation.
#pragma once

#include <cstddef>
#include <vector>

#include "padic/poly.hpp"

namespace padic {

struct not_a_root_error : error {
  using error::error;
};
struct nondegenerate_digit_error : error {
  using error::error;
};

struct NodalNode {
  int depth = 0;
  std::vector<long> prefix;        // digits, least significant first
  SparsePoly poly;                 // reduced mod p^k_node (dense below root)
  unsigned k_node = 0;
  long s_consumed = -1;            // -1 at the root
  long s_sum = 0;                  // sum of s along the path from the root
  std::size_t parent = 0;          // index into NodalTree::nodes
  std::vector<long> nondeg_digits; // non-degenerate roots of the mod-p image
  std::vector<long> deg_digits;    // degenerate roots of the mod-p image
  std::vector<std::size_t> children;
};

struct NodalTree {
  mpz_class p;
  unsigned k = 0;
  std::vector<NodalNode> nodes;  // breadth-first; nodes[0] is the root
  bool precision_exhausted = false;
  // prefixes (node prefix + digit) whose descent was cut off by precision
  std::vector<std::vector<long>> exhausted_prefixes;
  int max_depth = 0;
};

/// s(f, zeta0) = min_i { i + ord_p(f^{(i)}(zeta0)/i!) } computed mod p^k;
/// values >= k are clamped to k (meaning "at least k").
/// Throws not_a_root_error when zeta0 is not a root of f mod p.
long s_value(const SparsePoly& f, long zeta0, const PadicContext& ctx);

/// The polynomial [(1/p^s) f(zeta0 + p x)] mod p^{k-s} attached to extending
/// the prefix by digit zeta0. Requires 2 <= s <= k-1 (s = s_value).
SparsePoly child_poly(const SparsePoly& f, long zeta0, long s,
                      const PadicContext& ctx);

NodalTree build_tree(const SparsePoly& f, const PadicContext& ctx);

/// Sum over nodes of the number of non-degenerate mod-p roots; equals the
/// number of non-degenerate Z_p roots of f for k past the separation bound.
long count_nondegenerate_roots(const NodalTree& tree);

struct RootSeed {
  std::vector<long> prefix;  // node prefix plus the non-degenerate digit
  int depth = 0;             // node depth
  long ell = 0;              // ord_p f'(root) = s_sum - depth
  unsigned k_node = 0;
  std::size_t node_index = 0;
};

std::vector<RootSeed> root_seeds(const NodalTree& tree);

/// Refine a seed inside its node: Newton-lift the node-local root to the
/// node's full precision and return the Z_p root of f mod p^{depth + k_node}
/// (that is, mod p^{k - ell} digits, all certified).
mpz_class lift_seed(const NodalTree& tree, const RootSeed& seed);

}  // namespace padic
