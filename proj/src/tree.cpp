#include "padic/tree.hpp"

#include <deque>

namespace padic {

namespace {

mpz_class pow_p(const mpz_class& p, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
  return r;
}

mpz_class prefix_value(const std::vector<long>& digits, const mpz_class& p) {
  mpz_class v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * p + digits[i];
  return v;
}

}  // namespace

long s_value(const SparsePoly& f, long zeta0, const PadicContext& ctx) {
  const long k = ctx.k();
  if (f.is_zero()) return k;
  const long dmax = std::min<long>(f.degree(), k);
  long s = k;
  for (long i = 0; i <= dmax && i < s; ++i) {
    mpz_class t = f.taylor_coeff(zeta0, i, ctx);
    long val = (t == 0) ? k : ord_p(t, ctx.p()).value();
    if (i == 0 && val == 0) {
      throw not_a_root_error("digit is not a root of the mod-p reduction");
    }
    long cand = i + std::min(val, k);
    if (cand < s) s = cand;
  }
  return std::min(s, k);
}

SparsePoly child_poly(const SparsePoly& f, long zeta0, long s,
                      const PadicContext& ctx) {
  const long k = ctx.k();
  const long k_child = k - s;
  if (s < 1 || k_child < 1) throw error("child_poly: invalid s");
  PadicContext cctx = ctx.with_precision(static_cast<unsigned>(k_child));
  std::vector<SparsePoly::Term> terms;
  const long dmax =
      f.is_zero() ? -1 : std::min<long>(f.degree(), s + k_child - 1);
  for (long i = 0; i <= dmax; ++i) {
    mpz_class t = f.taylor_coeff(zeta0, i, ctx);
    mpz_class c;
    if (i < s) {
      mpz_class pw = pow_p(ctx.p(), static_cast<unsigned long>(s - i));
      if (!mpz_divisible_p(t.get_mpz_t(), pw.get_mpz_t())) {
        throw error("child_poly: coefficient not divisible by p^(s-i)");
      }
      c = cctx.reduce(t / pw);
    } else {
      c = cctx.reduce(t * pow_p(ctx.p(), static_cast<unsigned long>(i - s)));
    }
    if (c != 0) terms.push_back({i, c});
  }
  return SparsePoly(std::move(terms));
}

NodalTree build_tree(const SparsePoly& f, const PadicContext& ctx) {
  NodalTree tree;
  tree.p = ctx.p();
  tree.k = ctx.k();

  NodalNode root;
  root.poly = f.reduce(ctx);
  root.k_node = ctx.k();
  tree.nodes.push_back(std::move(root));

  const long pl = ctx.p().get_si();  // digit scans assume p fits a machine word
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t idx = queue.front();
    queue.pop_front();
    PadicContext nctx = ctx.with_precision(tree.nodes[idx].k_node);
    PadicContext mod_p(ctx.p(), 1);
    // copy node data: pushing children may reallocate tree.nodes
    const SparsePoly g = tree.nodes[idx].poly;
    const std::vector<long> node_prefix = tree.nodes[idx].prefix;
    const int node_depth = tree.nodes[idx].depth;
    const long node_s_sum = tree.nodes[idx].s_sum;
    const long k_node = tree.nodes[idx].k_node;
    if (g.is_zero()) continue;
    const long deg = g.degree();
    for (long x = 0; x < pl; ++x) {
      if (g.eval_mod(x, mod_p) != 0) continue;
      bool degenerate =
          deg < 1 || g.taylor_coeff(x, 1, mod_p) == 0;
      if (!degenerate) {
        tree.nodes[idx].nondeg_digits.push_back(x);
        continue;
      }
      tree.nodes[idx].deg_digits.push_back(x);
      long s = s_value(g, x, nctx);
      if (s >= k_node) {
        tree.precision_exhausted = true;
        auto pref = node_prefix;
        pref.push_back(x);
        tree.exhausted_prefixes.push_back(std::move(pref));
        continue;
      }
      if (s == 1) continue;  // ord_p f(x + pZ_p) is exactly 1: no root here
      NodalNode child;
      child.depth = node_depth + 1;
      child.prefix = node_prefix;
      child.prefix.push_back(x);
      child.poly = child_poly(g, x, s, nctx);
      child.k_node = static_cast<unsigned>(k_node - s);
      child.s_consumed = s;
      child.s_sum = node_s_sum + s;
      child.parent = idx;
      tree.max_depth = std::max(tree.max_depth, child.depth);
      tree.nodes.push_back(std::move(child));
      tree.nodes[idx].children.push_back(tree.nodes.size() - 1);
      queue.push_back(tree.nodes.size() - 1);
    }
  }
  return tree;
}

long count_nondegenerate_roots(const NodalTree& tree) {
  long total = 0;
  for (const auto& n : tree.nodes) {
    total += static_cast<long>(n.nondeg_digits.size());
  }
  return total;
}

std::vector<RootSeed> root_seeds(const NodalTree& tree) {
  std::vector<RootSeed> seeds;
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& n = tree.nodes[i];
    for (long d : n.nondeg_digits) {
      RootSeed s;
      s.prefix = n.prefix;
      s.prefix.push_back(d);
      s.depth = n.depth;
      s.ell = n.s_sum - n.depth;
      s.k_node = n.k_node;
      s.node_index = i;
      seeds.push_back(std::move(s));
    }
  }
  return seeds;
}

mpz_class lift_seed(const NodalTree& tree, const RootSeed& seed) {
  const NodalNode& node = tree.nodes[seed.node_index];
  PadicContext nctx(tree.p, node.k_node);
  const SparsePoly& g = node.poly;
  mpz_class z = seed.prefix.back();
  // g'(z) is a unit here, so plain Newton doubles precision each pass
  for (unsigned it = 0; it < 8 * sizeof(unsigned) && g.eval_mod(z, nctx) != 0;
       ++it) {
    mpz_class gd = g.taylor_coeff(z, 1, nctx);
    z = nctx.reduce(z - g.eval_mod(z, nctx) * mod_inverse(gd, nctx));
  }
  if (g.eval_mod(z, nctx) != 0) {
    throw error("lift_seed: Newton iteration failed to converge");
  }
  std::vector<long> pref(seed.prefix.begin(), seed.prefix.end() - 1);
  return prefix_value(pref, tree.p) + pow_p(tree.p, node.depth) * z;
}

}  // namespace padic
