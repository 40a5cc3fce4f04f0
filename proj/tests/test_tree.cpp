#include <doctest.h>

#include <random>

#include "padic/hensel.hpp"
#include "padic/tree.hpp"

using namespace padic;

namespace {

mpz_class pow_p(const mpz_class& p, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
  return r;
}

mpz_class prefix_value(const std::vector<long>& prefix, const mpz_class& p) {
  mpz_class v = 0, pw = 1;
  for (long d : prefix) {
    v += d * pw;
    pw *= p;
  }
  return v;
}

}  // namespace

TEST_CASE("s_value and child_poly on x^10 - 10x + 738 over Q_3") {
  SparsePoly f = SparsePoly::parse("x^10 - 10*x + 738");
  PadicContext ctx(3, 9);
  CHECK(s_value(f, 0, ctx) == 1);  // simple root: s = 1, no descent
  CHECK(s_value(f, 1, ctx) == 4);  // degenerate digit
  CHECK_THROWS_AS(s_value(f, 2, ctx), not_a_root_error);

  SparsePoly child = child_poly(f, 1, 4, ctx);  // mod 3^5
  CHECK(child.coeff(0) == 9);
  CHECK(child.coeff(1) == 0);
  CHECK(child.coeff(2) == 5);
  CHECK(child.coeff(3) == 40);
  CHECK(child.coeff(4) == 210);
}

TEST_CASE("digit-refinement tree of the running example, k = 9") {
  SparsePoly f = SparsePoly::parse("x^10 - 10*x + 738");
  PadicContext ctx(3, 9);
  NodalTree tree = build_tree(f, ctx);

  REQUIRE(tree.nodes.size() == 3);  // a single chain
  CHECK(tree.max_depth == 2);
  CHECK_FALSE(tree.precision_exhausted);

  const NodalNode& root = tree.nodes[0];
  CHECK(root.nondeg_digits == std::vector<long>{0});
  CHECK(root.deg_digits == std::vector<long>{1});

  const NodalNode& c1 = tree.nodes[1];
  CHECK(c1.prefix == std::vector<long>{1});
  CHECK(c1.s_consumed == 4);
  CHECK(c1.s_sum == 4);
  CHECK(c1.k_node == 5);
  // mod 27 this is the hand-checked child 9 + 5x^2 + 13x^3 + 21x^4
  PadicContext c27(3, 3);
  SparsePoly r = c1.poly.reduce(c27);
  CHECK(r == SparsePoly::parse("9 + 5*x^2 + 13*x^3 + 21*x^4"));
  CHECK(c1.nondeg_digits == std::vector<long>{1});
  CHECK(c1.deg_digits == std::vector<long>{0});

  const NodalNode& c2 = tree.nodes[2];
  CHECK(c2.prefix == (std::vector<long>{1, 0}));
  CHECK(c2.s_consumed == 2);
  CHECK(c2.s_sum == 6);
  PadicContext c3(3, 1);
  CHECK(c2.poly.reduce(c3) == SparsePoly::parse("1 + 2*x^2"));
  CHECK(c2.nondeg_digits == (std::vector<long>{1, 2}));
  CHECK(c2.deg_digits.empty());

  CHECK(count_nondegenerate_roots(tree) == 4);

  auto seeds = root_seeds(tree);
  REQUIRE(seeds.size() == 4);
  // ell = s_sum - depth at each seed's node
  for (const auto& s : seeds) {
    CHECK(s.ell == tree.nodes[s.node_index].s_sum - s.depth);
    mpz_class z = lift_seed(tree, s);
    unsigned digits = s.depth + tree.nodes[s.node_index].k_node;
    PadicContext cz(3, digits);
    CHECK(f.eval_mod(z, cz) == 0);
    CHECK(digits_of(z, 3, s.prefix.size()) == s.prefix);
  }
}

TEST_CASE("node polynomials satisfy the shift/rescale identity") {
  SparsePoly f = SparsePoly::parse("x^10 - 10*x + 738");
  PadicContext ctx(3, 9);
  NodalTree tree = build_tree(f, ctx);
  std::mt19937 rng(31);
  for (const NodalNode& n : tree.nodes) {
    mpz_class base = prefix_value(n.prefix, tree.p);
    mpz_class shift = pow_p(tree.p, n.depth);
    mpz_class scale = pow_p(tree.p, n.s_sum);
    PadicContext cw(tree.p, n.s_sum + n.k_node);
    PadicContext cn(tree.p, n.k_node);
    for (int trial = 0; trial < 8; ++trial) {
      mpz_class x = rng() % 243;
      mpz_class lhs = f.eval_mod(base + shift * x, cw);
      mpz_class rhs = cw.reduce(scale * n.poly.eval_mod(x, cn));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("insufficient precision is flagged, not mis-counted") {
  SparsePoly f = SparsePoly::parse("x^10 - 10*x + 738");
  PadicContext ctx(3, 6);
  NodalTree tree = build_tree(f, ctx);
  CHECK(tree.precision_exhausted);
  REQUIRE(tree.exhausted_prefixes.size() == 1);
  CHECK(tree.exhausted_prefixes[0] == (std::vector<long>{1, 0}));
  CHECK(tree.nodes.size() == 2);
}

TEST_CASE("binomial trees over Q_17") {
  PadicContext ctx(17, 4);
  NodalTree t340 = build_tree(SparsePoly::parse("1 - x^340"), ctx);
  CHECK(count_nondegenerate_roots(t340) == 4);
  // every mod-17 root is degenerate (17 | 340), so each spawns a child
  CHECK(t340.nodes.size() == 5);
  CHECK(t340.nodes[0].nondeg_digits.empty());
  CHECK(t340.nodes[0].deg_digits == (std::vector<long>{1, 4, 13, 16}));

  NodalTree t397 = build_tree(SparsePoly::parse("1 - x^397"), ctx);
  CHECK(count_nondegenerate_roots(t397) == 1);
  CHECK(t397.nodes.size() == 1);
  CHECK(t397.nodes[0].nondeg_digits == std::vector<long>{1});
}

TEST_CASE("mod-p image of every node has degree at most the consumed s") {
  SparsePoly f = SparsePoly::parse("x^10 - 10*x + 738");
  PadicContext ctx(3, 9);
  NodalTree tree = build_tree(f, ctx);
  PadicContext c3(3, 1);
  for (const NodalNode& n : tree.nodes) {
    if (n.depth == 0) continue;
    SparsePoly img = n.poly.reduce(c3);
    REQUIRE_FALSE(img.is_zero());
    CHECK(img.degree() <= n.s_consumed);
  }
}
