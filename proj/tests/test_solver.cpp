#include <doctest.h>

#include <algorithm>

#include "padic/oracle.hpp"
#include "padic/solver.hpp"

using namespace padic;

TEST_CASE("binomial root counts over Q_17") {
  CHECK(count_binomial_roots(SparsePoly::parse("1 - x^340"), 17) == 4);
  CHECK(count_binomial_roots(SparsePoly::parse("1 - x^397"), 17) == 1);
  // valuation congruence fails: ord(c1) - ord(c2) not divisible by d
  CHECK(count_binomial_roots(SparsePoly::parse("3 - x^2"), 3) == 0);
  // x^2 = -1 has no solution mod 3
  CHECK(count_binomial_roots(SparsePoly::parse("1 + x^2"), 3) == 0);
  CHECK(count_binomial_roots(SparsePoly::parse("1 + x^2"), 5) == 2);
}

TEST_CASE("binomial solving emits certified digits") {
  SolveReport rep = solve_binomial(SparsePoly::parse("1 - x^340"), 17);
  REQUIRE(rep.root_count == 4);
  REQUIRE(rep.roots.size() == 4);
  CHECK(rep.certified);
  std::vector<long> first, second;
  for (const auto& r : rep.roots) {
    REQUIRE(r.prefix_digits.size() >= 2);
    first.push_back(r.prefix_digits[0]);
    second.push_back(r.prefix_digits[1]);
    CHECK(r.valuation == 0);
    CHECK(r.denominator == 1);
    CHECK(r.cert_j >= 1);
  }
  CHECK(first == (std::vector<long>{1, 4, 13, 16}));
  CHECK(second == (std::vector<long>{0, 2, 14, 16}));
  CHECK(std::is_sorted(rep.roots.begin(), rep.roots.end(), root_order));
}

TEST_CASE("binomial roots with nonzero valuation") {
  // 1 - 3x: the single root 1/3 has valuation -1
  SolveReport rep = solve_binomial(SparsePoly::parse("1 - 3*x"), 3);
  REQUIRE(rep.root_count == 1);
  CHECK(rep.roots[0].valuation == -1);
  CHECK(rep.roots[0].numerator == 1);
  CHECK(rep.roots[0].denominator == 3);
  // 9 - x^2: the exact roots +-3 are 5-adic units
  SolveReport rep2 = solve_binomial(SparsePoly::parse("9 - x^2"), 5);
  REQUIRE(rep2.root_count == 2);
  std::vector<long> msd;
  for (const auto& r : rep2.roots) {
    CHECK(r.valuation == 0);
    CHECK(r.denominator == 1);
    msd.push_back(r.prefix_digits[0]);
  }
  std::sort(msd.begin(), msd.end());
  CHECK(msd == (std::vector<long>{2, 3}));  // -3 = 2 mod 5
}

TEST_CASE("trinomial golden example over Q_3") {
  SolveReport rep = solve(SparsePoly::parse("x^10 - 10*x + 738"), 3);
  REQUIRE(rep.root_count == 4);
  CHECK(rep.certified);
  CHECK(rep.zero_root_multiplicity == 0);
  // three unit roots, then the valuation-2 root, in digit order
  CHECK(rep.roots[0].valuation == 0);
  CHECK(rep.roots[1].valuation == 0);
  CHECK(rep.roots[2].valuation == 0);
  CHECK(rep.roots[3].valuation == 2);
  std::vector<std::vector<long>> lead;
  for (const auto& r : rep.roots) {
    lead.push_back({r.prefix_digits[0], r.prefix_digits[1],
                    r.prefix_digits[2]});
  }
  CHECK(lead[0] == (std::vector<long>{1, 0, 1}));
  CHECK(lead[1] == (std::vector<long>{1, 0, 2}));
  CHECK(lead[2] == (std::vector<long>{1, 1, 2}));
  CHECK(lead[3] == (std::vector<long>{0, 0, 1}));
  // the valuation-2 root continues 0,2,2,...
  CHECK(rep.roots[3].prefix_digits[3] == 0);
  CHECK(rep.roots[3].prefix_digits[4] == 2);
  CHECK(rep.roots[3].prefix_digits[5] == 2);
  // every root comes with a usable quadratic-convergence certificate
  for (const auto& r : rep.roots) {
    CHECK(r.cert_j >= 1);
    SparsePoly model = SparsePoly::parse("x^10 - 10*x + 738")
                           .rescale_valuation(3, r.valuation);
    long ord = ord_of_value(model, r.unit_value, 3,
                            static_cast<unsigned>(2 * r.ell + r.cert_j + 4));
    CHECK(ord >= 2 * r.ell + r.cert_j);
  }
}

TEST_CASE("degenerate trinomial roots carry multiplicity two") {
  auto roots = degenerate_roots_trinomial(SparsePoly::parse("1 - 2*x + x^2"),
                                          5);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].numerator == 1);
  CHECK(roots[0].denominator == 1);
  CHECK(roots[0].multiplicity == 2);
  CHECK(roots[0].degenerate);
  SolveReport rep = solve(SparsePoly::parse("1 - 2*x + x^2"), 5);
  CHECK(rep.root_count == 1);
  // 4 - 4x + x^2 = (x-2)^2
  auto r2 = degenerate_roots_trinomial(SparsePoly::parse("4 - 4*x + x^2"), 7);
  REQUIRE(r2.size() == 1);
  CHECK(r2[0].numerator == 2);
  // x^2 + x + 1 is square-free: no degenerate roots anywhere
  CHECK(degenerate_roots_trinomial(SparsePoly::parse("1 + x + x^2"), 7)
            .empty());
}

TEST_CASE("trinomial counts match the oracle on small cases") {
  struct Case {
    const char* text;
    long p;
  };
  for (const Case& c : {Case{"1 + x + x^2", 3}, Case{"1 + x + x^2", 7},
                        Case{"3 - x^2", 3}, Case{"1 - 4*x + 3*x^2", 3},
                        Case{"16 - 14*x^7 + 9*x^8", 3},
                        Case{"2 + 5*x^3 - 7*x^9", 5}}) {
    SparsePoly f = SparsePoly::parse(c.text);
    SolveReport rep = solve(f, c.p);
    CHECK(rep.certified);
    CHECK(rep.root_count == count_qp_roots_oracle(f, c.p));
  }
}

TEST_CASE("adaptive policy agrees with the resultant policy") {
  PrecisionPolicy adaptive;
  adaptive.kind = PolicyKind::AdaptiveDoubling;
  for (const char* text : {"x^10 - 10*x + 738", "1 - 4*x + 3*x^2",
                           "1 + x + x^2", "2 + 5*x^3 - 7*x^9"}) {
    SparsePoly f = SparsePoly::parse(text);
    SolveReport a = solve(f, 3, adaptive);
    SolveReport b = solve(f, 3);
    CHECK(a.certified);
    CHECK(a.root_count == b.root_count);
    REQUIRE(a.roots.size() == b.roots.size());
    for (std::size_t i = 0; i < a.roots.size(); ++i) {
      CHECK(a.roots[i].valuation == b.roots[i].valuation);
      CHECK(a.roots[i].prefix_digits[0] == b.roots[i].prefix_digits[0]);
    }
  }
}

TEST_CASE("solve handles monomials, zero roots, and content") {
  SolveReport rep = solve(SparsePoly::parse("5*x^3"), 3);
  CHECK(rep.root_count == 1);
  CHECK(rep.zero_root_multiplicity == 3);
  CHECK(rep.roots.empty());
  // x divides out before dispatch; content does not affect roots
  SolveReport a = solve(SparsePoly::parse("x^3 - x^13"), 17);
  SolveReport b = solve(SparsePoly::parse("7 - 7*x^10"), 17);
  CHECK(a.zero_root_multiplicity == 3);
  CHECK(a.root_count == b.root_count + 1);
  CHECK(solve(SparsePoly::parse("6 - 10*x + 14*x^5"), 7).root_count ==
        solve(SparsePoly::parse("3 - 5*x + 7*x^5"), 7).root_count);
}

TEST_CASE("four or more terms are rejected loudly") {
  CHECK_THROWS_AS(solve(SparsePoly::parse("1 + x + x^2 + x^3"), 3),
                  unsupported_error);
  CHECK_THROWS_AS(solve(SparsePoly::parse("1 + x + x^2 + x^3 + x^9"), 3),
                  unsupported_error);
}

TEST_CASE("root ordering is deterministic") {
  ApproxRoot a, b;
  a.valuation = 0;
  b.valuation = 1;
  a.prefix_digits = {2, 2};
  b.prefix_digits = {1};
  CHECK(root_order(a, b));       // valuation first
  b.valuation = 0;
  CHECK(root_order(b, a));       // then prefix, lexicographic
  b.prefix_digits = {2};
  CHECK(root_order(b, a));       // shorter prefix wins a tie
}
