#include <doctest.h>

#include "padic/polygon.hpp"

using namespace padic;

TEST_CASE("lower hull of x^10 - 10x + 738 at p = 3") {
  SparsePoly f = SparsePoly::parse("x^10 - 10*x + 738");
  auto edges = lower_hull(f, 3);
  REQUIRE(edges.size() == 2);
  CHECK(edges[0].from_exp == 0);
  CHECK(edges[0].from_val == 2);
  CHECK(edges[0].to_exp == 1);
  CHECK(edges[0].to_val == 0);
  CHECK(edges[0].slope == mpq_class(-2));
  CHECK(edges[0].length == 1);
  CHECK(edges[1].from_exp == 1);
  CHECK(edges[1].to_exp == 10);
  CHECK(edges[1].slope == 0);
  CHECK(edges[1].length == 9);

  auto census = roots_by_valuation(f, 3);
  REQUIRE(census.size() == 2);
  CHECK(census[0].first == mpq_class(2));  // one root of valuation 2
  CHECK(census[0].second == 1);
  CHECK(census[1].first == 0);  // nine unit roots in C_3
  CHECK(census[1].second == 9);
}

TEST_CASE("fractional slopes are reported exactly") {
  SparsePoly f = SparsePoly::parse("3 + 9*x + x^3");
  auto edges = lower_hull(f, 3);
  REQUIRE(edges.size() == 1);
  CHECK(edges[0].slope == mpq_class(-1, 3));
  CHECK(edges[0].length == 3);
  auto cands = has_integral_valuation_candidates(f, 3);
  CHECK_FALSE(cands.any);
  CHECK(cands.valuations.empty());
}

TEST_CASE("integral candidates are the negated integer slopes, descending") {
  // (1 - 3x)(1 - x) = 1 - 4x + 3x^2: slopes -1 and 1
  SparsePoly f = SparsePoly::parse("1 - 4*x + 3*x^2");
  auto cands = has_integral_valuation_candidates(f, 3);
  REQUIRE(cands.any);
  REQUIRE(cands.valuations.size() == 2);
  CHECK(cands.valuations[0] == 0);
  CHECK(cands.valuations[1] == -1);
}

TEST_CASE("single term has no polygon") {
  CHECK_THROWS_AS(lower_hull(SparsePoly::parse("7*x^3"), 3),
                  single_term_error);
}

TEST_CASE("strictly increasing slopes and chained endpoints") {
  SparsePoly f = SparsePoly::parse("729 + 27*x + 3*x^3 + x^6 + 81*x^9");
  auto edges = lower_hull(f, 3);
  REQUIRE(edges.size() >= 2);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    CHECK(edges[i].length ==  edges[i].to_exp - edges[i].from_exp);
    if (i > 0) {
      CHECK(edges[i - 1].to_exp == edges[i].from_exp);
      CHECK(edges[i - 1].to_val == edges[i].from_val);
      CHECK(edges[i - 1].slope < edges[i].slope);
    }
  }
  CHECK(edges.front().from_exp == f.lowest_exponent());
  CHECK(edges.back().to_exp == f.degree());
}
