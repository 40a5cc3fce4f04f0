#include "padic/polygon.hpp"

namespace padic {

std::vector<PolygonEdge> lower_hull(const SparsePoly& f, const mpz_class& p) {
  if (f.is_zero()) throw zero_polynomial_error("polygon of 0");
  if (f.term_count() < 2) {
    throw single_term_error("polygon of a single term degenerates to a point");
  }
  struct Pt {
    long a, v;
  };
  std::vector<Pt> pts;
  for (const auto& t : f.terms()) {
    pts.push_back({t.exp, ord_p(t.coeff, p).value()});
  }
  // monotone chain over points already sorted by exponent; keep the lower
  // hull with collinear interior points dropped
  std::vector<Pt> hull;
  for (const auto& q : pts) {
    while (hull.size() >= 2) {
      const Pt& a = hull[hull.size() - 2];
      const Pt& b = hull[hull.size() - 1];
      // cross product of (b-a) x (q-a); keep strictly convex turns
      mpz_class cross = mpz_class(b.a - a.a) * mpz_class(q.v - a.v) -
                        mpz_class(b.v - a.v) * mpz_class(q.a - a.a);
      if (cross <= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(q);
  }
  std::vector<PolygonEdge> edges;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    PolygonEdge e;
    e.from_exp = hull[i - 1].a;
    e.from_val = hull[i - 1].v;
    e.to_exp = hull[i].a;
    e.to_val = hull[i].v;
    e.length = e.to_exp - e.from_exp;
    e.slope = mpq_class(mpz_class(e.to_val - e.from_val),
                        mpz_class(e.length));
    e.slope.canonicalize();
    edges.push_back(e);
  }
  return edges;
}

std::vector<std::pair<mpq_class, long>> roots_by_valuation(
    const SparsePoly& f, const mpz_class& p) {
  if (!f.is_zero() && f.lowest_exponent() != 0) {
    throw constant_term_zero_error("roots_by_valuation requires f(0) != 0");
  }
  std::vector<std::pair<mpq_class, long>> out;
  for (const auto& e : lower_hull(f, p)) {
    out.emplace_back(-e.slope, e.length);
  }
  return out;
}

IntegralCandidates has_integral_valuation_candidates(const SparsePoly& f,
                                                     const mpz_class& p) {
  IntegralCandidates r;
  for (const auto& e : lower_hull(f, p)) {
    mpq_class v = -e.slope;
    if (v.get_den() == 1) {
      r.any = true;
      r.valuations.push_back(static_cast<long>(v.get_num().get_si()));
    }
  }
  return r;
}

}  // namespace padic
