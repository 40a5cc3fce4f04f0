#include "padic/tetra.hpp"

#include <cmath>

#include "padic/hensel.hpp"

namespace padic {

namespace {

mpz_class pow_p(const mpz_class& p, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
  return r;
}

}  // namespace

TetranomialInstance make_instance(const mpz_class& p, long h, long d) {
  PadicContext probe(p, 1);  // validates the prime (rejects 2)
  if (h < 3) throw tetra_parameter_error("need h >= 3");
  if (d < 4 || d % 2 != 0) throw tetra_parameter_error("need d even, d >= 4");
  if (d > 200) throw tetra_parameter_error("d too large for this benchmark");
  if (std::log(static_cast<double>(d)) > static_cast<double>(h)) {
    throw tetra_parameter_error("need d <= e^h");
  }
  TetranomialInstance inst;
  inst.p = p;
  inst.h = h;
  inst.d = d;
  inst.beta = (h - 1) * d / 2 + h;
  inst.expected_gap = inst.beta;
  std::vector<SparsePoly::Term> ts;
  ts.push_back({0, -pow_p(p, static_cast<unsigned long>(2 * h - 2))});
  ts.push_back({1, 2 * pow_p(p, static_cast<unsigned long>(h - 1))});
  ts.push_back({2, -1});
  ts.push_back({d, pow_p(p, static_cast<unsigned long>(2 * h))});
  inst.poly = SparsePoly(std::move(ts));
  return inst;
}

SeparationResult measure_separation(const TetranomialInstance& inst,
                                    unsigned K) {
  if (static_cast<long>(K) <= inst.expected_gap + 4) {
    throw tetra_precision_error("need K > expected_gap + 4 digits");
  }
  const mpz_class& p = inst.p;
  const long h = inst.h;
  const long d = inst.d;
  const long beta = inst.beta;
  const unsigned slack = K - static_cast<unsigned>(beta);

  // Shift to the cluster center and rescale:
  //   G(x) = f(p^beta x + p^{h-1}) / p^{2 beta}
  //        = sum_i C(d,i) p^{e_i} x^i - x^2,  e_i = 2h + (h-1)(d-i) + (i-2)beta
  // with e_0 = 0 and e_i > 0 otherwise, so G = 1 - x^2 mod p and both roots
  // lift from the simple residues +/-1.
  std::vector<SparsePoly::Term> ts;
  for (long i = 0; i <= d; ++i) {
    long e = 2 * h + (h - 1) * (d - i) + (i - 2) * beta;
    if (e < 0) throw error("internal: negative rescale exponent");
    mpz_class bin;
    mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(d),
                 static_cast<unsigned long>(i));
    mpz_class c = bin * pow_p(p, static_cast<unsigned long>(e));
    if (i == 2) c -= 1;
    if (c != 0) ts.push_back({i, c});
  }
  SparsePoly G(std::move(ts));

  PadicContext ctx(p, slack);
  mpz_class z1 = lift_to_precision(G, 1, slack, p);
  mpz_class z2 = lift_to_precision(G, ctx.reduce(mpz_class(-1)), slack, p);

  SeparationResult res;
  mpz_class shift = pow_p(p, static_cast<unsigned long>(h - 1));
  mpz_class scale = pow_p(p, static_cast<unsigned long>(beta));
  res.root1 = scale * z1 + shift;
  res.root2 = scale * z2 + shift;
  mpz_class diff = res.root1 - res.root2;  // = p^beta (z1 - z2), z1 - z2 unit
  res.measured_gap = ord_p(diff, p).value();
  res.digits_to_distinguish = res.measured_gap + 1;

  unsigned window = static_cast<unsigned>(2 * beta) + slack;
  res.ord_f_root1 = ord_of_value(inst.poly, res.root1, p, window);
  res.ord_f_root2 = ord_of_value(inst.poly, res.root2, p, window);
  return res;
}

long digits_to_distinguish(const TetranomialInstance& inst, unsigned K) {
  return measure_separation(inst, K).digits_to_distinguish;
}

}  // namespace padic

