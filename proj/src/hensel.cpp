#include "padic/hensel.hpp"

namespace padic {

long ord_of_value(const SparsePoly& f, const mpz_class& z, const mpz_class& p,
                  unsigned max_window) {
  if (max_window == 0) throw error("ord_of_value: empty window");
  PadicContext ctx(p, max_window);
  mpz_class v = f.eval_mod(z, ctx);
  if (v == 0) return max_window;
  return ord_p(v, p).value();
}

mpz_class hensel_step(const SparsePoly& f, const mpz_class& z,
                      const PadicContext& ctx) {
  const unsigned K = ctx.k();
  SparsePoly fd = f.derivative();
  // find ell with a widening window; the precondition caps it at (K-1)/2
  unsigned window = K;
  long ell = ord_of_value(fd, z, ctx.p(), window);
  long ordf = ord_of_value(f, z, ctx.p(), window);
  if (ordf < 2 * ell + 1 || ell >= static_cast<long>(window)) {
    throw hensel_precondition_error(
        "hensel_step: need ord f(z) >= 2*ord f'(z) + 1 (got ord f = " +
        std::to_string(ordf) + ", ord f' = " + std::to_string(ell) + ")");
  }
  // evaluate with ell guard digits so the quotient is exact mod p^K
  PadicContext wide = ctx.with_precision(K + static_cast<unsigned>(ell));
  mpz_class fv = wide.reduce(f.eval_mod(z, wide));
  mpz_class dv = wide.reduce(fd.eval_mod(z, wide));
  mpz_class pe;
  mpz_pow_ui(pe.get_mpz_t(), ctx.p().get_mpz_t(),
             static_cast<unsigned long>(ell));
  mpz_class fu = fv / pe;
  mpz_class du = dv / pe;
  return ctx.reduce(z - fu * mod_inverse(du, ctx));
}

mpz_class lift_to_precision(const SparsePoly& f, const mpz_class& seed,
                            unsigned K, const mpz_class& p) {
  SparsePoly fd = f.derivative();
  long ell = ord_of_value(fd, seed, p, K + 4);
  if (ell >= static_cast<long>(K) + 4) {
    throw hensel_precondition_error("lift_to_precision: f'(seed) ~ 0");
  }
  unsigned target = K + static_cast<unsigned>(ell);
  PadicContext ctx(p, target);
  mpz_class z = ctx.reduce(seed);
  for (unsigned it = 0; it < 64; ++it) {
    if (f.eval_mod(z, ctx) == 0) return PadicContext(p, K).reduce(z);
    z = hensel_step(f, z, ctx);
  }
  throw hensel_precondition_error("lift_to_precision did not converge");
}

std::vector<long> digits_of(const mpz_class& value, const mpz_class& p,
                            unsigned count) {
  std::vector<long> out;
  mpz_class v = value, q, r;
  for (unsigned i = 0; i < count; ++i) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    out.push_back(r.get_si());
    v = q;
  }
  return out;
}

CertifyResult certify_root(const SparsePoly& f, const mpz_class& z0,
                           const mpz_class& p, unsigned window) {
  CertifyResult res;
  SparsePoly fd = f.derivative();
  res.ell = ord_of_value(fd, z0, p, window);
  res.ord_f = ord_of_value(f, z0, p, window);
  if (res.ell >= static_cast<long>(window)) {
    res.reason = "f'(z0) vanishes to the full window";
    return res;
  }
  if (res.ord_f < 2 * res.ell + 1) {
    res.reason = "ord f(z0) < 2 ord f'(z0) + 1";
    return res;
  }
  res.certified = true;
  res.cert_j = res.ord_f - 2 * res.ell;
  return res;
}

}  // namespace padic
