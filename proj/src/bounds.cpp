#include "padic/bounds.hpp"

#include <cmath>
#include <limits>

namespace padic {

void yu_valuation_bound_mpfr(mpfr_t out, unsigned n, const mpz_class& p,
                             const std::vector<double>& logA, double logB,
                             mpfr_prec_t prec, mpfr_rnd_t rnd) {
  if (n < 2) throw domain_error("valuation bound needs n >= 2");
  if (logA.size() != n) throw domain_error("logA must have n entries");
  double logp_d = std::log(mpz_get_d(p.get_mpz_t()));
  for (std::size_t i = 0; i < n; ++i) {
    if (i + 1 < n && logA[i] > logA[i + 1]) {
      throw domain_error("logA must be non-decreasing");
    }
    if (logA[i] < logp_d * (1 - 1e-12)) {
      throw domain_error("logA_i must be >= log p");
    }
  }
  if (logB < std::log(3.0) * (1 - 1e-12)) {
    throw domain_error("logB must be >= log 3");
  }

  mpfr_t logp, t, acc;
  mpfr_inits2(prec, logp, t, acc, static_cast<mpfr_ptr>(nullptr));

  // log p, rounded down so dividing by it rounds the quotient up
  mpfr_set_z(logp, p.get_mpz_t(), MPFR_RNDD);
  mpfr_log(logp, logp, MPFR_RNDD);

  // acc = (24 (n+1)^2 / log p)^(n+2)
  mpfr_set_ui(acc, 24ul * (n + 1) * (n + 1), rnd);
  mpfr_div(acc, acc, logp, rnd);
  mpfr_pow_ui(acc, acc, n + 2, rnd);

  // * 11145 * (p-1)
  mpfr_mul_ui(acc, acc, 11145ul, rnd);
  mpfr_set_z(t, p.get_mpz_t(), rnd);
  mpfr_sub_ui(t, t, 1ul, rnd);
  mpfr_mul(acc, acc, t, rnd);

  // * prod logA_i
  for (unsigned i = 0; i < n; ++i) {
    mpfr_set_d(t, logA[i], rnd);
    mpfr_mul(acc, acc, t, rnd);
  }

  // * log(4B) = log 4 + logB
  mpfr_set_ui(t, 4ul, rnd);
  mpfr_log(t, t, rnd);
  mpfr_add_d(t, t, logB, rnd);
  mpfr_mul(acc, acc, t, rnd);

  // * max{ log(2^12 * 3 n (n+1) logA_n), (log p)/n }
  mpfr_t m1, m2;
  mpfr_inits2(prec, m1, m2, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_d(m1, logA[n - 1], rnd);
  mpfr_mul_ui(m1, m1, 4096ul * 3ul * n * (n + 1), rnd);
  mpfr_log(m1, m1, rnd);
  mpfr_set_z(m2, p.get_mpz_t(), rnd);
  mpfr_log(m2, m2, rnd);
  mpfr_div_ui(m2, m2, n, rnd);
  if (mpfr_cmp(m1, m2) < 0) mpfr_swap(m1, m2);
  mpfr_mul(acc, acc, m1, rnd);

  mpfr_set(out, acc, rnd);
  mpfr_clears(logp, t, acc, m1, m2, static_cast<mpfr_ptr>(nullptr));
}

double yu_valuation_bound(unsigned n, const mpz_class& p,
                          const std::vector<double>& logA, double logB) {
  mpfr_t out;
  mpfr_init2(out, 192);
  yu_valuation_bound_mpfr(out, n, p, logA, logB, 192, MPFR_RNDU);
  double r = mpfr_get_d(out, MPFR_RNDU);
  mpfr_clear(out);
  return r;
}

double binomial_separation_bound(long d, const mpz_class& H,
                                 const mpz_class& p) {
  if (d < 1 || H < 1) throw domain_error("need d >= 1 and H >= 1");
  mpfr_t acc, t;
  mpfr_inits2(192, acc, t, static_cast<mpfr_ptr>(nullptr));
  double r;
  if (p == 0) {
    // Archimedean: 1.5 log 3 + log(d H^{1/d})
    mpfr_set_ui(acc, 3ul, MPFR_RNDU);
    mpfr_log(acc, acc, MPFR_RNDU);
    mpfr_mul_d(acc, acc, 1.5, MPFR_RNDU);
    mpfr_set_z(t, H.get_mpz_t(), MPFR_RNDU);
    mpfr_log(t, t, MPFR_RNDU);
    mpfr_div_ui(t, t, static_cast<unsigned long>(d), MPFR_RNDU);
    mpfr_add(acc, acc, t, MPFR_RNDU);
    mpfr_set_ui(t, static_cast<unsigned long>(d), MPFR_RNDU);
    mpfr_log(t, t, MPFR_RNDU);
    mpfr_add(acc, acc, t, MPFR_RNDU);
  } else {
    // (log p / d) log H, plus log p/(p-1) when p | d
    mpfr_set_z(acc, p.get_mpz_t(), MPFR_RNDU);
    mpfr_log(acc, acc, MPFR_RNDU);
    mpfr_div_ui(acc, acc, static_cast<unsigned long>(d), MPFR_RNDU);
    mpfr_set_z(t, H.get_mpz_t(), MPFR_RNDU);
    mpfr_log(t, t, MPFR_RNDU);
    mpfr_mul(acc, acc, t, MPFR_RNDU);
    if (mpz_divisible_p(mpz_class(d).get_mpz_t(), p.get_mpz_t())) {
      mpfr_set_z(t, p.get_mpz_t(), MPFR_RNDU);
      mpfr_log(t, t, MPFR_RNDU);
      mpz_class pm1 = p - 1;
      mpfr_div_z(t, t, pm1.get_mpz_t(), MPFR_RNDU);
      mpfr_add(acc, acc, t, MPFR_RNDU);
    }
  }
  r = mpfr_get_d(acc, MPFR_RNDU);
  mpfr_clears(acc, t, static_cast<mpfr_ptr>(nullptr));
  return r;
}

TrinomialBound trinomial_separation_bound(const SparsePoly& f,
                                          const mpz_class& p) {
  if (f.term_count() != 3) throw domain_error("expected a trinomial");
  TrinomialBound out;

  mpfr_t s, t;
  mpfr_inits2(192, s, t, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui(s, 0ul, MPFR_RNDU);
  for (const auto& term : f.terms()) {
    mpz_class c = abs(term.coeff) + 2;
    mpz_class a = mpz_class(term.exp) + 2;
    mpfr_set_z(t, c.get_mpz_t(), MPFR_RNDU);
    mpfr_log(t, t, MPFR_RNDU);
    mpfr_add(s, s, t, MPFR_RNDU);
    mpfr_set_z(t, a.get_mpz_t(), MPFR_RNDU);
    mpfr_log(t, t, MPFR_RNDU);
    mpfr_add(s, s, t, MPFR_RNDU);
  }
  out.input_size_s = mpfr_get_d(s, MPFR_RNDU);

  double logp = std::log(mpz_get_d(p.get_mpz_t()));
  double logA = std::max(2 * out.input_size_s, logp);
  double logB = std::max(out.input_size_s, std::log(3.0));
  double yu = yu_valuation_bound(2, p, {logA, logA}, logB);

  // ord bound: s/log p (valuation content) + linear-forms bound + Rolle
  double logp_down = std::nextafter(logp, 0.0);
  double pm1 = mpz_get_d(mpz_class(p - 1).get_mpz_t());
  out.ord_bound = out.input_size_s / logp_down + yu + 1.0 / pm1;
  out.log_bound = out.ord_bound * logp;
  double k = std::ceil(2 * out.ord_bound + 1);
  out.k_required =
      k >= static_cast<double>(std::numeric_limits<long>::max())
          ? std::numeric_limits<long>::max()
          : static_cast<long>(k);

  mpfr_clears(s, t, static_cast<mpfr_ptr>(nullptr));
  return out;
}

}  // namespace padic
