#include "padic/oracle.hpp"

#include <algorithm>

#include "padic/dense.hpp"
#include "padic/hensel.hpp"
#include "padic/polygon.hpp"

namespace padic {

namespace {

mpz_class pow_p(const mpz_class& p, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
  return r;
}

void charge(unsigned long& used, unsigned long amount, unsigned long budget) {
  used += amount;
  if (used > budget) {
    throw budget_error("oracle budget of " + std::to_string(budget) +
                       " evaluations exceeded");
  }
}

// Unit-residue roots of h mod p^k grown one digit at a time: every root mod
// p^{j+1} reduces to a root mod p^j, so extending each survivor by all p
// digits enumerates them completely. Residues divisible by p are dropped at
// once — they belong to a different valuation class, and keeping them can
// blow up exponentially when h has a high-valuation root cluster.
std::vector<mpz_class> roots_mod_leveled(const SparsePoly& h,
                                         const mpz_class& p, unsigned k,
                                         unsigned long budget,
                                         unsigned long& used) {
  std::vector<mpz_class> level;
  PadicContext c1(p, 1);
  for (mpz_class r = 1; r < p; ++r) {
    charge(used, 1, budget);
    if (h.eval_mod(r, c1) == 0) level.push_back(r);
  }
  for (unsigned j = 1; j < k; ++j) {
    PadicContext cj(p, j + 1);
    mpz_class pj = pow_p(p, j);
    std::vector<mpz_class> next;
    for (const mpz_class& r : level) {
      for (mpz_class t = 0; t < p; ++t) {
        charge(used, 1, budget);
        mpz_class cand = r + pj * t;
        if (h.eval_mod(cand, cj) == 0) next.push_back(cand);
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace

std::vector<mpz_class> exhaustive_roots_mod(const SparsePoly& f,
                                            const PadicContext& ctx,
                                            unsigned long budget) {
  if (ctx.modulus() > budget) {
    throw budget_error("exhaustive scan over " + ctx.modulus().get_str() +
                       " residues exceeds the budget of " +
                       std::to_string(budget));
  }
  std::vector<mpz_class> out;
  for (mpz_class r = 0; r < ctx.modulus(); ++r) {
    if (f.eval_mod(r, ctx) == 0) out.push_back(r);
  }
  return out;
}

long resultant_valuation(const SparsePoly& f, const mpz_class& p) {
  PadicContext probe(p, 1);
  DensePoly df = DensePoly::from_sparse(f, 2000);
  mpz_class res = DensePoly::resultant(df, df.derivative());
  if (res == 0) {
    throw not_square_free_error("resultant of (f, f') vanishes");
  }
  return ord_p(res, p).value();
}

long count_qp_roots_oracle(const SparsePoly& fin, const mpz_class& p,
                           unsigned long budget) {
  PadicContext probe(p, 1);
  if (fin.is_zero()) throw error("the zero polynomial vanishes identically");
  auto [fx, a1] = fin.normalize_x_power();
  SparsePoly f = fx.divide_content();
  long total = a1 > 0 ? 1 : 0;
  if (f.term_count() < 2) return total;

  // distinct roots of f = roots of its square-free part, all simple
  DensePoly df = DensePoly::from_sparse(f, 400);
  DensePoly sf = df.square_free_part();
  if (sf.degree() < 1) return total;
  SparsePoly fsf = sf.to_sparse();

  auto cands = has_integral_valuation_candidates(fsf, p);
  unsigned long used = 0;
  for (long v : cands.valuations) {
    SparsePoly h = fsf.rescale_valuation(p, v);
    long Dv;
    if (h.term_count() == 2) {
      // unit binomial: ord h'(root) = ord_p(degree) at every root
      Dv = ord_p(mpz_class(h.degree()), p).value();
    } else {
      DensePoly dh = DensePoly::from_sparse(h, 400);
      mpz_class res = DensePoly::resultant(dh, dh.derivative());
      if (res == 0) throw error("internal: square-free part has a repeat");
      Dv = ord_p(res, p).value();
    }
    unsigned kv = static_cast<unsigned>(2 * Dv + 2);
    auto residues = roots_mod_leveled(h, p, kv, budget, used);

    unsigned P = 2 * kv + 4;
    std::vector<mpz_class> lifted;
    for (const mpz_class& r : residues) {
      if (r % p == 0) continue;  // counted under a different valuation
      CertifyResult cert = certify_root(h, r, p, kv);
      if (!cert.certified) continue;
      charge(used, 8, budget);  // flat charge for the lift
      lifted.push_back(lift_to_precision(h, r, P, p));
    }
    std::sort(lifted.begin(), lifted.end());
    lifted.erase(std::unique(lifted.begin(), lifted.end()), lifted.end());
    total += static_cast<long>(lifted.size());
  }
  return total;
}

}  // namespace padic
