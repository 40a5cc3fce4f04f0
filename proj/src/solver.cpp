#include "padic/solver.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>

#include "padic/bounds.hpp"
#include "padic/dense.hpp"

namespace padic {

namespace {

mpz_class pow_p(const mpz_class& p, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
  return r;
}

// Residue of the unit alpha at the context's precision. Kept as a callable
// so alpha can come from exact integers or from huge modular powers alike.
using AlphaFn = std::function<mpz_class(const PadicContext&)>;

struct UnitBinomialCount {
  long count = 0;  // 0 or gamma
  long gamma = 0;
  long ell = 0;                 // ord_p d
  std::vector<long> msds;       // mod-p solutions, ascending
};

// Decide solvability of x^d = alpha over Z_p units (alpha a unit) and list
// the mod-p residues of the solutions. Solvable iff
// alpha^{p^ell (p-1)/gamma} = 1 mod p^{2 ell + 1}; then there are exactly
// gamma = gcd(d, p-1) solutions and their residues are the gamma solutions
// of x^gamma = alpha^r mod p with r = (d/gamma)^{-1} mod (p-1)/gamma.
UnitBinomialCount unit_binomial_count(long d, const AlphaFn& alpha,
                                      const mpz_class& p) {
  UnitBinomialCount out;
  if (d < 1) throw error("unit_binomial_count: need d >= 1");
  out.ell = ord_p(mpz_class(d), p).value();
  mpz_class pm1 = p - 1;
  mpz_class gz = gcd(mpz_class(d), pm1);
  out.gamma = gz.get_si();

  unsigned k21 = static_cast<unsigned>(2 * out.ell + 1);
  PadicContext ctx(p, k21);
  mpz_class a = ctx.reduce(alpha(ctx));
  if (a % p == 0) throw not_a_unit_error("alpha must be a unit");
  mpz_class e = pow_p(p, static_cast<unsigned long>(out.ell)) * (pm1 / gz);
  if (mod_pow(a, e, ctx) != 1) return out;  // count stays 0

  PadicContext mod_p_ctx(p, 1);
  mpz_class m = pm1 / gz;
  mpz_class r = 0;
  if (m != 1) {
    mpz_class dg = mpz_class(d) / gz;
    if (mpz_invert(r.get_mpz_t(), dg.get_mpz_t(), m.get_mpz_t()) == 0) {
      throw error("internal: d/gamma not invertible mod (p-1)/gamma");
    }
  }
  mpz_class c = mod_pow(a % p, r, mod_p_ctx);

  // first residue solution by scan, then the orbit under a primitive
  // gamma-th root of unity; every orbit member solves x^d = alpha mod p
  mpz_class x = 0;
  for (mpz_class t = 1; t < p; ++t) {
    if (mod_pow(t, gz, mod_p_ctx) == c) {
      x = t;
      break;
    }
  }
  if (x == 0) throw error("internal: expected a mod-p residue solution");
  mpz_class gen = primitive_root(p);
  mpz_class step = mod_pow(gen, pm1 / gz, mod_p_ctx);
  mpz_class a0 = a % p;
  for (long i = 0; i < out.gamma; ++i) {
    if (mod_pow(x, mpz_class(d), mod_p_ctx) != a0) {
      throw error("internal: orbit member fails x^d = alpha mod p");
    }
    out.msds.push_back(x.get_si());
    x = mod_p_ctx.reduce(x * step);
  }
  std::sort(out.msds.begin(), out.msds.end());
  if (std::unique(out.msds.begin(), out.msds.end()) != out.msds.end()) {
    throw error("internal: orbit produced a repeated residue");
  }
  out.count = out.gamma;
  return out;
}

struct UnitRoot {
  mpz_class unit_value;
  unsigned unit_k;
};

// All unit solutions of x^d = alpha to at least `digits` base-p digits.
// ell = 0: each mod-p residue lifts directly. ell >= 1: resolve the digit
// clusters with the refinement tree at k = 2 ell + 1 first.
std::vector<UnitRoot> unit_binomial_solve(long d, const AlphaFn& alpha,
                                          const mpz_class& p, unsigned digits,
                                          const UnitBinomialCount& core) {
  std::vector<UnitRoot> out;
  if (core.count == 0) return out;
  long ell = core.ell;
  unsigned K = std::max<unsigned>(digits, static_cast<unsigned>(2 * ell + 2));

  auto make_q = [&](unsigned prec) {
    PadicContext cq(p, prec);
    std::vector<SparsePoly::Term> ts;
    ts.push_back({0, cq.reduce(-alpha(cq))});
    ts.push_back({d, 1});
    return SparsePoly(std::move(ts));
  };

  if (ell == 0) {
    SparsePoly q = make_q(K + 2);
    for (long msd : core.msds) {
      mpz_class z = lift_to_precision(q, msd, K, p);
      out.push_back({z, K});
    }
  } else {
    unsigned ktree = static_cast<unsigned>(2 * ell + 1);
    bool done = false;
    for (int round = 0; round < 8 && !done; ++round) {
      unsigned prec = std::max(K, ktree) + static_cast<unsigned>(ell) + 2;
      SparsePoly q = make_q(prec);
      PadicContext ctxt(p, ktree);
      NodalTree tree = build_tree(q, ctxt);
      auto seeds = root_seeds(tree);
      if (!tree.precision_exhausted &&
          static_cast<long>(seeds.size()) == core.count) {
        for (const auto& s : seeds) {
          mpz_class z0 = lift_seed(tree, s);
          mpz_class z = lift_to_precision(q, z0, K, p);
          out.push_back({z, K});
        }
        done = true;
      }
      ktree *= 2;
    }
    if (!done) throw error("internal: unit binomial census did not stabilize");
  }
  std::sort(out.begin(), out.end(), [&](const UnitRoot& a, const UnitRoot& b) {
    return a.unit_value < b.unit_value;
  });
  return out;
}

// Package a certified approximate root: the root is p^v * u with u a unit
// known mod p^uk, certified against `model` (rescaled to valuation v).
ApproxRoot make_root(const SparsePoly& model, const mpz_class& p, long v,
                     const mpz_class& u, unsigned uk, bool degenerate,
                     int multiplicity) {
  SparsePoly h = model.rescale_valuation(p, v);
  CertifyResult cert = certify_root(h, u, p, uk + 6);
  if (!cert.certified) {
    throw precision_not_certified_error("root certificate failed: " +
                                        cert.reason);
  }
  ApproxRoot r;
  r.valuation = v;
  r.unit_value = u;
  r.unit_k = uk;
  r.ell = cert.ell;
  r.cert_j = cert.cert_j;
  r.degenerate = degenerate;
  r.multiplicity = multiplicity;
  if (v >= 0) {
    r.numerator = u * pow_p(p, static_cast<unsigned long>(v));
    r.denominator = 1;
    r.prefix_digits = digits_of(r.numerator, p, uk + static_cast<unsigned>(v));
  } else {
    r.numerator = u;
    r.denominator = pow_p(p, static_cast<unsigned long>(-v));
    r.prefix_digits = digits_of(u, p, uk);
  }
  return r;
}

}  // namespace

bool root_order(const ApproxRoot& a, const ApproxRoot& b) {
  if (a.valuation != b.valuation) return a.valuation < b.valuation;
  const auto& x = a.prefix_digits;
  const auto& y = b.prefix_digits;
  std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] != y[i]) return x[i] < y[i];
  }
  return x.size() < y.size();
}

long count_binomial_roots(const SparsePoly& fin, const mpz_class& p) {
  PadicContext probe(p, 1);  // validates the prime
  auto [fx, a1] = fin.normalize_x_power();
  (void)a1;
  SparsePoly f = fx.divide_content();
  if (f.term_count() != 2) {
    throw error("count_binomial_roots expects exactly two terms");
  }
  long d = f.degree();
  long o1 = ord_p(f.constant_term(), p).value();
  long o2 = ord_p(f.leading_coeff(), p).value();
  if ((o1 - o2) % d != 0) return 0;
  mpz_class u1 = unit_part(f.constant_term(), p);
  mpz_class u2 = unit_part(f.leading_coeff(), p);
  AlphaFn alpha = [u1, u2](const PadicContext& ctx) {
    return ctx.reduce(-(u1 * mod_inverse(u2, ctx)));
  };
  return unit_binomial_count(d, alpha, p).count;
}

SolveReport solve_binomial(const SparsePoly& fin, const mpz_class& p) {
  PadicContext probe(p, 1);
  SolveReport rep;
  auto [fx, a1] = fin.normalize_x_power();
  SparsePoly f = fx.divide_content();
  if (f.term_count() != 2) {
    throw error("solve_binomial expects exactly two terms");
  }
  rep.zero_root_multiplicity = a1;
  rep.polygon = lower_hull(fin, p);

  long d = f.degree();
  long o1 = ord_p(f.constant_term(), p).value();
  long o2 = ord_p(f.leading_coeff(), p).value();
  if ((o1 - o2) % d != 0) {
    rep.root_count = a1 > 0 ? 1 : 0;
    rep.message = "no nonzero roots: the polygon slope is not an integer";
    rep.final_k = 1;
    return rep;
  }
  long v = (o1 - o2) / d;
  mpz_class u1 = unit_part(f.constant_term(), p);
  mpz_class u2 = unit_part(f.leading_coeff(), p);
  AlphaFn alpha = [u1, u2](const PadicContext& ctx) {
    return ctx.reduce(-(u1 * mod_inverse(u2, ctx)));
  };
  UnitBinomialCount core = unit_binomial_count(d, alpha, p);
  if (core.count == 0) {
    rep.root_count = a1 > 0 ? 1 : 0;
    rep.message = "no nonzero roots: the unit equation has no solution";
    rep.final_k = static_cast<unsigned>(2 * core.ell + 1);
    return rep;
  }
  unsigned digits = std::max<unsigned>(6, static_cast<unsigned>(2 * core.ell + 2));
  auto units = unit_binomial_solve(d, alpha, p, digits, core);
  for (const auto& ur : units) {
    rep.roots.push_back(make_root(f, p, v, ur.unit_value, ur.unit_k, false, 1));
  }
  std::sort(rep.roots.begin(), rep.roots.end(), root_order);
  rep.root_count = core.count + (a1 > 0 ? 1 : 0);
  rep.final_k = digits;
  return rep;
}

std::vector<ApproxRoot> degenerate_roots_trinomial(const SparsePoly& fin,
                                                   const mpz_class& p,
                                                   unsigned digits_target) {
  PadicContext probe(p, 1);
  auto [fx, a1] = fin.normalize_x_power();
  (void)a1;
  SparsePoly f = fx.divide_content();
  if (f.term_count() != 3) {
    throw error("degenerate_roots_trinomial expects exactly three terms");
  }
  long a2 = f.terms()[1].exp;
  long a3 = f.terms()[2].exp;
  const mpz_class& c1 = f.terms()[0].coeff;
  const mpz_class& c2 = f.terms()[1].coeff;
  const mpz_class& c3 = f.terms()[2].coeff;

  // A double root zeta satisfies both of:
  //   P1 zeta^{a2}      = Q1   (eliminating the x^{a3} term)
  //   P2 zeta^{a3 - a2} = Q2   (from zeta f'(zeta) = 0)
  // and conversely. Combine them through a Bezout relation on the exponents
  // into a single binomial in zeta^{g0}, g0 = gcd(a2, a3 - a2).
  mpz_class P1 = mpz_class(a3 - a2) * c2;
  mpz_class Q1 = -c1 * a3;
  mpz_class P2 = -mpz_class(a3) * c3;
  mpz_class Q2 = c2 * a2;

  auto [g0z, R, S] = extended_gcd(a2, a3 - a2);
  long g0 = g0z.get_si();
  long t1e = a2 / g0;
  long t2e = (a3 - a2) / g0;
  if (abs(R) > 1000000 || abs(S) > 1000000 || t1e > 1000000 ||
      t2e > 1000000) {
    throw unsupported_error(
        "degenerate-root analysis needs desk-scale exponents");
  }

  auto ipow = [](const mpz_class& b, const mpz_class& e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e.get_ui());
    return r;
  };
  mpz_class Rp = R > 0 ? R : mpz_class(0);
  mpz_class Rm = R < 0 ? mpz_class(-R) : mpz_class(0);
  mpz_class Sp = S > 0 ? S : mpz_class(0);
  mpz_class Sm = S < 0 ? mpz_class(-S) : mpz_class(0);
  mpz_class A = ipow(P1, Rp) * ipow(P2, Sp) * ipow(Q1, Rm) * ipow(Q2, Sm);
  mpz_class B = ipow(Q1, Rp) * ipow(Q2, Sp) * ipow(P1, Rm) * ipow(P2, Sm);
  // combined condition: A * zeta^{g0} = B

  long oA = ord_p(A, p).value();
  long oB = ord_p(B, p).value();
  if ((oB - oA) % g0 != 0) return {};
  long v = (oB - oA) / g0;

  // exact filter: any p-adic solution has zeta^{g0} = B/A exactly in Q, so
  // both original conditions hold for all candidates or for none
  mpq_class q(B, A);
  q.canonicalize();
  auto qpow = [](const mpq_class& base, long e) {
    mpq_class r;
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(),
               static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(),
               static_cast<unsigned long>(e));
    return r;
  };
  if (mpq_class(P1) * qpow(q, t1e) != mpq_class(Q1)) return {};
  if (mpq_class(P2) * qpow(q, t2e) != mpq_class(Q2)) return {};

  mpz_class uA = unit_part(A, p);
  mpz_class uB = unit_part(B, p);
  AlphaFn alpha = [uA, uB](const PadicContext& ctx) {
    return ctx.reduce(uB * mod_inverse(uA, ctx));
  };
  UnitBinomialCount core = unit_binomial_count(g0, alpha, p);
  if (core.count == 0) return {};

  unsigned digits =
      std::max<unsigned>(digits_target, static_cast<unsigned>(2 * core.ell + 2));
  auto units = unit_binomial_solve(g0, alpha, p, digits, core);
  std::vector<SparsePoly::Term> Fts;
  Fts.push_back({0, -B});
  Fts.push_back({g0, A});
  SparsePoly F(std::move(Fts));
  std::vector<ApproxRoot> out;
  for (const auto& ur : units) {
    out.push_back(make_root(F, p, v, ur.unit_value, ur.unit_k, true, 2));
  }
  std::sort(out.begin(), out.end(), root_order);
  return out;
}

namespace {

// Does the degenerate root dr explain a precision-exhausted prefix of the
// census tree? On the reversed-polynomial side the prefix approximates 1/dr.
bool prefix_matches_degenerate(const std::vector<long>& prefix,
                               const ApproxRoot& dr, const mpz_class& p,
                               bool inverse_side) {
  long v = inverse_side ? -dr.valuation : dr.valuation;
  if (v < 0) return false;
  long L = static_cast<long>(prefix.size());
  for (long i = 0; i < std::min(L, v); ++i) {
    if (prefix[i] != 0) return false;
  }
  if (L <= v) return true;
  unsigned needed = static_cast<unsigned>(L - v);
  if (needed > dr.unit_k) return false;  // not enough digits: force a retry
  mpz_class u = dr.unit_value;
  if (inverse_side) {
    u = mod_inverse(dr.unit_value, PadicContext(p, dr.unit_k));
  }
  auto digs = digits_of(u, p, needed);
  for (unsigned i = 0; i < needed; ++i) {
    if (digs[i] != prefix[v + i]) return false;
  }
  return true;
}

struct CensusOutcome {
  bool ok = false;
  long count = -1;  // nonzero roots
  std::vector<ApproxRoot> roots;
  long tree_nodes = 0;
  int tree_depth = 0;
};

struct CensusedRoot {
  long v;
  mpz_class u;
  unsigned uk;
};

// Certify a censused root of the census polynomial against the model
// trinomial, refining against the census polynomial when the model needs
// more digits (its derivative can vanish to higher order near multiple
// roots). Returns nullopt when the precision round should be retried.
std::optional<ApproxRoot> assemble_census_root(const SparsePoly& cg,
                                               const SparsePoly& model,
                                               const mpz_class& p,
                                               CensusedRoot cr) {
  for (int tries = 0; tries < 5; ++tries) {
    try {
      return make_root(model, p, cr.v, cr.u, cr.uk, false, 1);
    } catch (const precision_not_certified_error&) {
    }
    unsigned target = cr.uk * 2;
    try {
      SparsePoly hc = cg.rescale_valuation(p, cr.v);
      cr.u = lift_to_precision(hc, cr.u, target, p);
      cr.uk = target;
    } catch (const hensel_precondition_error&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// One census round at precision k: count and locate the nonzero roots of the
// census polynomial cg via a tree on cg (valuation >= 0) and a tree on the
// reversed polynomial (valuation < 0).
CensusOutcome run_census(const SparsePoly& cg, const SparsePoly& model,
                         const mpz_class& p, unsigned k,
                         const std::vector<ApproxRoot>& deg,
                         bool deg_in_census, long match_depth) {
  CensusOutcome oc;
  PadicContext ctx(p, k);
  NodalTree t_plus = build_tree(cg, ctx);
  SparsePoly rev = cg.reverse().rescale_valuation(p, 0);
  NodalTree t_minus = build_tree(rev, ctx);
  oc.tree_nodes = static_cast<long>(t_plus.nodes.size() + t_minus.nodes.size());
  oc.tree_depth = std::max(t_plus.max_depth, t_minus.max_depth);

  // every exhausted branch must sit on a known degenerate root; otherwise
  // the precision is too low to certify the count
  for (const auto& pref : t_plus.exhausted_prefixes) {
    bool matched = false;
    for (const auto& dr : deg) {
      if (prefix_matches_degenerate(pref, dr, p, false)) {
        matched = true;
        break;
      }
    }
    if (!matched) return oc;
  }
  for (const auto& pref : t_minus.exhausted_prefixes) {
    bool matched = false;
    for (const auto& dr : deg) {
      if (prefix_matches_degenerate(pref, dr, p, true)) {
        matched = true;
        break;
      }
    }
    if (!matched) return oc;
  }

  std::vector<CensusedRoot> censused;
  for (const auto& seed : root_seeds(t_plus)) {
    mpz_class z = lift_seed(t_plus, seed);
    if (z == 0) return oc;
    long v = ord_p(z, p).value();
    long len = seed.depth + static_cast<long>(seed.k_node);
    if (len - v < 1) return oc;
    censused.push_back({v, z / pow_p(p, static_cast<unsigned long>(v)),
                        static_cast<unsigned>(len - v)});
  }
  for (const auto& seed : root_seeds(t_minus)) {
    mpz_class w = lift_seed(t_minus, seed);
    if (w == 0) return oc;
    long vw = ord_p(w, p).value();
    if (vw == 0) continue;  // valuation-0 roots are already in the plus tree
    long len = seed.depth + static_cast<long>(seed.k_node);
    if (len - vw < 1) return oc;
    unsigned ukw = static_cast<unsigned>(len - vw);
    mpz_class uw = w / pow_p(p, static_cast<unsigned long>(vw));
    mpz_class u = mod_inverse(uw, PadicContext(p, ukw));
    censused.push_back({-vw, u, ukw});
  }

  std::size_t matched_deg = 0;
  for (const auto& cr : censused) {
    const ApproxRoot* hit = nullptr;
    if (deg_in_census) {
      for (const auto& dr : deg) {
        if (dr.valuation != cr.v) continue;
        unsigned depth_avail = std::min(cr.uk, dr.unit_k);
        if (static_cast<long>(depth_avail) < match_depth) return oc;
        mpz_class md = pow_p(p, static_cast<unsigned long>(match_depth));
        if ((cr.u - dr.unit_value) % md == 0) {
          hit = &dr;
          break;
        }
      }
    }
    if (hit != nullptr) {
      oc.roots.push_back(*hit);
      ++matched_deg;
      continue;
    }
    auto assembled = assemble_census_root(cg, model, p, cr);
    if (!assembled) return oc;
    oc.roots.push_back(std::move(*assembled));
  }
  if (deg_in_census && matched_deg != deg.size()) return oc;
  if (!deg_in_census) {
    for (const auto& dr : deg) oc.roots.push_back(dr);
  }
  oc.count = static_cast<long>(oc.roots.size());
  oc.ok = true;
  return oc;
}

}  // namespace

SolveReport solve_trinomial(const SparsePoly& fin, const mpz_class& p,
                            const PrecisionPolicy& policy) {
  PadicContext probe(p, 1);
  SolveReport rep;
  rep.policy = policy.kind;
  auto [fx, a1] = fin.normalize_x_power();
  SparsePoly g = fx.divide_content();
  if (g.term_count() != 3) {
    throw error("solve_trinomial expects exactly three terms");
  }
  rep.zero_root_multiplicity = a1;
  rep.polygon = lower_hull(fin, p);

  auto cands = has_integral_valuation_candidates(g, p);
  if (!cands.any) {
    rep.root_count = a1 > 0 ? 1 : 0;
    rep.message = "no nonzero roots: no polygon edge has integer slope";
    rep.final_k = 1;
    return rep;
  }
  long maxabsv = 0;
  for (long v : cands.valuations) maxabsv = std::max(maxabsv, std::abs(v));

  // choose the census polynomial and the starting precision
  SparsePoly census = g;
  bool deg_in_census = false;
  long match_depth = 0;
  unsigned k0 = 0;
  bool exact_like = false;
  if (policy.kind == PolicyKind::ExactResultant ||
      policy.kind == PolicyKind::YuFormula) {
    exact_like = true;
    DensePoly dg = DensePoly::from_sparse(g, policy.dense_cap);
    mpz_class res = DensePoly::resultant(dg, dg.derivative());
    long D;
    if (res == 0) {
      DensePoly sf = dg.square_free_part();
      census = sf.to_sparse();
      deg_in_census = true;
      mpz_class res2 = DensePoly::resultant(sf, sf.derivative());
      D = ord_p(res2, p).value();
    } else {
      D = ord_p(res, p).value();
    }
    match_depth = D + 1;
    if (policy.kind == PolicyKind::YuFormula) {
      TrinomialBound tb = trinomial_separation_bound(g, p);
      if (tb.k_required > static_cast<long>(policy.k_cap)) {
        throw precision_not_certified_error(
            "separation-bound policy needs k = " +
            std::to_string(tb.k_required) + ", beyond the cap of " +
            std::to_string(policy.k_cap));
      }
      k0 = static_cast<unsigned>(tb.k_required);
    } else {
      k0 = static_cast<unsigned>(2 * D + 3);
    }
  } else {
    mpz_class a2(g.terms()[1].exp), a3(g.terms()[2].exp);
    long w = ord_p(a2 * a3 * (a3 - a2), p).value();
    k0 = static_cast<unsigned>(2 * w + 8);
  }
  k0 = std::max(k0, std::max(policy.initial_k, 4u));
  k0 = std::min(k0, policy.k_cap);

  bool deg_available = true;
  long prev_count = -2;
  CensusOutcome best;
  bool success = false;
  unsigned k = k0;
  int rounds = 0;
  const int max_rounds = exact_like ? 3 : 24;
  while (true) {
    ++rounds;
    std::vector<ApproxRoot> deg;
    if (deg_available) {
      try {
        deg = degenerate_roots_trinomial(g, p,
                                         k + static_cast<unsigned>(maxabsv) + 4);
      } catch (const unsupported_error&) {
        deg_available = false;
      }
    }
    CensusOutcome oc =
        run_census(census, g, p, k, deg, deg_in_census, match_depth);
    rep.final_k = k;
    rep.tree_nodes = oc.tree_nodes;
    rep.tree_depth = oc.tree_depth;
    if (oc.ok) {
      if (exact_like || oc.count == prev_count) {
        best = std::move(oc);
        success = true;
        break;
      }
      prev_count = oc.count;
      best = std::move(oc);
    } else {
      prev_count = -2;
    }
    if (k >= policy.k_cap || rounds >= max_rounds) break;
    k = std::min(k * 2, policy.k_cap);
  }

  if (success) {
    rep.certified = true;
    rep.roots = std::move(best.roots);
    std::sort(rep.roots.begin(), rep.roots.end(), root_order);
    rep.root_count = best.count + (a1 > 0 ? 1 : 0);
  } else {
    rep.certified = false;
    rep.message =
        "precision cap reached before the root count stabilized; the count "
        "is a certified lower bound only";
    if (best.count >= 0) {
      rep.roots = std::move(best.roots);
      std::sort(rep.roots.begin(), rep.roots.end(), root_order);
      rep.root_count = best.count + (a1 > 0 ? 1 : 0);
    } else {
      rep.root_count = a1 > 0 ? 1 : 0;
    }
  }
  return rep;
}

SolveReport solve(const SparsePoly& f, const mpz_class& p,
                  const PrecisionPolicy& policy) {
  PadicContext probe(p, 1);
  if (f.is_zero()) throw error("the zero polynomial vanishes identically");
  auto [g, a1] = f.normalize_x_power();
  std::size_t t = g.term_count();
  if (t == 1) {
    SolveReport rep;
    rep.policy = policy.kind;
    rep.zero_root_multiplicity = a1;
    rep.root_count = a1 > 0 ? 1 : 0;
    rep.final_k = 1;
    rep.message = a1 > 0 ? "monomial: only the zero root"
                         : "nonzero constant: no roots";
    return rep;
  }
  if (t == 2) return solve_binomial(f, p);
  if (t == 3) return solve_trinomial(f, p, policy);
  throw unsupported_error(
      "solving with four or more terms is not supported; only binomials and "
      "trinomials are handled exactly");
}

}  // namespace padic
