// End-to-end acceptance gate. Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <mpfr.h>

#include "padic/bounds.hpp"
#include "padic/oracle.hpp"
#include "padic/solver.hpp"
#include "padic/tetra.hpp"

using namespace padic;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail = "") {
  std::printf("criterion %d: %s%s%s\n", criterion, ok ? "PASS" : "FAIL",
              detail.empty() ? "" : "  -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

mpz_class pow_p(const mpz_class& p, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
  return r;
}

// A solved instance kept around for the certificate and separation criteria.
struct SolvedCase {
  SparsePoly f;
  mpz_class p;
  SolveReport rep;
};

std::vector<SolvedCase> g_trinomial_corpus;

// ---------------------------------------------------------------- criterion 1

bool criterion1() {
  auto t0 = Clock::now();
  SparsePoly f = SparsePoly::parse("x^10 - 10*x + 738");
  mpz_class p = 3;

  SolveReport rep = solve(f, p);
  if (rep.root_count != 4 || !rep.certified) return false;
  if (rep.roots.size() != 4 || rep.zero_root_multiplicity != 0) return false;
  // sorted: three unit roots by digits, then the valuation-2 root
  const std::vector<std::vector<long>> lead{
      {1, 0, 1}, {1, 0, 2}, {1, 1, 2}, {0, 0, 1, 0, 2, 2}};
  const std::vector<long> vals{0, 0, 0, 2};
  for (int i = 0; i < 4; ++i) {
    if (rep.roots[i].valuation != vals[i]) return false;
    for (std::size_t j = 0; j < lead[i].size(); ++j) {
      if (rep.roots[i].prefix_digits[j] != lead[i][j]) return false;
    }
  }
  if (rep.polygon.size() != 2 || rep.polygon[0].slope != mpq_class(-2) ||
      rep.polygon[1].length != 9) {
    return false;
  }

  // tree internals at k = 9: a single chain of three nodes
  NodalTree tree = build_tree(f, PadicContext(p, 9));
  if (tree.nodes.size() != 3 || tree.precision_exhausted) return false;
  const NodalNode& n0 = tree.nodes[0];
  const NodalNode& n1 = tree.nodes[1];
  const NodalNode& n2 = tree.nodes[2];
  if (n0.nondeg_digits != std::vector<long>{0} ||
      n0.deg_digits != std::vector<long>{1}) {
    return false;
  }
  if (n1.s_consumed != 4 || n1.prefix != std::vector<long>{1}) return false;
  if (n1.poly.reduce(PadicContext(p, 3)) !=
      SparsePoly::parse("9 + 5*x^2 + 13*x^3 + 21*x^4")) {
    return false;
  }
  if (n2.s_consumed != 2 || n2.prefix != (std::vector<long>{1, 0})) {
    return false;
  }
  if (n2.poly.reduce(PadicContext(p, 1)) != SparsePoly::parse("1 + 2*x^2")) {
    return false;
  }
  if (n2.nondeg_digits != (std::vector<long>{1, 2})) return false;
  if (count_nondegenerate_roots(tree) != 4) return false;

  g_trinomial_corpus.push_back({f, p, rep});
  return seconds_since(t0) < 1.0;
}

// ---------------------------------------------------------------- criterion 2

bool criterion2() {
  auto t0 = Clock::now();
  mpz_class p = 17;

  SolveReport r340 = solve(SparsePoly::parse("1 - x^340"), p);
  if (r340.root_count != 4 || r340.roots.size() != 4) return false;
  std::vector<long> first, second;
  for (const auto& r : r340.roots) {
    if (r.valuation != 0 || r.prefix_digits.size() < 2) return false;
    first.push_back(r.prefix_digits[0]);
    second.push_back(r.prefix_digits[1]);
  }
  if (first != (std::vector<long>{1, 4, 13, 16})) return false;
  if (second != (std::vector<long>{0, 2, 14, 16})) return false;

  SolveReport r397 = solve(SparsePoly::parse("1 - x^397"), p);
  if (r397.root_count != 1 || r397.roots[0].prefix_digits[0] != 1) {
    return false;
  }

  // tree shapes: 17 | 340 makes every mod-17 root degenerate at k <= 2,
  // and the four children appear from k = 3 on
  NodalTree shallow = build_tree(SparsePoly::parse("1 - x^340"),
                                 PadicContext(p, 2));
  if (shallow.nodes.size() != 1 || !shallow.precision_exhausted) return false;
  NodalTree deep = build_tree(SparsePoly::parse("1 - x^340"),
                              PadicContext(p, 4));
  if (deep.nodes.size() != 5 || count_nondegenerate_roots(deep) != 4) {
    return false;
  }
  NodalTree t397 = build_tree(SparsePoly::parse("1 - x^397"),
                              PadicContext(p, 4));
  if (t397.nodes.size() != 1 || count_nondegenerate_roots(t397) != 1) {
    return false;
  }
  return seconds_since(t0) < 1.0;
}

// ---------------------------------------------------------------- criterion 3

bool criterion3(std::string& detail) {
  auto t0 = Clock::now();
  std::mt19937 rng(20260823);
  const long primes[] = {3, 5, 7};
  long mismatches = 0, cases = 0;

  auto check_one = [&](const SparsePoly& f, const mpz_class& p) {
    SolveReport rep = solve(f, p);
    long oracle = count_qp_roots_oracle(f, p);
    ++cases;
    if (!rep.certified || rep.root_count != oracle) {
      ++mismatches;
      if (mismatches == 1) {
        detail = "first mismatch: " + f.to_string() + " over Q_" +
                 p.get_str() + " solver=" + std::to_string(rep.root_count) +
                 " oracle=" + std::to_string(oracle);
      }
      return;
    }
    g_trinomial_corpus.push_back({f, p, std::move(rep)});
  };

  // random corpus
  auto coeff = [&](long bound) {
    long c = 1 + static_cast<long>(rng() % bound);
    return (rng() & 1) ? c : -c;
  };
  for (int trial = 0; trial < 10000; ++trial) {
    mpz_class p = primes[rng() % 3];
    long a3 = 2 + static_cast<long>(rng() % 11);
    long a2 = 1 + static_cast<long>(rng() % (a3 - 1));
    SparsePoly f({{0, coeff(20)}, {a2, coeff(20)}, {a3, coeff(20)}});
    check_one(f, p);
  }

  // exhaustive small corpus
  for (long p : primes) {
    for (long a3 = 2; a3 <= 5; ++a3) {
      for (long a2 = 1; a2 < a3; ++a2) {
        for (long c1 = -3; c1 <= 3; ++c1) {
          for (long c2 = -3; c2 <= 3; ++c2) {
            for (long c3 = -3; c3 <= 3; ++c3) {
              if (c1 == 0 || c2 == 0 || c3 == 0) continue;
              SparsePoly f({{0, c1}, {a2, c2}, {a3, c3}});
              check_one(f, p);
            }
          }
        }
      }
    }
  }

  double elapsed = seconds_since(t0);
  if (detail.empty()) {
    detail = std::to_string(cases) + " cases in " +
             std::to_string(elapsed).substr(0, 5) + "s";
  }
  return mismatches == 0 && elapsed < 600.0;
}

// ---------------------------------------------------------------- criterion 4

// The certificate claims quadratic convergence: starting from the root
// truncated just past the certified threshold, each Newton step must double
// the excess valuation j in ord f(z) >= 2*ell + j.
bool doubling_holds(const SparsePoly& f, const mpz_class& p,
                    const ApproxRoot& r) {
  SparsePoly model = f.rescale_valuation(p, r.valuation);
  if (r.degenerate) {
    // exact double root: the emitted digits must satisfy the polynomial and
    // its derivative to the full advertised precision
    long ordf = ord_of_value(model, r.unit_value, p, r.unit_k);
    long ordd = ord_of_value(model.derivative(), r.unit_value, p, r.unit_k);
    return ordf >= static_cast<long>(r.unit_k) &&
           ordd >= static_cast<long>(r.unit_k) / 2 - 2;
  }
  long ell = r.ell;
  unsigned trunc = static_cast<unsigned>(2 * ell + 2);
  if (trunc > r.unit_k) trunc = r.unit_k;
  mpz_class z = PadicContext(p, trunc).reduce(r.unit_value);
  long j0 = ord_of_value(model, z, p, trunc + 2 * ell + 2) - 2 * ell;
  if (j0 < 1) return false;
  for (int i = 1; i <= 4; ++i) {
    long target = 2 * ell + j0 * (1L << i);
    PadicContext ctx(p, static_cast<unsigned>(target + j0 * 2 + 4));
    z = hensel_step(model, z, ctx);
    if (ord_of_value(model, z, p, ctx.k()) < target) return false;
  }
  return true;
}

bool criterion4(std::string& detail) {
  long checked = 0;
  for (const SolvedCase& sc : g_trinomial_corpus) {
    for (const ApproxRoot& r : sc.rep.roots) {
      ++checked;
      if (!doubling_holds(sc.f, sc.p, r)) {
        detail = "certificate failed for a root of " + sc.f.to_string() +
                 " over Q_" + sc.p.get_str();
        return false;
      }
    }
  }
  detail = std::to_string(checked) + " root certificates";
  return checked > 0;
}

// ---------------------------------------------------------------- criterion 5

struct BinomialObs {
  long d;
  long v;       // common valuation of the roots
  mpz_class H;  // coefficient height
  mpz_class p;
};

std::vector<BinomialObs> g_binomial_pairs;  // instances with >= 2 roots

bool criterion5(std::string& detail) {
  auto t0 = Clock::now();
  const long primes[] = {3, 5, 7, 11, 13, 17};
  long cases = 0;
  for (long pl : primes) {
    mpz_class p = pl;
    for (long d = 1; d <= 60; ++d) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), mpz_class(d).get_mpz_t(),
              mpz_class(pl - 1).get_mpz_t());
      long expected_nonzero = g.get_si();
      for (long c1 = -30; c1 <= 30; ++c1) {
        if (c1 == 0) continue;
        for (long c2 = -30; c2 <= 30; ++c2) {
          if (c2 == 0) continue;
          SparsePoly f({{0, c1}, {d, c2}});
          long count = count_binomial_roots(f, p);
          ++cases;
          if (count != 0 && count != expected_nonzero) {
            detail = "count " + std::to_string(count) + " for " +
                     f.to_string() + " over Q_" + p.get_str();
            return false;
          }
          long oracle = count_qp_roots_oracle(f, p);
          if (count != oracle) {
            detail = "oracle " + std::to_string(oracle) + " vs " +
                     std::to_string(count) + " for " + f.to_string() +
                     " over Q_" + p.get_str();
            return false;
          }
          if (count >= 2) {
            long o1 = ord_p(mpz_class(c1), p).value();
            long o2 = ord_p(mpz_class(c2), p).value();
            g_binomial_pairs.push_back(
                {d, (o1 - o2) / d,
                 mpz_class(std::max(std::abs(c1), std::abs(c2))), p});
          }
        }
      }
    }
  }
  double elapsed = seconds_since(t0);
  detail = std::to_string(cases) + " binomials in " +
           std::to_string(elapsed).substr(0, 6) + "s";
  return elapsed < 300.0;
}

// ---------------------------------------------------------------- criterion 6

bool criterion6(std::string& detail) {
  auto t0 = Clock::now();
  mpz_class p = 3;
  for (long h : {3L, 4L}) {
    long prev_gap = -1, prev_d = 0;
    for (long d : {4L, 6L, 8L, 10L}) {
      TetranomialInstance inst = make_instance(p, h, d);
      SeparationResult sep = measure_separation(
          inst, static_cast<unsigned>(inst.expected_gap) + 8);
      long floor_gap = (h - 1) * d / 2 + h;
      if (sep.measured_gap < floor_gap) {
        detail = "gap " + std::to_string(sep.measured_gap) + " below " +
                 std::to_string(floor_gap) + " at h=" + std::to_string(h) +
                 " d=" + std::to_string(d);
        return false;
      }
      if (prev_gap >= 0) {
        // slope in d at least (h-1)/2: precision demand grows linearly
        long rise = sep.measured_gap - prev_gap;
        long run = d - prev_d;
        if (2 * rise < (h - 1) * run) {
          detail = "sub-linear growth at h=" + std::to_string(h);
          return false;
        }
      }
      prev_gap = sep.measured_gap;
      prev_d = d;
    }
  }
  return seconds_since(t0) < 60.0;
}

// ---------------------------------------------------------------- criterion 7

bool criterion7(std::string& detail) {
  // trinomial pairs: every observable pairwise separation stays below the
  // a-priori bound
  long pairs = 0;
  for (const SolvedCase& sc : g_trinomial_corpus) {
    if (sc.rep.roots.size() < 2) continue;
    double bound = trinomial_separation_bound(sc.f, sc.p).ord_bound;
    for (std::size_t i = 0; i < sc.rep.roots.size(); ++i) {
      for (std::size_t j = i + 1; j < sc.rep.roots.size(); ++j) {
        const ApproxRoot& a = sc.rep.roots[i];
        const ApproxRoot& b = sc.rep.roots[j];
        double ord;
        if (a.valuation != b.valuation) {
          ord = static_cast<double>(std::min(a.valuation, b.valuation));
        } else {
          unsigned k = std::min(a.unit_k, b.unit_k);
          mpz_class diff = a.unit_value - b.unit_value;
          long du = diff == 0 ? static_cast<long>(k)
                              : std::min<long>(ord_p(diff, sc.p).value(), k);
          ord = static_cast<double>(a.valuation + du);
        }
        ++pairs;
        if (ord > bound) {
          detail = "pair separation " + std::to_string(ord) +
                   " exceeds bound " + std::to_string(bound) + " for " +
                   sc.f.to_string();
          return false;
        }
      }
    }
  }
  // binomial pairs: distinct roots share the valuation v and differ in their
  // leading unit digit, so ord(z1 - z2) = v exactly
  for (const BinomialObs& obs : g_binomial_pairs) {
    double logp = std::log(mpz_get_d(obs.p.get_mpz_t()));
    double measured = std::fabs(static_cast<double>(obs.v)) * logp;
    double bound = binomial_separation_bound(obs.d, obs.H, obs.p);
    ++pairs;
    if (measured > bound + 1e-9) {
      detail = "binomial |log sep| " + std::to_string(measured) +
               " exceeds bound " + std::to_string(bound);
      return false;
    }
  }
  detail = std::to_string(pairs) + " root pairs";
  return pairs > 0;
}

// ---------------------------------------------------------------- criterion 8

// Independent re-evaluation of the valuation bound: higher precision,
// round-to-nearest, factors multiplied in a different order.
double yu_reference(unsigned n, const mpz_class& p,
                    const std::vector<double>& logA, double logB) {
  mpfr_t acc, t, logp;
  mpfr_inits2(512, acc, t, logp, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_z(logp, p.get_mpz_t(), MPFR_RNDN);
  mpfr_log(logp, logp, MPFR_RNDN);

  // max term first
  mpfr_set_d(acc, logA[n - 1], MPFR_RNDN);
  mpfr_mul_ui(acc, acc, 4096ul * 3ul * n * (n + 1), MPFR_RNDN);
  mpfr_log(acc, acc, MPFR_RNDN);
  mpfr_div_ui(t, logp, n, MPFR_RNDN);
  if (mpfr_cmp(acc, t) < 0) mpfr_set(acc, t, MPFR_RNDN);

  // * log(4B)
  mpfr_set_ui(t, 4ul, MPFR_RNDN);
  mpfr_log(t, t, MPFR_RNDN);
  mpfr_add_d(t, t, logB, MPFR_RNDN);
  mpfr_mul(acc, acc, t, MPFR_RNDN);

  // * logA_i in reverse order
  for (unsigned i = n; i-- > 0;) {
    mpfr_mul_d(acc, acc, logA[i], MPFR_RNDN);
  }

  // * (p-1) * 11145
  mpfr_set_z(t, p.get_mpz_t(), MPFR_RNDN);
  mpfr_sub_ui(t, t, 1ul, MPFR_RNDN);
  mpfr_mul(acc, acc, t, MPFR_RNDN);
  mpfr_mul_ui(acc, acc, 11145ul, MPFR_RNDN);

  // * (24 (n+1)^2 / log p)^{n+2}
  mpfr_set_ui(t, 24ul * (n + 1) * (n + 1), MPFR_RNDN);
  mpfr_div(t, t, logp, MPFR_RNDN);
  mpfr_pow_ui(t, t, n + 2, MPFR_RNDN);
  mpfr_mul(acc, acc, t, MPFR_RNDN);

  double r = mpfr_get_d(acc, MPFR_RNDN);
  mpfr_clears(acc, t, logp, static_cast<mpfr_ptr>(nullptr));
  return r;
}

bool close_to_ulps(double a, double b, int ulps) {
  if (a == b) return true;
  double lo = std::min(a, b), hi = std::max(a, b);
  for (int i = 0; i < ulps; ++i) {
    lo = std::nextafter(lo, hi);
    if (lo == hi) return true;
  }
  return false;
}

bool criterion8(std::string& detail) {
  std::mt19937 rng(777);
  const long primes[] = {3, 5, 7, 11, 13, 17, 101, 65537};
  for (int trial = 0; trial < 100; ++trial) {
    unsigned n = 2 + rng() % 4;
    mpz_class p = primes[rng() % 8];
    double logp = std::log(mpz_get_d(p.get_mpz_t()));
    std::vector<double> logA(n);
    double base = logp + 0.01;
    for (unsigned i = 0; i < n; ++i) {
      base += (rng() % 1000) / 100.0;
      logA[i] = base;
    }
    double logB = std::log(3.0) + (rng() % 1000) / 50.0;

    double lib = yu_valuation_bound(n, p, logA, logB);
    double ref = yu_reference(n, p, logA, logB);
    // 192-bit up-rounding vs 512-bit nearest: at most one double ulp apart
    if (!close_to_ulps(lib, ref, 2)) {
      detail = "evaluators disagree: " + std::to_string(lib) + " vs " +
               std::to_string(ref);
      return false;
    }
    // monotone in every logA_i and in logB
    std::vector<double> bumped = logA;
    bumped[n - 1] += 1.0;
    if (yu_valuation_bound(n, p, bumped, logB) < lib) {
      detail = "not monotone in logA";
      return false;
    }
    if (yu_valuation_bound(n, p, logA, logB + 1.0) < lib) {
      detail = "not monotone in logB";
      return false;
    }
  }
  detail = "100 parameter sets, two evaluators";
  return true;
}

// ------------------------------------------------------------ smoke benchmark

bool smoke_benchmark(std::string& detail) {
  mpz_class p = 7;
  for (long e : {3L, 6L, 9L, 12L}) {
    mpz_class d10 = 1;
    for (long i = 0; i < e; ++i) d10 *= 10;
    std::string text = "1 - x^" + d10.get_str();
    auto t0 = Clock::now();
    SolveReport rep = solve(SparsePoly::parse(text), p);
    double dt = seconds_since(t0);
    if (dt >= 2.0) {
      detail = "d = 10^" + std::to_string(e) + " took " +
               std::to_string(dt) + "s";
      return false;
    }
    // gcd(10^e, 6) = 2 roots, always: +-1 are 10^e-th roots of unity in Q_7
    if (rep.root_count != 2) {
      detail = "wrong count at d = 10^" + std::to_string(e);
      return false;
    }
  }
  detail = "sparse binomials up to degree 10^12";
  return true;
}

}  // namespace

int main() {
  report(1, criterion1());
  report(2, criterion2());
  std::string d3, d4, d5, d6, d7, d8, ds;
  report(3, criterion3(d3), d3);
  report(4, criterion4(d4), d4);
  report(5, criterion5(d5), d5);
  report(6, criterion6(d6), d6);
  report(7, criterion7(d7), d7);
  report(8, criterion8(d8), d8);
  bool smoke = smoke_benchmark(ds);
  std::printf("smoke benchmark: %s%s%s\n", smoke ? "PASS" : "FAIL",
              ds.empty() ? "" : "  -- ", ds.c_str());
  if (!smoke) ++g_failures;
  return g_failures == 0 ? 0 : 1;
}
