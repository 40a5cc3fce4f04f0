#include "padic/dense.hpp"

#include <algorithm>

namespace padic {

namespace {
const mpz_class kZero = 0;

mpz_class pow_mpz(const mpz_class& b, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}
}  // namespace

DensePoly::DensePoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
  trim();
}

void DensePoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

DensePoly DensePoly::from_sparse(const SparsePoly& f, long degree_cap) {
  if (f.is_zero()) return DensePoly();
  if (f.degree() > degree_cap) {
    throw degree_too_large_error("degree " + std::to_string(f.degree()) +
                                 " exceeds dense cap " +
                                 std::to_string(degree_cap));
  }
  std::vector<mpz_class> c(f.degree() + 1, mpz_class(0));
  for (const auto& t : f.terms()) c[t.exp] = t.coeff;
  return DensePoly(std::move(c));
}

const mpz_class& DensePoly::lc() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

const mpz_class& DensePoly::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(c_.size())) return kZero;
  return c_[i];
}

DensePoly DensePoly::derivative() const {
  if (c_.size() <= 1) return DensePoly();
  std::vector<mpz_class> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * (long)i;
  return DensePoly(std::move(d));
}

mpz_class DensePoly::content() const {
  mpz_class g = 0;
  for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

DensePoly DensePoly::primitive_part() const {
  if (c_.empty()) return DensePoly();
  mpz_class g = content();
  std::vector<mpz_class> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] / g;
  return DensePoly(std::move(out));
}

SparsePoly DensePoly::to_sparse() const {
  std::vector<SparsePoly::Term> ts;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) ts.push_back({static_cast<long>(i), c_[i]});
  }
  return SparsePoly(std::move(ts));
}

DensePoly DensePoly::operator*(const DensePoly& o) const {
  if (is_zero() || o.is_zero()) return DensePoly();
  std::vector<mpz_class> out(c_.size() + o.c_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  return DensePoly(std::move(out));
}

DensePoly DensePoly::operator-(const DensePoly& o) const {
  std::vector<mpz_class> out(std::max(c_.size(), o.c_.size()), mpz_class(0));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - o.coeff(i);
  return DensePoly(std::move(out));
}

void DensePoly::pseudo_divrem(const DensePoly& num, const DensePoly& den,
                              DensePoly& q, DensePoly& r) {
  if (den.is_zero()) throw error("pseudo-division by zero");
  long dn = num.degree(), dd = den.degree();
  if (dn < dd) {
    q = DensePoly();
    r = num;
    return;
  }
  const mpz_class& l = den.lc();
  std::vector<mpz_class> rem = num.c_;
  std::vector<mpz_class> quo(dn - dd + 1, mpz_class(0));
  long e = dn - dd + 1;
  while (true) {
    long dr = static_cast<long>(rem.size()) - 1;
    while (dr >= 0 && rem[dr] == 0) --dr;
    if (dr < dd) break;
    mpz_class t = rem[dr];
    for (auto& x : quo) x *= l;
    quo[dr - dd] += t;
    for (auto& x : rem) x *= l;
    for (long i = 0; i <= dd; ++i) rem[dr - dd + i] -= t * den.c_[i];
    --e;
  }
  // normalize so the defining identity holds with exponent dn-dd+1
  mpz_class scale = pow_mpz(l, static_cast<unsigned long>(e));
  for (auto& x : quo) x *= scale;
  for (auto& x : rem) x *= scale;
  q = DensePoly(std::move(quo));
  r = DensePoly(std::move(rem));
}

DensePoly DensePoly::exact_div(const DensePoly& den) const {
  if (den.is_zero()) throw error("division by zero polynomial");
  if (is_zero()) return DensePoly();
  long dn = degree(), dd = den.degree();
  if (dn < dd) throw error("exact_div: degree mismatch");
  std::vector<mpz_class> rem = c_;
  std::vector<mpz_class> quo(dn - dd + 1, mpz_class(0));
  for (long i = dn - dd; i >= 0; --i) {
    mpz_class& top = rem[i + dd];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), den.lc().get_mpz_t())) {
      throw error("exact_div: division not exact");
    }
    mpz_class qc = top / den.lc();
    quo[i] = qc;
    for (long j = 0; j <= dd; ++j) rem[i + j] -= qc * den.c_[j];
  }
  for (const auto& x : rem) {
    if (x != 0) throw error("exact_div: nonzero remainder");
  }
  return DensePoly(std::move(quo));
}

DensePoly DensePoly::gcd(const DensePoly& a, const DensePoly& b) {
  auto normalize = [](DensePoly g) {
    if (!g.is_zero() && g.lc() < 0) {
      for (auto& x : g.c_) x = -x;
    }
    return g;
  };
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  mpz_class cg;
  mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  DensePoly A = a.primitive_part(), B = b.primitive_part();
  if (A.degree() < B.degree()) std::swap(A, B);
  while (!B.is_zero()) {
    DensePoly q, r;
    pseudo_divrem(A, B, q, r);
    A = B;
    B = r.is_zero() ? DensePoly() : r.primitive_part();
  }
  DensePoly g = normalize(A.primitive_part());
  std::vector<mpz_class> out(g.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = g.coeffs()[i] * cg;
  return DensePoly(std::move(out));
}

mpz_class DensePoly::resultant(const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  if (a.degree() < b.degree()) {
    mpz_class r = resultant(b, a);
    if ((a.degree() & 1) && (b.degree() & 1)) r = -r;
    return r;
  }
  if (b.degree() == 0) return pow_mpz(b.lc(), a.degree());
  mpz_class ca = a.content(), cb = b.content();
  DensePoly A = a.primitive_part(), B = b.primitive_part();
  mpz_class t = pow_mpz(ca, B.degree()) * pow_mpz(cb, A.degree());
  mpz_class g = 1, h = 1;
  int s = 1;
  while (true) {
    long dA = A.degree(), dB = B.degree();
    long delta = dA - dB;
    if ((dA & 1) && (dB & 1)) s = -s;
    DensePoly q, r;
    pseudo_divrem(A, B, q, r);
    A = B;
    if (r.is_zero()) return 0;  // positive-degree common factor
    mpz_class den = g * pow_mpz(h, delta);
    B = r.exact_div(DensePoly({den}));
    g = A.lc();
    if (delta > 0) {
      // h <- g^delta / h^(delta-1), exact
      mpz_class num = pow_mpz(g, delta);
      mpz_class d2 = pow_mpz(h, delta - 1);
      h = num / d2;
    }
    if (B.degree() == 0) break;
  }
  long dA = A.degree();
  mpz_class num = pow_mpz(B.lc(), dA);
  mpz_class den = pow_mpz(h, dA - 1);
  mpz_class res = s * t * (num / den);
  return res;
}

DensePoly DensePoly::square_free_part() const {
  if (is_zero()) throw zero_polynomial_error("square_free_part(0)");
  if (degree() <= 0) return DensePoly({mpz_class(1)});
  DensePoly g = gcd(*this, derivative());
  DensePoly p = primitive_part();
  if (lc() < 0) {
    for (auto& x : p.c_) x = -x;
  }
  if (g.degree() == 0) return p;
  DensePoly q = p.exact_div(g).primitive_part();
  if (q.lc() < 0) {
    for (auto& x : q.c_) x = -x;
  }
  return q;
}

}  // namespace padic
