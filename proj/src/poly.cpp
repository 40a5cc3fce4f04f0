#include "padic/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace padic {

namespace {

const mpz_class kZero = 0;

// C(n, i) mod p^k with the power of p tracked separately, so division by
// non-units never occurs.
mpz_class binom_mod(long n, long i, const PadicContext& ctx) {
  if (i < 0 || i > n) return 0;
  if (i > n - i) i = n - i;
  mpz_class unit = 1;
  long pe = 0;
  for (long j = 1; j <= i; ++j) {
    mpz_class num = n - j + 1;
    mpz_class den = j;
    Valuation vn = ord_p(num, ctx.p());
    Valuation vd = ord_p(den, ctx.p());
    pe += vn.value() - vd.value();
    unit = ctx.reduce(unit * unit_part(num, ctx.p()));
    unit = ctx.reduce(unit * mod_inverse(unit_part(den, ctx.p()), ctx));
  }
  if (pe >= static_cast<long>(ctx.k())) return 0;
  mpz_class pw;
  mpz_pow_ui(pw.get_mpz_t(), ctx.p().get_mpz_t(), pe);
  return ctx.reduce(unit * pw);
}

}  // namespace

SparsePoly::SparsePoly(std::vector<Term> terms) {
  std::map<long, mpz_class> acc;
  for (auto& t : terms) acc[t.exp] += t.coeff;
  for (auto& [e, c] : acc) {
    if (c != 0) terms_.push_back({e, std::move(c)});
  }
}

SparsePoly SparsePoly::parse(const std::string& text) {
  std::vector<Term> terms;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_integer = [&]() -> mpz_class {
    std::size_t start = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw syntax_error("expected a number", start);
    return mpz_class(text.substr(start, i - start));
  };

  skip_ws();
  if (i == n) throw syntax_error("empty polynomial", 0);
  bool first = true;
  while (i < n) {
    skip_ws();
    if (i == n) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      // accept stacked signs, e.g. "+ -3*x"
      while (i < n && (text[i] == '+' || text[i] == '-')) {
        if (text[i] == '-') sign = -sign;
        ++i;
        skip_ws();
      }
    } else if (!first) {
      throw syntax_error("expected '+' or '-' between terms", i);
    }
    first = false;
    mpz_class coeff = 1;
    bool saw_coeff = false;
    if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = read_integer();
      saw_coeff = true;
      skip_ws();
      if (i < n && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    long exp = 0;
    if (i < n && text[i] == 'x') {
      ++i;
      exp = 1;
      skip_ws();
      if (i < n && text[i] == '^') {
        ++i;
        skip_ws();
        if (i < n && text[i] == '-') {
          throw negative_exponent_error("negative exponent", i);
        }
        std::size_t at = i;
        mpz_class e = read_integer();
        if (!e.fits_slong_p()) {
          throw syntax_error("exponent too large", at);
        }
        exp = e.get_si();
      }
    } else if (!saw_coeff) {
      throw syntax_error("expected a term", i);
    }
    terms.push_back({exp, sign * coeff});
    skip_ws();
  }
  return SparsePoly(std::move(terms));
}

long SparsePoly::degree() const {
  if (terms_.empty()) throw zero_polynomial_error("degree of zero polynomial");
  return terms_.back().exp;
}

long SparsePoly::lowest_exponent() const {
  if (terms_.empty()) throw zero_polynomial_error("zero polynomial");
  return terms_.front().exp;
}

const mpz_class& SparsePoly::coeff(long exp) const {
  for (const auto& t : terms_) {
    if (t.exp == exp) return t.coeff;
    if (t.exp > exp) break;
  }
  return kZero;
}

const mpz_class& SparsePoly::leading_coeff() const {
  if (terms_.empty()) throw zero_polynomial_error("zero polynomial");
  return terms_.back().coeff;
}

mpz_class SparsePoly::eval_mod(const mpz_class& x,
                               const PadicContext& ctx) const {
  mpz_class acc = 0;
  for (const auto& t : terms_) {
    acc += t.coeff * mod_pow(x, mpz_class(t.exp), ctx);
  }
  return ctx.reduce(acc);
}

mpz_class SparsePoly::taylor_coeff(const mpz_class& zeta, long i,
                                   const PadicContext& ctx) const {
  if (i < 0 || (is_zero() ? i > 0 : i > degree())) {
    throw index_out_of_range_error("taylor_coeff index out of range");
  }
  mpz_class acc = 0;
  for (const auto& t : terms_) {
    if (t.exp < i) continue;
    mpz_class b = binom_mod(t.exp, i, ctx);
    if (b == 0) continue;
    acc += t.coeff * b * mod_pow(zeta, mpz_class(t.exp - i), ctx);
  }
  return ctx.reduce(acc);
}

SparsePoly SparsePoly::derivative() const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exp == 0) continue;
    out.push_back({t.exp - 1, t.coeff * t.exp});
  }
  return SparsePoly(std::move(out));
}

std::pair<SparsePoly, long> SparsePoly::normalize_x_power() const {
  if (terms_.empty()) throw zero_polynomial_error("normalize_x_power(0)");
  long a1 = terms_.front().exp;
  std::vector<Term> out;
  for (const auto& t : terms_) out.push_back({t.exp - a1, t.coeff});
  return {SparsePoly(std::move(out)), a1};
}

SparsePoly SparsePoly::reverse() const {
  if (terms_.empty() || terms_.front().exp != 0) {
    throw constant_term_zero_error("reverse requires f(0) != 0");
  }
  long d = degree();
  std::vector<Term> out;
  for (const auto& t : terms_) out.push_back({d - t.exp, t.coeff});
  return SparsePoly(std::move(out));
}

SparsePoly SparsePoly::rescale_valuation(const mpz_class& p, long v) const {
  if (terms_.empty()) throw zero_polynomial_error("rescale of 0");
  // exponent of p carried by each term after x -> p^v x
  std::vector<long> e(terms_.size());
  long m = 0;
  for (std::size_t j = 0; j < terms_.size(); ++j) {
    e[j] = ord_p(terms_[j].coeff, p).value() + v * terms_[j].exp;
    if (j == 0 || e[j] < m) m = e[j];
  }
  std::vector<Term> out;
  for (std::size_t j = 0; j < terms_.size(); ++j) {
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(),
               static_cast<unsigned long>(e[j] - m));
    out.push_back({terms_[j].exp, unit_part(terms_[j].coeff, p) * pw});
  }
  return SparsePoly(std::move(out));
}

SparsePoly SparsePoly::divide_content() const {
  if (terms_.empty()) return *this;
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
  }
  std::vector<Term> out;
  for (const auto& t : terms_) out.push_back({t.exp, t.coeff / g});
  return SparsePoly(std::move(out));
}

SparsePoly SparsePoly::reduce(const PadicContext& ctx) const {
  std::vector<Term> out;
  for (const auto& t : terms_) out.push_back({t.exp, ctx.reduce(t.coeff)});
  return SparsePoly(std::move(out));
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    mpz_class c = it->coeff;
    if (!s.empty()) {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    bool unit_coeff = (c == 1 || c == -1) && it->exp != 0;
    if (!unit_coeff) {
      s += c.get_str();
      if (it->exp != 0) s += "*";
    } else if (c == -1) {
      s += "-";
    }
    if (it->exp != 0) {
      s += "x";
      if (it->exp != 1) s += "^" + std::to_string(it->exp);
    }
  }
  return s;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t j = 0; j < terms_.size(); ++j) {
    if (terms_[j].exp != o.terms_[j].exp ||
        terms_[j].coeff != o.terms_[j].coeff) {
      return false;
    }
  }
  return true;
}

RescaleResult rescale_unit_coeffs(const SparsePoly& f, const mpz_class& p) {
  if (f.is_zero() || f.term_count() < 2 || f.term_count() > 3) {
    throw error("rescale_unit_coeffs expects a binomial or trinomial");
  }
  if (f.lowest_exponent() != 0) {
    throw error("rescale_unit_coeffs requires a nonzero constant term");
  }
  auto attempt = [&](const SparsePoly& g,
                     bool inverted) -> std::pair<bool, RescaleResult> {
    const auto& ts = g.terms();
    long o1 = ord_p(ts[0].coeff, p).value();
    long o2 = ord_p(ts[1].coeff, p).value();
    long gap = ts[1].exp;
    long diff = o1 - o2;
    long v = diff / gap;
    if (v * gap != diff) return {false, {}};
    SparsePoly r = g.rescale_valuation(p, v);
    // the first two coefficients must come out as units
    if (ord_p(r.terms()[0].coeff, p).value() != 0 ||
        ord_p(r.terms()[1].coeff, p).value() != 0) {
      return {false, {}};
    }
    return {true, {r, v, inverted}};
  };
  auto direct = attempt(f, false);
  if (direct.first) return direct.second;
  auto rev = attempt(f.reverse(), true);
  if (rev.first) return rev.second;
  throw non_integral_shift_error(
      "no integral root rescaling exists; no roots in Q_p");
}

}  // namespace padic
