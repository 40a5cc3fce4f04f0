// Exact sparse integer polynomials: parsing, evaluation mod p^k, Taylor
// coefficients at a point, and the root-preserving substitutions used by the
// solvers (strip x-powers, rescale to unit coefficients, reverse).
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "padic/arith.hpp"

namespace padic {

struct syntax_error : error {
  syntax_error(const std::string& what, std::size_t pos)
      : error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};
struct negative_exponent_error : syntax_error {
  using syntax_error::syntax_error;
};
struct zero_polynomial_error : error {
  using error::error;
};
struct constant_term_zero_error : error {
  using error::error;
};
struct non_integral_shift_error : error {
  using error::error;
};
struct index_out_of_range_error : error {
  using error::error;
};

class SparsePoly {
 public:
  struct Term {
    long exp;
    mpz_class coeff;
  };

  SparsePoly() = default;
  // Combines like terms, drops zeros, sorts by exponent.
  explicit SparsePoly(std::vector<Term> terms);

  /// Sum of `c`, `c*x`, `c*x^a` terms with optional signs and whitespace.
  static SparsePoly parse(const std::string& text);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  long degree() const;  // requires nonzero
  long lowest_exponent() const;
  const mpz_class& coeff(long exp) const;  // 0 if absent
  const mpz_class& constant_term() const { return coeff(0); }
  const mpz_class& leading_coeff() const;

  mpz_class eval_mod(const mpz_class& x, const PadicContext& ctx) const;

  /// (f^{(i)}(zeta)/i!) mod p^k, via exact integer binomial coefficients.
  mpz_class taylor_coeff(const mpz_class& zeta, long i,
                         const PadicContext& ctx) const;

  SparsePoly derivative() const;

  /// f = x^a1 * g with g(0) != 0; returns (g, a1).
  std::pair<SparsePoly, long> normalize_x_power() const;

  /// Reverse coefficient order (a -> d - a); roots map to reciprocals.
  /// Requires f(0) != 0.
  SparsePoly reverse() const;

  /// f(p^v * x) / p^m with m chosen so the result is a primitive-in-p
  /// integer polynomial; its roots are p^{-v} times the roots of f.
  SparsePoly rescale_valuation(const mpz_class& p, long v) const;

  /// Divide out the integer content (gcd of coefficients, sign preserved).
  SparsePoly divide_content() const;

  /// Reduce every coefficient mod p^k (dropping terms that vanish).
  SparsePoly reduce(const PadicContext& ctx) const;

  std::string to_string() const;

  bool operator==(const SparsePoly& o) const;

 private:
  std::vector<Term> terms_;  // ascending exponents, nonzero coefficients
};

struct RescaleResult {
  SparsePoly g;    // unit-coefficient polynomial
  long shift;      // roots of original = p^shift * roots of g
  bool inverted;   // whether coefficients were reversed first
};

/// Normalization for binomials/trinomials: produce g with p not
/// dividing the constant and first nonconstant coefficient. Throws
/// non_integral_shift_error when the required root rescaling is fractional
/// (equivalently: no lower polygon edge at the origin has integer slope).
RescaleResult rescale_unit_coeffs(const SparsePoly& f, const mpz_class& p);

}  // namespace padic
