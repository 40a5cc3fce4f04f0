// Dense integer polynomials for desk-scale exact work: pseudo-division,
// primitive-PRS gcd, subresultant-PRS resultants, and square-free parts.
#pragma once

#include <vector>

#include "padic/poly.hpp"

namespace padic {

struct degree_too_large_error : error {
  using error::error;
};
struct not_square_free_error : error {
  using error::error;
};

class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<mpz_class> coeffs);  // coeffs[i] of x^i

  static DensePoly from_sparse(const SparsePoly& f, long degree_cap);

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 if 0
  const mpz_class& lc() const;
  const std::vector<mpz_class>& coeffs() const { return c_; }
  const mpz_class& coeff(long i) const;

  DensePoly derivative() const;
  mpz_class content() const;  // >= 0; 0 only for the zero polynomial
  DensePoly primitive_part() const;
  SparsePoly to_sparse() const;

  DensePoly operator*(const DensePoly& o) const;
  DensePoly operator-(const DensePoly& o) const;

  /// lc(den)^(deg num - deg den + 1) * num = q*den + r with deg r < deg den.
  static void pseudo_divrem(const DensePoly& num, const DensePoly& den,
                            DensePoly& q, DensePoly& r);

  /// Exact division; throws error if the division is not exact over Z.
  DensePoly exact_div(const DensePoly& den) const;

  static DensePoly gcd(const DensePoly& a, const DensePoly& b);

  static mpz_class resultant(const DensePoly& a, const DensePoly& b);

  /// f / gcd(f, f'), primitive, with positive leading coefficient.
  DensePoly square_free_part() const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

}  // namespace padic
