#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace knotgrid {

/// Integer-coefficient polynomial in one variable with exponents of either
/// sign. Zero coefficients are never stored, so equality is plain map
/// equality.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;

  static LaurentPolynomial one() { return monomial(1, 0); }
  static LaurentPolynomial monomial(std::int64_t coeff, std::int64_t exp);

  void add_term(std::int64_t exp, std::int64_t coeff);
  std::int64_t coeff(std::int64_t exp) const;
  bool is_zero() const { return terms_.empty(); }

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  bool operator==(const LaurentPolynomial& o) const = default;

  /// Multiplies by c * x^e.
  LaurentPolynomial scaled(std::int64_t coeff, std::int64_t exp) const;

  /// Value at x = 1 or x = -1 (the only exact integer evaluations that make
  /// sense with negative exponents).
  std::int64_t evaluate_at_sign(int sign) const;

  /// coeff(e) == coeff(-e) for all exponents.
  bool is_palindromic() const;

  const std::map<std::int64_t, std::int64_t>& terms() const { return terms_; }

  /// Rendering like "-t^-4 + t^-3 + t^-1"; exponents divided by `exp_unit`
  /// (Jones values are stored over quarter exponents, unit 4).
  std::string to_string(const std::string& var, std::int64_t exp_unit = 1) const;

 private:
  std::map<std::int64_t, std::int64_t> terms_;
};

}  // namespace knotgrid
