#pragma once

#include <string>
#include <vector>

#include "vanish/integer_matrix.hpp"

namespace vanish {

/// Integer polynomial in t, coefficients lowest degree first, no trailing zeros.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(IntegerVector coefficients);
  IntegerPolynomial(std::initializer_list<long> coefficients);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const IntegerVector& coefficients() const { return coeffs_; }
  const Integer& leading() const { return coeffs_.back(); }

  friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b);
  friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

  /// e.g. "t^2 - 1"
  std::string to_string() const;

 private:
  void trim();
  IntegerVector coeffs_;
};

/// det(t I - m), computed with the Faddeev-LeVerrier recurrence (exact
/// divisions). Throws std::invalid_argument for non-square input.
IntegerPolynomial char_poly(const IntegerMatrix& m);

/// Whether p divides q in Q[t]. Throws std::invalid_argument if q is zero.
bool poly_divides(const IntegerPolynomial& p, const IntegerPolynomial& q);

IntegerPolynomial product(const std::vector<IntegerPolynomial>& factors);

}  // namespace vanish
