#include "vanish/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace vanish {

IntegerPolynomial::IntegerPolynomial(IntegerVector coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntegerPolynomial::IntegerPolynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

void IntegerPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  IntegerVector c(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntegerPolynomial(std::move(c));
}

std::string IntegerPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long d = degree(); d >= 0; --d) {
    const Integer& c = coeffs_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0 || mag != 1) os << mag.get_str();
    if (d >= 1) os << 't';
    if (d >= 2) os << '^' << d;
  }
  return os.str();
}

IntegerPolynomial char_poly(const IntegerMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly of non-square matrix");
  const std::size_t n = m.rows();
  // c[n] = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k.
  IntegerVector c(n + 1, Integer(0));
  c[n] = 1;
  IntegerMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    const IntegerMatrix am = m * mk;
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    Integer kk = static_cast<unsigned long>(k);
    mpz_divexact(trace.get_mpz_t(), trace.get_mpz_t(), kk.get_mpz_t());
    c[n - k] = -trace;
  }
  return IntegerPolynomial(std::move(c));
}

bool poly_divides(const IntegerPolynomial& p, const IntegerPolynomial& q) {
  if (q.is_zero()) throw std::invalid_argument("poly_divides: dividend is zero");
  if (p.is_zero()) return false;
  if (p.degree() > q.degree()) return false;
  std::vector<Rational> rem;
  for (const auto& x : q.coefficients()) rem.emplace_back(x);
  const auto& div = p.coefficients();
  const Rational lead(p.leading());
  for (long d = q.degree(); d >= p.degree(); --d) {
    const Rational factor = rem[static_cast<std::size_t>(d)] / lead;
    if (factor == 0) continue;
    const std::size_t shift = static_cast<std::size_t>(d - p.degree());
    for (std::size_t i = 0; i < div.size(); ++i) rem[shift + i] -= factor * Rational(div[i]);
  }
  for (const auto& r : rem)
    if (r != 0) return false;
  return true;
}

IntegerPolynomial product(const std::vector<IntegerPolynomial>& factors) {
  IntegerPolynomial acc{1};
  for (const auto& f : factors) acc = acc * f;
  return acc;
}

}  // namespace vanish
