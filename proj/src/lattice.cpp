#include "vanish/lattice.hpp"

#include <stdexcept>

#include "vanish/normal_form.hpp"

namespace vanish {

Submodule Submodule::span(const IntegerMatrix& generators) {
  const std::size_t ambient = generators.rows();
  IntegerMatrix h = row_hermite_form(generators.transpose());
  // row_hermite_form of a 0-row matrix keeps the column count; normalise shape.
  IntegerMatrix basis = h.transpose();
  if (basis.rows() != ambient) basis = IntegerMatrix(ambient, 0);
  return Submodule(ambient, std::move(basis));
}

Submodule Submodule::full(std::size_t ambient_rank) {
  return Submodule(ambient_rank, IntegerMatrix::identity(ambient_rank));
}

Submodule Submodule::zero(std::size_t ambient_rank) {
  return Submodule(ambient_rank, IntegerMatrix(ambient_rank, 0));
}

std::optional<IntegerVector> Submodule::coordinates(const IntegerVector& v) const {
  if (v.size() != ambient_rank_) throw std::invalid_argument("vector length mismatch");
  // Column j of the basis is zero above its pivot row and pivot rows increase,
  // so the coordinates follow by forward substitution on the pivot rows.
  IntegerVector c(rank());
  IntegerVector residual = v;
  std::size_t row = 0;
  for (std::size_t j = 0; j < rank(); ++j) {
    while (basis_(row, j) == 0) {
      if (residual[row] != 0) return std::nullopt;
      ++row;
    }
    const Integer& pivot = basis_(row, j);
    if (!mpz_divisible_p(residual[row].get_mpz_t(), pivot.get_mpz_t())) return std::nullopt;
    mpz_divexact(c[j].get_mpz_t(), residual[row].get_mpz_t(), pivot.get_mpz_t());
    for (std::size_t r = row; r < ambient_rank_; ++r) residual[r] -= c[j] * basis_(r, j);
    ++row;
  }
  for (const auto& x : residual)
    if (x != 0) return std::nullopt;
  return c;
}

bool Submodule::contains(const Submodule& other) const {
  if (other.ambient_rank_ != ambient_rank_) return false;
  for (std::size_t j = 0; j < other.rank(); ++j)
    if (!contains(other.basis_.column(j))) return false;
  return true;
}

Submodule kernel(const IntegerMatrix& m) {
  const auto s = smith_normal_form(m);
  std::size_t r = 0;
  while (r < std::min(s.d.rows(), s.d.cols()) && s.d(r, r) != 0) ++r;
  return Submodule::span(s.v.block(0, r, m.cols(), m.cols() - r));
}

Submodule image(const IntegerMatrix& m) { return Submodule::span(m); }

FinAbGroup cokernel(const IntegerMatrix& m) {
  FinAbGroup g;
  std::size_t nonzero = 0;
  for (const auto& x : smith_diagonal(m)) {
    if (x == 0) continue;
    ++nonzero;
    if (x > 1) g.torsion.push_back(x);
  }
  g.free_rank = m.rows() - nonzero;
  return g;
}

Submodule intersect(const Submodule& a, const Submodule& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw std::invalid_argument("intersect: ambient rank mismatch");
  // a x == b y  <=>  (x, y) in ker [A | -B]; bases are independent so the
  // lattice of solutions maps onto the intersection.
  const IntegerMatrix stacked = hstack(a.basis(), -b.basis());
  const Submodule solutions = kernel(stacked);
  const IntegerMatrix x_part = solutions.basis().block(0, 0, a.rank(), solutions.rank());
  return Submodule::span(a.basis() * x_part);
}

Submodule common_fixed_submodule(const std::vector<IntegerMatrix>& generators,
                                 std::size_t rank) {
  Submodule fixed = Submodule::full(rank);
  const IntegerMatrix id = IntegerMatrix::identity(rank);
  for (const auto& g : generators) fixed = intersect(fixed, kernel(g - id));
  return fixed;
}

}  // namespace vanish
