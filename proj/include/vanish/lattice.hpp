#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vanish/integer_matrix.hpp"

namespace vanish {

/// Finitely generated abelian group Z^free_rank (+) Z/d1 (+) ... with d1 | d2 | ...
struct FinAbGroup {
  std::size_t free_rank = 0;
  IntegerVector torsion;

  bool is_free() const { return torsion.empty(); }
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;
};

/// Sublattice of Z^ambient_rank. The basis is stored as the columns of a
/// matrix in column-style Hermite normal form (the transpose of
/// row_hermite_form), so two submodules are equal iff their bases are.
class Submodule {
 public:
  Submodule() = default;

  /// Span of the columns of `generators`.
  static Submodule span(const IntegerMatrix& generators);
  static Submodule full(std::size_t ambient_rank);
  static Submodule zero(std::size_t ambient_rank);

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return basis_.cols(); }
  const IntegerMatrix& basis() const { return basis_; }

  bool contains(const IntegerVector& v) const { return coordinates(v).has_value(); }
  /// Integer c with basis() * c == v, if v lies in the submodule.
  std::optional<IntegerVector> coordinates(const IntegerVector& v) const;
  bool contains(const Submodule& other) const;

  friend bool operator==(const Submodule&, const Submodule&) = default;

 private:
  Submodule(std::size_t ambient_rank, IntegerMatrix basis)
      : ambient_rank_(ambient_rank), basis_(std::move(basis)) {}

  std::size_t ambient_rank_ = 0;
  IntegerMatrix basis_;
};

/// {x : m x = 0} in Z^cols; always saturated.
Submodule kernel(const IntegerMatrix& m);
/// Column span of m in Z^rows.
Submodule image(const IntegerMatrix& m);
/// Z^rows / im(m).
FinAbGroup cokernel(const IntegerMatrix& m);
/// Throws std::invalid_argument on ambient-rank mismatch.
Submodule intersect(const Submodule& a, const Submodule& b);

/// Vectors of Z^rank fixed by every generator: the intersection of
/// ker(g - id). An empty generator list gives the full module.
Submodule common_fixed_submodule(const std::vector<IntegerMatrix>& generators, std::size_t rank);

}  // namespace vanish
