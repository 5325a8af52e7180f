#pragma once

#include <cstddef>

#include "vanish/integer_matrix.hpp"

namespace vanish {

/// u * m * v == d with u, v unimodular and d diagonal, nonnegative,
/// each nonzero diagonal entry dividing the next.
struct SmithDecomposition {
  IntegerMatrix u;
  IntegerMatrix d;
  IntegerMatrix v;
};

// Pivot choice: smallest absolute nonzero entry of the active submatrix,
// ties broken by lowest row, then lowest column. Output is reproducible.
SmithDecomposition smith_normal_form(const IntegerMatrix& m);

/// Diagonal of the Smith form (length min(rows, cols)), without transforms.
IntegerVector smith_diagonal(const IntegerMatrix& m);

std::size_t rank(const IntegerMatrix& m);

/// Row-style Hermite normal form of the row span: nonzero rows only, pivots
/// strictly increasing in column, positive, entries above each pivot reduced
/// into [0, pivot).
IntegerMatrix row_hermite_form(const IntegerMatrix& m);

}  // namespace vanish
