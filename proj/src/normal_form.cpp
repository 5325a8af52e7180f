#include "vanish/normal_form.hpp"

#include <optional>
#include <utility>

namespace vanish {
namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

std::optional<Position> smallest_pivot(const IntegerMatrix& d, std::size_t t) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer a = abs(d(i, j));
      if (!best || a < best_abs) {
        best = Position{i, j};
        best_abs = std::move(a);
      }
    }
  return best;
}

// Shared elimination; u and v are updated only when non-null.
void reduce_to_smith(IntegerMatrix& d, IntegerMatrix* u, IntegerMatrix* v) {
  const std::size_t steps = std::min(d.rows(), d.cols());
  Integer q;
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      auto pivot = smallest_pivot(d, t);
      if (!pivot) return;
      d.swap_rows(t, pivot->row);
      if (u) u->swap_rows(t, pivot->row);
      d.swap_cols(t, pivot->col);
      if (v) v->swap_cols(t, pivot->col);

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        q = -q;
        d.add_row_multiple(i, t, q);
        if (u) u->add_row_multiple(i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        q = -q;
        d.add_col_multiple(j, t, q);
        if (v) v->add_col_multiple(j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Row and column t are clear; enforce divisibility of the rest.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < d.rows() && !offending; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            offending = i;
            break;
          }
      if (offending) {
        d.add_row_multiple(t, *offending, 1);
        if (u) u->add_row_multiple(t, *offending, 1);
        continue;
      }
      break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      if (u) u->negate_row(t);
    }
  }
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
  SmithDecomposition s{IntegerMatrix::identity(m.rows()), m, IntegerMatrix::identity(m.cols())};
  reduce_to_smith(s.d, &s.u, &s.v);
  return s;
}

IntegerVector smith_diagonal(const IntegerMatrix& m) {
  IntegerMatrix d = m;
  reduce_to_smith(d, nullptr, nullptr);
  IntegerVector diag;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) diag.push_back(d(i, i));
  return diag;
}

std::size_t rank(const IntegerMatrix& m) {
  std::size_t r = 0;
  for (const auto& x : smith_diagonal(m))
    if (x != 0) ++r;
  return r;
}

IntegerMatrix row_hermite_form(const IntegerMatrix& m) {
  IntegerMatrix h = m;
  std::size_t pivot_row = 0;
  Integer q;
  for (std::size_t c = 0; c < h.cols() && pivot_row < h.rows(); ++c) {
    // Euclid on column c among rows pivot_row.. until a single nonzero remains.
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = pivot_row; i < h.rows(); ++i)
        if (h(i, c) != 0 && (!best || abs(h(i, c)) < abs(h(*best, c)))) best = i;
      if (!best) break;
      h.swap_rows(pivot_row, *best);
      bool single = true;
      for (std::size_t i = pivot_row + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(pivot_row, c).get_mpz_t());
        h.add_row_multiple(i, pivot_row, -q);
        if (h(i, c) != 0) single = false;
      }
      if (single) break;
    }
    if (h(pivot_row, c) == 0) continue;
    if (h(pivot_row, c) < 0) h.negate_row(pivot_row);
    for (std::size_t i = 0; i < pivot_row; ++i) {
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(pivot_row, c).get_mpz_t());
      h.add_row_multiple(i, pivot_row, -q);
    }
    ++pivot_row;
  }
  return h.block(0, 0, pivot_row, h.cols());
}

}  // namespace vanish
