#pragma once
// Random valid configurations and the symmetry transforms used by the
// invariance suites.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "vanish/lattice.hpp"
#include "vanish/normal_form.hpp"
#include "vanish/strata.hpp"

namespace testgen {

using vanish::Integer;
using vanish::IntegerMatrix;
using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline IntegerMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  IntegerMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(rng, -bound, bound);
  return m;
}

inline bool within(const IntegerMatrix& m, long bound) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (abs(m(r, c)) > bound) return false;
  return true;
}

/// Unimodular matrix and its inverse, built from elementary operations
/// whose results stay within the entry bound.
inline std::pair<IntegerMatrix, IntegerMatrix> random_unimodular(Rng& rng, std::size_t n, long bound, int steps) {
  IntegerMatrix u = IntegerMatrix::identity(n), inv = IntegerMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    const auto a = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    const auto b = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    const long kind = uniform(rng, 0, 3);
    if (kind == 0 && a != b) {
      u.swap_rows(a, b);
      inv.swap_cols(a, b);
    } else if (kind == 1) {
      u.negate_row(a);
      inv.negate_col(a);
    } else if (a != b) {
      const Integer f = uniform(rng, 0, 1) ? 1 : -1;
      IntegerMatrix trial = u;
      trial.add_row_multiple(a, b, f);
      if (!within(trial, bound)) continue;
      u = trial;
      // (E u)^{-1} = u^{-1} E^{-1}; E^{-1} adds -f times column a to column b.
      inv.add_col_multiple(b, a, -f);
    }
  }
  return {u, inv};
}

/// Monodromy of a transversal fibre: mixes finite-order and unipotent-ish
/// generators so invariant lattices of every rank occur.
inline IntegerMatrix random_monodromy(Rng& rng, std::size_t n) {
  switch (uniform(rng, 0, 4)) {
    case 0:
      return IntegerMatrix::identity(n);
    case 1:
      return -IntegerMatrix::identity(n);
    case 2: {
      std::vector<std::size_t> perm(n);
      for (std::size_t i = 0; i < n; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      IntegerMatrix p(n, n);
      for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = uniform(rng, 0, 3) == 0 ? -1 : 1;
      return p;
    }
    case 3: {
      IntegerMatrix m = IntegerMatrix::identity(n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c)
          if (uniform(rng, 0, 2) == 0) m(r, c) = uniform(rng, -3, 3);
      return m;
    }
    default:
      return random_unimodular(rng, n, 3, 6).first;
  }
}

/// Valid configuration: component ranks <= 4, entries in [-3, 3], at most
/// three special points. Branch monodromies reappear among the component's
/// loops, so the component invariants lie in every branch kernel.
inline vanish::SliceConfiguration random_configuration(Rng& rng) {
  vanish::SliceConfiguration cfg;
  cfg.original_s = uniform(rng, 2, 3);
  cfg.original_n = cfg.original_s + uniform(rng, 1, 3);
  cfg.n = cfg.original_n - cfg.original_s + 2;

  const long ncomp = uniform(rng, 1, 3);
  for (long i = 0; i < ncomp; ++i) {
    vanish::CurveComponent c;
    c.id = "C" + std::to_string(i);
    c.genus = uniform(rng, 0, 4) == 0 ? 1 : 0;
    c.transversal_rank = uniform(rng, 1, 4);
    cfg.components.push_back(std::move(c));
  }
  const long npoints = uniform(rng, 0, 3);
  for (long p = 0; p < npoints; ++p) {
    vanish::SpecialPoint q;
    q.id = "q" + std::to_string(p);
    const long nbranches = uniform(rng, 1, 3);
    for (long k = 0; k < nbranches; ++k) {
      auto& c = cfg.components[static_cast<std::size_t>(uniform(rng, 0, ncomp - 1))];
      const auto nu = random_monodromy(rng, static_cast<std::size_t>(c.transversal_rank));
      q.branches.push_back({c.id, nu});
      c.loop_monodromies.push_back(nu);
    }
    cfg.special_points.push_back(std::move(q));
  }
  for (auto& c : cfg.components) {
    for (long g = 0; g < 2 * c.genus; ++g)
      c.loop_monodromies.push_back(random_monodromy(rng, static_cast<std::size_t>(c.transversal_rank)));
    std::shuffle(c.loop_monodromies.begin(), c.loop_monodromies.end(), rng);
  }

  // iota columns are either generic or "matched": the image of one invariant
  // vector per component, so that ker j picks up nontrivial pairs.
  for (auto& q : cfg.special_points) {
    std::vector<vanish::Submodule> kernels;
    std::size_t kernel_rows = 0;
    for (const auto& b : q.branches) {
      kernels.push_back(vanish::branch_kernel(b));
      kernel_rows += kernels.back().rank();
    }
    auto matched_column = [&]() {
      std::map<std::string, vanish::IntegerVector> chosen;
      IntegerMatrix col(0, 1);
      for (std::size_t k = 0; k < q.branches.size(); ++k) {
        const auto* c = cfg.find_component(q.branches[k].component_id);
        auto it = chosen.find(c->id);
        if (it == chosen.end()) {
          const auto inv = vanish::common_fixed_submodule(c->loop_monodromies,
                                                          static_cast<std::size_t>(c->transversal_rank));
          vanish::IntegerVector v(static_cast<std::size_t>(c->transversal_rank), 0);
          for (std::size_t b = 0; b < inv.rank(); ++b) {
            const long f = uniform(rng, -2, 2);
            for (std::size_t r = 0; r < v.size(); ++r) v[r] += f * inv.basis()(r, b);
          }
          it = chosen.emplace(c->id, v).first;
        }
        const auto coords = kernels[k].coordinates(it->second);
        col = vanish::vstack(col, IntegerMatrix::from_columns(coords->size(), {*coords}));
      }
      return within(col, 3) ? col : random_matrix(rng, kernel_rows, 1, 3);
    };
    long low = uniform(rng, 0, static_cast<long>(std::min<std::size_t>(kernel_rows, 3)));
    IntegerMatrix iota(kernel_rows, 0);
    const bool matched = uniform(rng, 0, 2) != 0;
    for (int attempt = 0; attempt < 20 && low > 0; ++attempt) {
      iota = IntegerMatrix(kernel_rows, 0);
      for (long c = 0; c < low; ++c)
        iota = vanish::hstack(iota, matched && uniform(rng, 0, 4) != 0
                                        ? matched_column()
                                        : random_matrix(rng, kernel_rows, 1, 3));
      if (vanish::rank(iota) == static_cast<std::size_t>(low)) break;
      if (attempt == 19) --low, attempt = -1;
    }
    if (low == 0) iota = IntegerMatrix(kernel_rows, 0);
    q.fq_rank_low = low;
    q.iota = iota;
    q.fq_rank_high = uniform(rng, 0, 3);
    if (uniform(rng, 0, 1)) q.costalk_rank = uniform(rng, 0, std::max(low, 0L));
  }
  const long nisolated = uniform(rng, 0, 2);
  for (long r = 0; r < nisolated; ++r) cfg.isolated_points.push_back({"r" + std::to_string(r), uniform(rng, 0, 5)});
  return cfg;
}

/// Replaces every generator nu of one component by p nu p^{-1} and rewrites
/// iota in the canonical bases of the new branch kernels.
inline vanish::SliceConfiguration conjugate_component(const vanish::SliceConfiguration& cfg, std::size_t index,
                                                      const IntegerMatrix& p, const IntegerMatrix& p_inv) {
  vanish::SliceConfiguration out = cfg;
  auto& c = out.components[index];
  for (auto& g : c.loop_monodromies) g = p * g * p_inv;
  for (auto& q : out.special_points) {
    const IntegerMatrix iota = vanish::normalized_iota(q);
    IntegerMatrix new_iota(0, iota.cols());
    std::size_t row0 = 0;
    for (auto& b : q.branches) {
      const IntegerMatrix old_basis = vanish::branch_kernel(b).basis();
      IntegerMatrix block = iota.block(row0, 0, old_basis.cols(), iota.cols());
      row0 += old_basis.cols();
      if (b.component_id == c.id) {
        b.monodromy = p * b.monodromy * p_inv;
        const vanish::Submodule target = vanish::branch_kernel(b);
        const IntegerMatrix moved = p * old_basis;
        IntegerMatrix change(target.rank(), moved.cols());
        for (std::size_t k = 0; k < moved.cols(); ++k) {
          const auto coords = target.coordinates(moved.column(k));
          for (std::size_t r = 0; r < change.rows(); ++r) change(r, k) = (*coords)[r];
        }
        block = change * block;
      }
      new_iota = vanish::vstack(new_iota, block);
    }
    q.iota = new_iota;
  }
  return out;
}

/// Shuffles components, points, isolated points, loops and branches, moving
/// iota row blocks along with their branches.
inline vanish::SliceConfiguration permute(const vanish::SliceConfiguration& cfg, Rng& rng) {
  vanish::SliceConfiguration out = cfg;
  std::vector<std::size_t> order(cfg.components.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 0; i < order.size(); ++i) out.components[i] = cfg.components[order[i]];
  if (out.monodromy_data) {
    auto& md = *out.monodromy_data;
    for (std::size_t i = 0; i < order.size(); ++i)
      md.component_char_polys[i] = cfg.monodromy_data->component_char_polys[order[i]];
    auto reorder = [&](std::vector<vanish::EigenComparison>& list) {
      for (auto& e : list) {
        const auto old = e.transversal;
        for (std::size_t i = 0; i < order.size(); ++i) e.transversal[i] = old[order[i]];
      }
    };
    reorder(md.eigenspace_dims);
    reorder(md.jordan_sizes);
  }
  for (auto& c : out.components) std::shuffle(c.loop_monodromies.begin(), c.loop_monodromies.end(), rng);
  std::shuffle(out.special_points.begin(), out.special_points.end(), rng);
  std::shuffle(out.isolated_points.begin(), out.isolated_points.end(), rng);
  for (auto& q : out.special_points) {
    const IntegerMatrix iota = vanish::normalized_iota(q);
    std::vector<std::pair<vanish::Branch, IntegerMatrix>> parts;
    std::size_t row0 = 0;
    for (const auto& b : q.branches) {
      const std::size_t r = vanish::branch_kernel(b).rank();
      parts.emplace_back(b, iota.block(row0, 0, r, iota.cols()));
      row0 += r;
    }
    std::shuffle(parts.begin(), parts.end(), rng);
    q.branches.clear();
    IntegerMatrix new_iota(0, iota.cols());
    for (auto& [b, block] : parts) {
      q.branches.push_back(b);
      new_iota = vanish::vstack(new_iota, block);
    }
    q.iota = new_iota;
  }
  return out;
}

}  // namespace testgen
