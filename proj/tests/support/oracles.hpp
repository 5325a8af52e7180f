#pragma once
// Reference computations for the test suites. Everything here works over Q
// or by brute force and shares no code with the library's normal forms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "vanish/integer_matrix.hpp"
#include "vanish/strata.hpp"

namespace oracle {

using vanish::Integer;
using vanish::IntegerMatrix;
using vanish::IntegerVector;
using vanish::Rational;
using RationalRows = std::vector<std::vector<Rational>>;

inline RationalRows to_rational(const IntegerMatrix& m) {
  RationalRows out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

/// Row echelon over Q in place; returns the rank.
inline std::size_t echelon(RationalRows& a, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t rational_rank(const IntegerMatrix& m) {
  auto a = to_rational(m);
  return echelon(a, m.cols());
}

inline Integer rational_det(const IntegerMatrix& m) {
  const std::size_t n = m.rows();
  auto a = to_rational(m);
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return Integer(det);
}

inline Integer cofactor_det(const IntegerMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntegerMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    const Integer term = m(0, c) * cofactor_det(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// gcd of all k x k minors (the k-th determinantal divisor).
inline Integer minor_gcd(const IntegerMatrix& m, std::size_t k) {
  if (k == 0) return 1;
  Integer g = 0;
  for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rs) {
    for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cs) {
      IntegerMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(rational_det(sub)).get_mpz_t());
    });
  });
  return g;
}

/// Invariant factors d_k = D_k / D_{k-1} from determinantal divisors.
inline std::vector<Integer> invariant_factors(const IntegerMatrix& m) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    const Integer dk = minor_gcd(m, k);
    if (dk == 0) break;
    out.push_back(dk / prev);
    prev = dk;
  }
  return out;
}

/// Columns of b span a saturated lattice iff the gcd of the maximal minors is 1.
inline bool saturated(const IntegerMatrix& b) {
  if (b.cols() == 0) return true;
  return minor_gcd(b, b.cols()) == 1;
}

inline Rational eval(const std::vector<Integer>& coeffs, const Rational& t) {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

/// det(t I - m) at an integer t.
inline Integer char_value(const IntegerMatrix& m, long t) {
  IntegerMatrix a = -m;
  for (std::size_t i = 0; i < m.rows(); ++i) a(i, i) += t;
  return rational_det(a);
}

/// Whether p divides q in Q[t], by schoolbook long division.
inline bool divides(std::vector<Integer> p, std::vector<Integer> q) {
  auto trim = [](std::vector<Integer>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(p);
  trim(q);
  if (p.empty()) return false;
  std::vector<Rational> r(q.begin(), q.end());
  while (r.size() >= p.size()) {
    const Rational f = r.back() / Rational(p.back());
    const std::size_t shift = r.size() - p.size();
    for (std::size_t i = 0; i < p.size(); ++i) r[shift + i] -= f * p[i];
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return r.empty();
}

inline IntegerMatrix minus_identity(const IntegerMatrix& g) {
  IntegerMatrix a = g;
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) -= 1;
  return a;
}

/// Q-dimension of {x : (g - id) x = 0 for all g}.
inline std::size_t fixed_dimension(const std::vector<IntegerMatrix>& gs, std::size_t rank) {
  IntegerMatrix stacked(0, rank);
  for (const auto& g : gs) stacked = vanish::vstack(stacked, minus_identity(g));
  return rank - rational_rank(stacked);
}

/// Rank of the lowest group as a Q-nullity: unknowns a_i (ambient
/// coordinates of each component) and b_q; equations (nu_w - id) a_i = 0 and
/// a_i = K_k iota_k b_q for every branch k of component i at q.
inline std::size_t lowest_rank(const vanish::SliceConfiguration& cfg) {
  std::vector<std::size_t> offset;
  std::size_t unknowns = 0;
  for (const auto& c : cfg.components) {
    offset.push_back(unknowns);
    unknowns += static_cast<std::size_t>(c.transversal_rank);
  }
  std::vector<std::size_t> point_offset;
  for (const auto& q : cfg.special_points) {
    point_offset.push_back(unknowns);
    unknowns += static_cast<std::size_t>(q.fq_rank_low);
  }
  auto index_of = [&](const std::string& id) {
    for (std::size_t i = 0; i < cfg.components.size(); ++i)
      if (cfg.components[i].id == id) return i;
    return cfg.components.size();
  };
  std::vector<IntegerVector> rows;
  for (std::size_t i = 0; i < cfg.components.size(); ++i) {
    const auto& c = cfg.components[i];
    for (const auto& g : c.loop_monodromies) {
      const IntegerMatrix a = minus_identity(g);
      for (std::size_t r = 0; r < a.rows(); ++r) {
        IntegerVector row(unknowns, 0);
        for (std::size_t k = 0; k < a.cols(); ++k) row[offset[i] + k] = a(r, k);
        rows.push_back(std::move(row));
      }
    }
  }
  for (std::size_t qi = 0; qi < cfg.special_points.size(); ++qi) {
    const auto& q = cfg.special_points[qi];
    const IntegerMatrix iota = vanish::normalized_iota(q);
    std::size_t row0 = 0;
    for (const auto& b : q.branches) {
      const std::size_t i = index_of(b.component_id);
      const IntegerMatrix basis = vanish::branch_kernel(b).basis();
      const IntegerMatrix block = iota.block(row0, 0, basis.cols(), iota.cols());
      const IntegerMatrix image = basis * block;
      row0 += basis.cols();
      for (std::size_t r = 0; r < basis.rows(); ++r) {
        IntegerVector row(unknowns, 0);
        row[offset[i] + r] = 1;
        for (std::size_t k = 0; k < image.cols(); ++k) row[point_offset[qi] + k] = -image(r, k);
        rows.push_back(std::move(row));
      }
    }
  }
  if (rows.empty()) return unknowns;
  return unknowns - rational_rank(IntegerMatrix::from_rows(rows));
}

struct SixTerm {
  std::int64_t a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;
};

/// Six-term ranks from Q-dimensions, with d solved from exactness.
inline SixTerm six_term(const vanish::SliceConfiguration& cfg) {
  SixTerm s;
  s.a = static_cast<std::int64_t>(lowest_rank(cfg));
  for (const auto& c : cfg.components) {
    const auto mu = static_cast<std::size_t>(c.transversal_rank);
    s.b += static_cast<std::int64_t>(fixed_dimension(c.loop_monodromies, mu));
    IntegerMatrix stacked(0, mu);
    for (const auto& g : c.loop_monodromies) stacked = vanish::vstack(stacked, minus_identity(g));
    s.e += static_cast<std::int64_t>(stacked.rows() - rational_rank(stacked));
  }
  for (const auto& q : cfg.special_points) {
    s.b += q.fq_rank_low;
    s.e += q.fq_rank_high;
    for (const auto& br : q.branches) {
      const std::size_t mu = br.monodromy.rows();
      const std::size_t kr = mu - rational_rank(minus_identity(br.monodromy));
      s.c += static_cast<std::int64_t>(kr);
      s.f += static_cast<std::int64_t>(kr);
    }
  }
  s.d = s.a - s.b + s.c + s.e - s.f;
  return s;
}

inline std::int64_t sign(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

/// Euler characteristic from the combinatorial data.
inline std::int64_t euler(const vanish::SliceConfiguration& cfg) {
  const std::int64_t n = cfg.n;
  std::int64_t total = 0;
  for (const auto& q : cfg.special_points)
    total -= sign(n - 2) * q.fq_rank_low + sign(n - 1) * q.fq_rank_high;
  for (const auto& c : cfg.components) {
    const auto tau = static_cast<std::int64_t>(cfg.branch_count(c.id));
    total += sign(n) * (2 * c.genus + tau - 1) * c.transversal_rank;
  }
  for (const auto& r : cfg.isolated_points) total += sign(n) * r.milnor_number;
  return total;
}

}  // namespace oracle
