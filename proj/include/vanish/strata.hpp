#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vanish/integer_matrix.hpp"
#include "vanish/lattice.hpp"
#include "vanish/polynomial.hpp"

namespace vanish {

/// Irreducible curve of the sliced two-dimensional stratum.
struct CurveComponent {
  std::string id;
  std::int64_t genus = 0;
  /// Rank of the transversal Milnor fibre cohomology (its Milnor number).
  std::int64_t transversal_rank = 0;
  /// Vertical monodromies along the bouquet loops: 2 * genus + (branch count).
  std::vector<IntegerMatrix> loop_monodromies;

  friend bool operator==(const CurveComponent&, const CurveComponent&) = default;
};

/// Local branch of a curve component through a special point.
struct Branch {
  std::string component_id;
  IntegerMatrix monodromy;

  friend bool operator==(const Branch&, const Branch&) = default;
};

/// Point where the curve configuration meets the one-dimensional strata.
struct SpecialPoint {
  std::string id;
  std::vector<Branch> branches;
  std::int64_t fq_rank_low = 0;
  std::int64_t fq_rank_high = 0;
  /// Injection of the local Milnor fibre cohomology into the direct sum of
  /// branch kernels, with rows in the canonical kernel bases (branch order).
  IntegerMatrix iota;
  std::optional<std::int64_t> costalk_rank;

  friend bool operator==(const SpecialPoint&, const SpecialPoint&) = default;
};

struct IsolatedPoint {
  std::string id;
  std::int64_t milnor_number = 0;

  friend bool operator==(const IsolatedPoint&, const IsolatedPoint&) = default;
};

/// Polar multiplicity and complex link Betti number for one slicing depth k.
struct PolarEntry {
  std::int64_t lambda = 0;
  std::int64_t clk_betti = 0;

  friend bool operator==(const PolarEntry&, const PolarEntry&) = default;
};

/// b_lambda or J_lambda of the Milnor monodromy against the per-component values.
struct EigenComparison {
  std::string eigenvalue;
  std::int64_t milnor = 0;
  std::vector<std::int64_t> transversal;

  friend bool operator==(const EigenComparison&, const EigenComparison&) = default;
};

struct MonodromyData {
  IntegerPolynomial char_h;
  std::vector<IntegerPolynomial> component_char_polys;
  std::vector<EigenComparison> eigenspace_dims;
  std::vector<EigenComparison> jordan_sizes;

  friend bool operator==(const MonodromyData&, const MonodromyData&) = default;
};

struct SliceConfiguration {
  std::int64_t n = 0;
  std::int64_t original_n = 0;
  std::int64_t original_s = 0;
  std::vector<CurveComponent> components;
  std::vector<SpecialPoint> special_points;
  std::vector<IsolatedPoint> isolated_points;
  std::optional<std::vector<PolarEntry>> polar_data;
  std::optional<MonodromyData> monodromy_data;

  const CurveComponent* find_component(const std::string& id) const;
  /// Total branch count of a component over all special points.
  std::size_t branch_count(const std::string& component_id) const;

  friend bool operator==(const SliceConfiguration&, const SliceConfiguration&) = default;
};

struct Violation {
  std::string code;
  std::string subject;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Every violated invariant, in a deterministic order. Never throws for a
/// parsed configuration.
std::vector<Violation> validate(const SliceConfiguration& cfg);

struct DegreeMap {
  std::int64_t m = 0;
  std::int64_t lowest_degree = 0;
  friend bool operator==(const DegreeMap&, const DegreeMap&) = default;
};

/// Dimension after slicing down to a two-dimensional singular locus, and the
/// degree of the unsliced group being computed. Requires original_n >
/// original_s >= 2, else std::invalid_argument.
DegreeMap slice_degree_map(std::int64_t original_n, std::int64_t original_s);

/// ker(monodromy - id) in canonical basis.
Submodule branch_kernel(const Branch& b);

}  // namespace vanish

namespace vanish {

/// iota with an explicit column count: a matrix without rows cannot carry its
/// width through a row-list literal, so 0-row input is read as 0 x fq_rank_low.
IntegerMatrix normalized_iota(const SpecialPoint& q);

}  // namespace vanish
