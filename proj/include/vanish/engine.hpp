#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vanish/integer_matrix.hpp"
#include "vanish/lattice.hpp"
#include "vanish/strata.hpp"

namespace vanish {

/// Raised when an internal consistency relation fails. Never a user error:
/// validated input cannot trigger it.
class EngineDefect : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct ComponentCohomology {
  std::string component_id;
  /// Submodule of Z^transversal_rank fixed by every loop monodromy.
  Submodule invariants;
  /// Cokernel of the stacked map (nu_w - id)_w.
  FinAbGroup coker;
  /// Euler characteristic of the tube pair over the punctured component.
  std::int64_t euler = 0;
};

ComponentCohomology component_cohomology(const CurveComponent& c, std::int64_t n);

/// Matrix of the Mayer-Vietoris map
///   (+)_i invariants_i (+) (+)_q Z^{fq_rank_low}  ->  (+)_q (+)_k ker(nu_k - id).
/// Domain: invariant bases (component order), then point blocks. Codomain:
/// branch-kernel bases, points then branches. j = j1 - j2 with j2 = iota.
IntegerMatrix build_j(const SliceConfiguration& cfg);

/// ker j, which is the lowest vanishing cohomology group. Always free.
FinAbGroup lowest_vanishing(const SliceConfiguration& cfg);

struct Decomposition {
  std::size_t g_rank = 0;
  /// Components meeting no special point, with their invariant ranks.
  std::vector<std::pair<std::string, std::size_t>> i0;
};

/// Splits ker j into the components without special points and the part G
/// matched across special points. Throws EngineDefect if rank(Im j1' cap Im j2)
/// disagrees with the rank difference.
Decomposition decompose(const SliceConfiguration& cfg);

/// Euler characteristic of the vanishing neighbourhood pair from the
/// combinatorial data alone.
std::int64_t euler_total(const SliceConfiguration& cfg);

/// Ranks of the six-term Mayer-Vietoris sequence; d is solved from exactness.
struct SixTermRanks {
  std::int64_t a = 0;  // H^{n-1}(T_S, .) = ker j
  std::int64_t b = 0;  // invariants + H^{n-2}(F_q)
  std::int64_t c = 0;  // branch kernels
  std::int64_t d = 0;  // H^n(T_S, .)
  std::int64_t e = 0;  // component cokernels + H^{n-1}(F_q)
  std::int64_t f = 0;  // branch cokernels (free part)
  bool consistent = false;
};

SixTermRanks six_term_check(const SliceConfiguration& cfg);

/// Direct sum of invariants; only for configurations without special points
/// (std::invalid_argument otherwise).
FinAbGroup q_empty_shortcut(const SliceConfiguration& cfg);

/// Sum of invariant ranks.
std::int64_t upper_bound_lowest(const SliceConfiguration& cfg);
/// Sum of transversal ranks (the coarser form of the same bound).
std::int64_t transversal_bound_lowest(const SliceConfiguration& cfg);
/// Upper bound minus the costalk ranks; empty if any special point lacks one.
std::optional<std::int64_t> lower_bound_lowest(const SliceConfiguration& cfg);
/// Sum over components without a special point of vanishing H^{n-2}(F_q) of
/// min(transversal rank, fq_rank_low over the component's special points).
std::int64_t min_bound(const SliceConfiguration& cfg);

struct PolarBound {
  std::size_t k = 0;
  /// Betti degree n - k that the bound applies to.
  std::int64_t degree = 0;
  std::int64_t bound = 0;
};

std::vector<PolarBound> polar_bounds(const SliceConfiguration& cfg);

struct EigenCheck {
  std::string eigenvalue;
  std::int64_t milnor = 0;
  std::int64_t transversal_sum = 0;
  bool holds = false;
};

struct MonodromyChecks {
  bool char_poly_divides = false;
  IntegerPolynomial component_product;
  std::vector<EigenCheck> eigenspace;
  std::vector<EigenCheck> jordan;
};

/// Empty when the configuration carries no monodromy data.
std::optional<MonodromyChecks> monodromy_checks(const SliceConfiguration& cfg);

struct Check {
  std::string name;
  /// Assertions are consequences of validated input; predicates test
  /// additional user-supplied data.
  bool assertion = true;
  bool passed = false;
};

struct Bounds {
  std::int64_t upper_lowest = 0;
  std::int64_t upper_lowest_transversal = 0;
  std::optional<std::int64_t> lower_lowest;
  std::int64_t min_bound = 0;
  std::vector<PolarBound> polar;
};

struct RankLedger {
  std::size_t domain = 0;
  std::size_t codomain = 0;
  std::size_t kernel = 0;
};

struct VanishingReport {
  DegreeMap degrees;
  FinAbGroup lowest_group;
  std::size_t g_rank = 0;
  std::vector<std::pair<std::string, std::size_t>> i0_contribution;
  RankLedger ledger;
  std::vector<ComponentCohomology> components;
  SixTermRanks six_term;
  /// Bound for b_{n-1}(F): rank H^n(T_S, .) plus the isolated Milnor numbers.
  std::int64_t upper_betti_high = 0;
  std::int64_t euler_total = 0;
  Bounds bounds;
  std::optional<MonodromyChecks> monodromy;
  std::vector<Check> checks;
  IntegerMatrix j;

  bool assertions_hold() const;
};

/// Full computation for a validated configuration.
VanishingReport analyze(const SliceConfiguration& cfg);

}  // namespace vanish
