#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vanish/engine.hpp"
#include "vanish/strata.hpp"

namespace vanish {

/// Worked germs with independently known lowest Milnor fibre cohomology.
struct CorpusCase {
  std::string name;
  std::string germ;
  SliceConfiguration config;
  FinAbGroup expected_group;
  RankLedger expected_ledger;
};

/// xyz, xyzu, x^2 z + y^2 u and x^p + (y^2 + z^2 + u^2)^q for
/// (p, q) in {(2, 2), (3, 2), (2, 3)}.
std::vector<CorpusCase> corpus();

/// Transversal type x^p + g^q along a stratum whose complex link is a circle
/// with trivial monodromy; no special points.
SliceConfiguration thom_sebastiani_configuration(int p, int q);

}  // namespace vanish
