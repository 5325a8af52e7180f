#include "vanish/engine.hpp"

#include <algorithm>
#include <map>

#include "vanish/normal_form.hpp"

namespace vanish {
namespace {

std::int64_t sign_power(std::int64_t exponent) { return (exponent % 2 == 0) ? 1 : -1; }

std::int64_t as_int(std::size_t x) { return static_cast<std::int64_t>(x); }

// Everything derived once per configuration: component cohomology, branch
// kernels, block offsets of j and the matrix itself.
struct Workspace {
  std::vector<ComponentCohomology> components;
  std::map<std::string, std::size_t> component_index;
  std::vector<std::vector<Submodule>> branch_kernels;  // [point][branch]
  std::vector<std::size_t> component_offset;            // domain columns
  std::vector<std::size_t> point_offset;                // domain columns
  std::vector<std::size_t> point_row_offset;            // codomain rows
  std::size_t invariant_columns = 0;
  std::size_t domain = 0;
  std::size_t codomain = 0;
  IntegerMatrix j;

  explicit Workspace(const SliceConfiguration& cfg) {
    for (std::size_t i = 0; i < cfg.components.size(); ++i) {
      components.push_back(component_cohomology(cfg.components[i], cfg.n));
      component_index.emplace(cfg.components[i].id, i);
      component_offset.push_back(domain);
      domain += components.back().invariants.rank();
    }
    invariant_columns = domain;
    for (const auto& q : cfg.special_points) {
      point_offset.push_back(domain);
      domain += static_cast<std::size_t>(q.fq_rank_low);
      point_row_offset.push_back(codomain);
      auto& kernels = branch_kernels.emplace_back();
      for (const auto& b : q.branches) {
        kernels.push_back(branch_kernel(b));
        codomain += kernels.back().rank();
      }
    }

    j = IntegerMatrix(codomain, domain);
    for (std::size_t qi = 0; qi < cfg.special_points.size(); ++qi) {
      const auto& q = cfg.special_points[qi];
      std::size_t row = point_row_offset[qi];
      for (std::size_t k = 0; k < q.branches.size(); ++k) {
        const auto& kernel_k = branch_kernels[qi][k];
        auto it = component_index.find(q.branches[k].component_id);
        if (it == component_index.end())
          throw EngineDefect("branch refers to unknown component '" + q.branches[k].component_id + "'");
        const Submodule& inv = components[it->second].invariants;
        for (std::size_t col = 0; col < inv.rank(); ++col) {
          const auto coords = kernel_k.coordinates(inv.basis().column(col));
          if (!coords)
            throw EngineDefect("invariant vector of component '" + q.branches[k].component_id +
                               "' does not lie in ker(nu_k - id) at point '" + q.id + "'");
          for (std::size_t r = 0; r < coords->size(); ++r)
            j(row + r, component_offset[it->second] + col) = (*coords)[r];
        }
        row += kernel_k.rank();
      }
      const IntegerMatrix iota = normalized_iota(q);
      if (iota.rows() != row - point_row_offset[qi] ||
          iota.cols() != static_cast<std::size_t>(q.fq_rank_low))
        throw EngineDefect("iota of point '" + q.id + "' has the wrong shape");
      j.set_block(point_row_offset[qi], point_offset[qi], -iota);
    }
  }

  std::size_t invariant_rank_sum() const {
    std::size_t s = 0;
    for (const auto& c : components) s += c.invariants.rank();
    return s;
  }
};

struct DecompositionPaths {
  Decomposition result;
  std::size_t kernel_rank = 0;
  std::size_t intersection_rank = 0;
};

DecompositionPaths decompose_paths(const SliceConfiguration& cfg, const Workspace& ws) {
  DecompositionPaths p;
  p.kernel_rank = kernel(ws.j).rank();
  std::size_t i0_sum = 0;
  for (std::size_t i = 0; i < cfg.components.size(); ++i) {
    if (cfg.branch_count(cfg.components[i].id) != 0) continue;
    p.result.i0.emplace_back(cfg.components[i].id, ws.components[i].invariants.rank());
    i0_sum += ws.components[i].invariants.rank();
  }
  p.result.g_rank = p.kernel_rank >= i0_sum ? p.kernel_rank - i0_sum : 0;
  const Submodule im_j1 = image(ws.j.block(0, 0, ws.codomain, ws.invariant_columns));
  const Submodule im_j2 =
      image(ws.j.block(0, ws.invariant_columns, ws.codomain, ws.domain - ws.invariant_columns));
  p.intersection_rank = intersect(im_j1, im_j2).rank();
  return p;
}

std::int64_t euler_from_data(const SliceConfiguration& cfg) {
  const std::int64_t n = cfg.n;
  std::int64_t total = 0;
  for (const auto& q : cfg.special_points) {
    const std::int64_t chi_fq =
        1 + sign_power(n - 2) * q.fq_rank_low + sign_power(n - 1) * q.fq_rank_high;
    total -= chi_fq - 1;
  }
  for (const auto& c : cfg.components) {
    const auto tau = as_int(cfg.branch_count(c.id));
    total += sign_power(n) * (2 * c.genus + tau - 1) * c.transversal_rank;
  }
  for (const auto& r : cfg.isolated_points) total += sign_power(n) * r.milnor_number;
  return total;
}

SixTermRanks six_term_from(const SliceConfiguration& cfg, const Workspace& ws,
                           std::size_t kernel_rank) {
  SixTermRanks s;
  s.a = as_int(kernel_rank);
  s.b = as_int(ws.invariant_rank_sum());
  for (const auto& q : cfg.special_points) s.b += q.fq_rank_low;
  for (const auto& kernels : ws.branch_kernels)
    for (const auto& k : kernels) s.c += as_int(k.rank());
  for (const auto& c : ws.components) s.e += as_int(c.coker.free_rank);
  for (const auto& q : cfg.special_points) s.e += q.fq_rank_high;
  for (std::size_t qi = 0; qi < cfg.special_points.size(); ++qi)
    for (const auto& b : cfg.special_points[qi].branches)
      s.f += as_int(cokernel(b.monodromy - IntegerMatrix::identity(b.monodromy.rows())).free_rank);
  s.d = s.a - s.b + s.c + s.e - s.f;
  s.consistent = s.d >= 0;
  return s;
}

std::int64_t isolated_sum(const SliceConfiguration& cfg) {
  std::int64_t s = 0;
  for (const auto& r : cfg.isolated_points) s += r.milnor_number;
  return s;
}

std::int64_t min_bound_from(const SliceConfiguration& cfg) {
  std::int64_t total = 0;
  for (const auto& c : cfg.components) {
    std::int64_t term = c.transversal_rank;
    bool in_i1 = false;
    for (const auto& q : cfg.special_points) {
      const bool on_component = std::any_of(q.branches.begin(), q.branches.end(),
                                            [&](const Branch& b) { return b.component_id == c.id; });
      if (!on_component) continue;
      if (q.fq_rank_low == 0) in_i1 = true;
      term = std::min(term, q.fq_rank_low);
    }
    if (!in_i1) total += term;
  }
  return total;
}

std::optional<std::int64_t> lower_bound_from(const SliceConfiguration& cfg, std::int64_t upper) {
  std::int64_t costalk = 0;
  for (const auto& q : cfg.special_points) {
    if (!q.costalk_rank) return std::nullopt;
    costalk += *q.costalk_rank;
  }
  return upper - costalk;
}

}  // namespace

ComponentCohomology component_cohomology(const CurveComponent& c, std::int64_t n) {
  const auto rank = static_cast<std::size_t>(c.transversal_rank);
  ComponentCohomology cc;
  cc.component_id = c.id;
  cc.invariants = common_fixed_submodule(c.loop_monodromies, rank);
  IntegerMatrix stacked(0, rank);
  const IntegerMatrix id = IntegerMatrix::identity(rank);
  for (const auto& nu : c.loop_monodromies) stacked = vstack(stacked, nu - id);
  cc.coker = cokernel(stacked);
  cc.euler = sign_power(n) * (as_int(c.loop_monodromies.size()) - 1) * c.transversal_rank;
  return cc;
}

IntegerMatrix build_j(const SliceConfiguration& cfg) { return Workspace(cfg).j; }

FinAbGroup lowest_vanishing(const SliceConfiguration& cfg) {
  return FinAbGroup{kernel(build_j(cfg)).rank(), {}};
}

Decomposition decompose(const SliceConfiguration& cfg) {
  const Workspace ws(cfg);
  auto p = decompose_paths(cfg, ws);
  if (p.intersection_rank != p.result.g_rank)
    throw EngineDefect("rank of Im j1' cap Im j2 (" + std::to_string(p.intersection_rank) +
                       ") differs from rank ker j minus I0 ranks (" +
                       std::to_string(p.result.g_rank) + ")");
  return p.result;
}

std::int64_t euler_total(const SliceConfiguration& cfg) { return euler_from_data(cfg); }

SixTermRanks six_term_check(const SliceConfiguration& cfg) {
  const Workspace ws(cfg);
  return six_term_from(cfg, ws, kernel(ws.j).rank());
}

FinAbGroup q_empty_shortcut(const SliceConfiguration& cfg) {
  if (!cfg.special_points.empty())
    throw std::invalid_argument("q_empty_shortcut requires a configuration without special points");
  FinAbGroup g;
  for (const auto& c : cfg.components)
    g.free_rank += component_cohomology(c, cfg.n).invariants.rank();
  return g;
}

std::int64_t upper_bound_lowest(const SliceConfiguration& cfg) {
  std::int64_t s = 0;
  for (const auto& c : cfg.components) s += as_int(component_cohomology(c, cfg.n).invariants.rank());
  return s;
}

std::int64_t transversal_bound_lowest(const SliceConfiguration& cfg) {
  std::int64_t s = 0;
  for (const auto& c : cfg.components) s += c.transversal_rank;
  return s;
}

std::optional<std::int64_t> lower_bound_lowest(const SliceConfiguration& cfg) {
  return lower_bound_from(cfg, upper_bound_lowest(cfg));
}

std::int64_t min_bound(const SliceConfiguration& cfg) { return min_bound_from(cfg); }

std::vector<PolarBound> polar_bounds(const SliceConfiguration& cfg) {
  std::vector<PolarBound> out;
  if (!cfg.polar_data) return out;
  for (std::size_t k = 0; k < cfg.polar_data->size(); ++k) {
    const auto& e = (*cfg.polar_data)[k];
    out.push_back({k, cfg.original_n - as_int(k), e.lambda + e.clk_betti});
  }
  return out;
}

std::optional<MonodromyChecks> monodromy_checks(const SliceConfiguration& cfg) {
  if (!cfg.monodromy_data) return std::nullopt;
  const auto& md = *cfg.monodromy_data;
  MonodromyChecks mc;
  mc.component_product = product(md.component_char_polys);
  if (md.char_h.is_zero() || mc.component_product.is_zero())
    throw std::invalid_argument("monodromy_checks: zero characteristic polynomial");
  mc.char_poly_divides = poly_divides(md.char_h, mc.component_product);
  auto compare = [](const std::vector<EigenComparison>& list) {
    std::vector<EigenCheck> out;
    for (const auto& e : list) {
      EigenCheck ec{e.eigenvalue, e.milnor, 0, false};
      for (auto v : e.transversal) ec.transversal_sum += v;
      ec.holds = ec.milnor <= ec.transversal_sum;
      out.push_back(std::move(ec));
    }
    return out;
  };
  mc.eigenspace = compare(md.eigenspace_dims);
  mc.jordan = compare(md.jordan_sizes);
  return mc;
}

bool VanishingReport::assertions_hold() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return !c.assertion || c.passed; });
}

VanishingReport analyze(const SliceConfiguration& cfg) {
  const Workspace ws(cfg);
  VanishingReport r;
  r.degrees = slice_degree_map(cfg.original_n, cfg.original_s);
  r.j = ws.j;
  r.components = ws.components;

  const auto paths = decompose_paths(cfg, ws);
  r.lowest_group = FinAbGroup{paths.kernel_rank, {}};
  r.g_rank = paths.result.g_rank;
  r.i0_contribution = paths.result.i0;
  r.ledger = {ws.domain, ws.codomain, paths.kernel_rank};

  r.six_term = six_term_from(cfg, ws, paths.kernel_rank);
  r.upper_betti_high = r.six_term.d + isolated_sum(cfg);
  r.euler_total = euler_from_data(cfg);

  r.bounds.upper_lowest = as_int(ws.invariant_rank_sum());
  r.bounds.upper_lowest_transversal = transversal_bound_lowest(cfg);
  r.bounds.lower_lowest = lower_bound_from(cfg, r.bounds.upper_lowest);
  r.bounds.min_bound = min_bound_from(cfg);
  r.bounds.polar = polar_bounds(cfg);
  r.monodromy = monodromy_checks(cfg);

  const auto rank_ker = as_int(paths.kernel_rank);
  std::size_t i0_sum = 0;
  for (const auto& [id, rank] : r.i0_contribution) i0_sum += rank;

  r.checks.push_back({"lowest-group-free", true, r.lowest_group.is_free()});
  r.checks.push_back({"decomposition-paths-agree", true,
                      paths.intersection_rank == r.g_rank &&
                          paths.kernel_rank == r.g_rank + i0_sum});
  if (cfg.special_points.empty()) {
    FinAbGroup shortcut{ws.invariant_rank_sum(), {}};
    r.checks.push_back({"q-empty-shortcut-agrees", true, shortcut == r.lowest_group});
  }
  const std::int64_t chi_sequence = sign_power(cfg.n - 1) * r.six_term.a +
                                    sign_power(cfg.n) * (r.six_term.d + isolated_sum(cfg));
  r.checks.push_back({"euler-consistent", true, chi_sequence == r.euler_total});
  r.checks.push_back({"six-term-consistent", true, r.six_term.consistent});
  r.checks.push_back({"upper-bounds-hold", true,
                      rank_ker <= r.bounds.upper_lowest && rank_ker <= r.bounds.min_bound &&
                          r.bounds.upper_lowest <= r.bounds.upper_lowest_transversal});
  if (r.bounds.lower_lowest)
    r.checks.push_back({"lower-bound-holds", false, *r.bounds.lower_lowest <= rank_ker});
  if (r.monodromy) {
    r.checks.push_back({"char-poly-divides", false, r.monodromy->char_poly_divides});
    for (const auto& e : r.monodromy->eigenspace)
      r.checks.push_back({"eigenspace-bound[" + e.eigenvalue + "]", false, e.holds});
    for (const auto& e : r.monodromy->jordan)
      r.checks.push_back({"jordan-bound[" + e.eigenvalue + "]", false, e.holds});
  }
  return r;
}

}  // namespace vanish
