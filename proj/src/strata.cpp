#include "vanish/strata.hpp"

#include <map>
#include <stdexcept>

#include "vanish/normal_form.hpp"

namespace vanish {

const CurveComponent* SliceConfiguration::find_component(const std::string& id) const {
  for (const auto& c : components)
    if (c.id == id) return &c;
  return nullptr;
}

std::size_t SliceConfiguration::branch_count(const std::string& component_id) const {
  std::size_t count = 0;
  for (const auto& q : special_points)
    for (const auto& b : q.branches)
      if (b.component_id == component_id) ++count;
  return count;
}

DegreeMap slice_degree_map(std::int64_t original_n, std::int64_t original_s) {
  if (original_s < 2 || original_n <= original_s)
    throw std::invalid_argument("slice_degree_map requires original_n > original_s >= 2");
  return {original_n - original_s + 2, original_n - original_s};
}

Submodule branch_kernel(const Branch& b) {
  return kernel(b.monodromy - IntegerMatrix::identity(b.monodromy.rows()));
}

IntegerMatrix normalized_iota(const SpecialPoint& q) {
  if (q.iota.rows() == 0) return IntegerMatrix(0, static_cast<std::size_t>(std::max<std::int64_t>(q.fq_rank_low, 0)));
  return q.iota;
}

namespace {

class Collector {
 public:
  void add(std::string code, std::string subject, std::string message) {
    out_.push_back({std::move(code), std::move(subject), std::move(message)});
  }
  std::vector<Violation> take() { return std::move(out_); }

 private:
  std::vector<Violation> out_;
};

bool is_automorphism_of(const IntegerMatrix& m, std::int64_t rank) {
  if (!m.is_square() || static_cast<std::int64_t>(m.rows()) != rank) return false;
  const Integer det = determinant(m);
  return det == 1 || det == -1;
}

// Returns true when the matrix is usable as a monodromy of the given rank.
bool check_monodromy(Collector& out, const IntegerMatrix& m, std::int64_t rank,
                     const std::string& subject) {
  if (!m.is_square() || static_cast<std::int64_t>(m.rows()) != rank) {
    out.add("monodromy-shape", subject,
            "monodromy must be square of size " + std::to_string(rank) + ", got " +
                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    return false;
  }
  if (!is_automorphism_of(m, rank)) {
    out.add("monodromy-not-automorphism", subject,
            "monodromy determinant is " + determinant(m).get_str() + ", expected +1 or -1");
    return false;
  }
  return true;
}

void check_degrees(Collector& out, const SliceConfiguration& cfg) {
  if (cfg.original_s < 2)
    out.add("degree-range", "original_s", "original_s must be at least 2");
  if (cfg.original_n <= cfg.original_s)
    out.add("degree-range", "original_n", "original_n must exceed original_s");
  if (cfg.n < 3) out.add("degree-range", "n", "n must be at least 3");
  if (cfg.n != cfg.original_n - cfg.original_s + 2)
    out.add("degree-reduction", "n",
            "n must equal original_n - original_s + 2 = " +
                std::to_string(cfg.original_n - cfg.original_s + 2));
}

void check_identifiers(Collector& out, const SliceConfiguration& cfg) {
  std::map<std::string, int> seen;
  auto note = [&](const std::string& id, const char* kind) {
    if (id.empty()) out.add("empty-id", kind, std::string("empty identifier on a ") + kind);
    else if (++seen[id] == 2) out.add("duplicate-id", id, "identifier used more than once");
  };
  for (const auto& c : cfg.components) note(c.id, "component");
  for (const auto& q : cfg.special_points) note(q.id, "special point");
  for (const auto& r : cfg.isolated_points) note(r.id, "isolated point");
}

}  // namespace

std::vector<Violation> validate(const SliceConfiguration& cfg) {
  Collector out;
  check_degrees(out, cfg);
  check_identifiers(out, cfg);

  // Invariant submodules of components whose data are well formed.
  std::map<std::string, Submodule> invariants;
  for (const auto& c : cfg.components) {
    bool usable = true;
    if (c.genus < 0) out.add("negative-value", c.id, "genus must be nonnegative");
    if (c.transversal_rank <= 0) {
      out.add("transversal-rank", c.id, "transversal_rank must be positive");
      usable = false;
    }
    for (std::size_t w = 0; w < c.loop_monodromies.size() && c.transversal_rank > 0; ++w)
      usable &= check_monodromy(out, c.loop_monodromies[w], c.transversal_rank,
                                c.id + ".loop_monodromies[" + std::to_string(w) + "]");
    const auto tau = static_cast<std::int64_t>(cfg.branch_count(c.id));
    const std::int64_t expected = 2 * c.genus + tau;
    if (static_cast<std::int64_t>(c.loop_monodromies.size()) != expected)
      out.add("loop-count", c.id,
              "expected 2*genus + branches = " + std::to_string(expected) + " loop monodromies, got " +
                  std::to_string(c.loop_monodromies.size()));
    if (usable && c.transversal_rank > 0)
      invariants.emplace(c.id, common_fixed_submodule(c.loop_monodromies,
                                                      static_cast<std::size_t>(c.transversal_rank)));
  }

  for (const auto& q : cfg.special_points) {
    if (q.fq_rank_low < 0) out.add("negative-value", q.id, "fq_rank_low must be nonnegative");
    if (q.fq_rank_high < 0) out.add("negative-value", q.id, "fq_rank_high must be nonnegative");
    if (q.costalk_rank && *q.costalk_rank < 0)
      out.add("negative-value", q.id, "costalk_rank must be nonnegative");
    if (q.branches.empty()) out.add("point-without-branches", q.id, "special point has no branches");

    bool branches_ok = true;
    std::size_t kernel_rows = 0;
    for (std::size_t k = 0; k < q.branches.size(); ++k) {
      const auto& b = q.branches[k];
      const std::string subject = q.id + ".branches[" + std::to_string(k) + "]";
      const CurveComponent* owner = cfg.find_component(b.component_id);
      if (!owner) {
        out.add("unknown-component", subject, "component '" + b.component_id + "' is not declared");
        branches_ok = false;
        continue;
      }
      if (owner->transversal_rank <= 0 ||
          !check_monodromy(out, b.monodromy, owner->transversal_rank, subject)) {
        branches_ok = false;
        continue;
      }
      const Submodule ker = branch_kernel(b);
      kernel_rows += ker.rank();
      auto inv = invariants.find(b.component_id);
      if (inv != invariants.end() && !ker.contains(inv->second))
        out.add("invariants-outside-branch-kernel", subject,
                "invariants of component '" + b.component_id +
                    "' are not contained in ker(monodromy - id) of this branch");
    }
    if (!branches_ok || q.fq_rank_low < 0) continue;

    const IntegerMatrix iota = normalized_iota(q);
    if (iota.rows() != kernel_rows || static_cast<std::int64_t>(iota.cols()) != q.fq_rank_low) {
      out.add("iota-shape", q.id,
              "iota must be " + std::to_string(kernel_rows) + "x" + std::to_string(q.fq_rank_low) +
                  ", got " + std::to_string(iota.rows()) + "x" + std::to_string(iota.cols()));
      continue;
    }
    if (static_cast<std::int64_t>(rank(iota)) != q.fq_rank_low)
      out.add("iota-not-injective", q.id,
              "iota has rank " + std::to_string(rank(iota)) + " < fq_rank_low = " +
                  std::to_string(q.fq_rank_low));
  }

  for (const auto& r : cfg.isolated_points)
    if (r.milnor_number < 0) out.add("negative-value", r.id, "milnor_number must be nonnegative");

  if (cfg.polar_data) {
    if (static_cast<std::int64_t>(cfg.polar_data->size()) > std::max<std::int64_t>(cfg.original_s, 0))
      out.add("polar-data-length", "polar_data",
              "at most original_s entries (k = 0..original_s-1) are allowed");
    for (std::size_t k = 0; k < cfg.polar_data->size(); ++k) {
      const auto& e = (*cfg.polar_data)[k];
      if (e.lambda < 0 || e.clk_betti < 0)
        out.add("negative-value", "polar_data[" + std::to_string(k) + "]",
                "lambda and clk_betti must be nonnegative");
    }
  }

  if (cfg.monodromy_data) {
    const auto& md = *cfg.monodromy_data;
    if (md.char_h.is_zero())
      out.add("malformed-polynomial", "monodromy_data.char_h", "characteristic polynomial is zero");
    if (md.component_char_polys.size() != cfg.components.size())
      out.add("monodromy-data-shape", "monodromy_data.component_char_polys",
              "expected one polynomial per component");
    for (std::size_t i = 0; i < md.component_char_polys.size(); ++i)
      if (md.component_char_polys[i].is_zero())
        out.add("malformed-polynomial",
                "monodromy_data.component_char_polys[" + std::to_string(i) + "]",
                "characteristic polynomial is zero");
    auto check_cmp = [&](const std::vector<EigenComparison>& list, const char* name) {
      for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string subject = std::string("monodromy_data.") + name + "[" + std::to_string(i) + "]";
        if (list[i].transversal.size() != cfg.components.size())
          out.add("monodromy-data-shape", subject, "expected one transversal value per component");
        bool negative = list[i].milnor < 0;
        for (auto v : list[i].transversal) negative |= v < 0;
        if (negative) out.add("negative-value", subject, "values must be nonnegative");
      }
    };
    check_cmp(md.eigenspace_dims, "eigenspace_dims");
    check_cmp(md.jordan_sizes, "jordan_sizes");
  }

  return out.take();
}

}  // namespace vanish
