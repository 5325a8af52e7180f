#include "vanish/corpus.hpp"

namespace vanish {
namespace {

IntegerMatrix scalar(long x) { return IntegerMatrix::from_rows({{x}}); }

SliceConfiguration base_configuration() {
  SliceConfiguration cfg;
  cfg.n = 3;
  cfg.original_n = 3;
  cfg.original_s = 2;
  return cfg;
}

// f = xyz on C^4: three A1 curves through one triple point whose local
// Milnor fibre is a 2-torus; all vertical monodromies trivial.
CorpusCase xyz() {
  SliceConfiguration cfg = base_configuration();
  for (const char* id : {"H_xy", "H_xz", "H_yz"})
    cfg.components.push_back({id, 0, 1, {scalar(1)}});
  SpecialPoint q;
  q.id = "q_xyz";
  for (const char* id : {"H_xy", "H_xz", "H_yz"}) q.branches.push_back({id, scalar(1)});
  q.fq_rank_low = 2;
  q.fq_rank_high = 1;
  q.iota = IntegerMatrix::from_rows({{1, 0}, {-1, 1}, {0, -1}});
  q.costalk_rank = 1;
  cfg.special_points.push_back(std::move(q));
  MonodromyData md;
  md.char_h = IntegerPolynomial{1, -2, 1};
  md.component_char_polys = {IntegerPolynomial{-1, 1}, IntegerPolynomial{-1, 1}, IntegerPolynomial{-1, 1}};
  md.eigenspace_dims = {{"1", 2, {1, 1, 1}}};
  md.jordan_sizes = {{"1", 1, {1, 1, 1}}};
  cfg.monodromy_data = std::move(md);
  return {"xyz", "f = xyz", std::move(cfg), FinAbGroup{2, {}}, {5, 3, 2}};
}

// f = xyzu on C^4: six lines (the sliced coordinate planes) meeting three at
// a time in four points (the sliced coordinate axes). Branch loops are
// oriented along their components, so the local relation at every point
// reads v1 - v2 + v3 = 0 in lexicographic branch order.
CorpusCase xyzu() {
  SliceConfiguration cfg = base_configuration();
  const char* planes[] = {"H_xy", "H_xz", "H_xu", "H_yz", "H_yu", "H_zu"};
  for (const char* id : planes) cfg.components.push_back({id, 0, 1, {scalar(1), scalar(1)}});
  const std::pair<const char*, std::vector<const char*>> axes[] = {
      {"axis_u", {"H_xy", "H_xz", "H_yz"}},
      {"axis_z", {"H_xy", "H_xu", "H_yu"}},
      {"axis_y", {"H_xz", "H_xu", "H_zu"}},
      {"axis_x", {"H_yz", "H_yu", "H_zu"}},
  };
  for (const auto& [id, through] : axes) {
    SpecialPoint q;
    q.id = id;
    for (const char* c : through) q.branches.push_back({c, scalar(1)});
    q.fq_rank_low = 2;
    q.fq_rank_high = 1;
    q.iota = IntegerMatrix::from_rows({{1, 0}, {1, 1}, {0, 1}});
    q.costalk_rank = 1;
    cfg.special_points.push_back(std::move(q));
  }
  return {"xyzu", "f = xyzu", std::move(cfg), FinAbGroup{3, {}}, {14, 12, 3}};
}

// f = x^2 z + y^2 u sliced by u + z = 1: one line with two special points,
// every vertical monodromy -id, local germs of type x^2 z + y^2.
CorpusCase x2z_y2u() {
  SliceConfiguration cfg = base_configuration();
  cfg.components.push_back({"S", 0, 1, {scalar(-1), scalar(-1)}});
  for (const char* id : {"q_z0", "q_u0"}) {
    SpecialPoint q;
    q.id = id;
    q.branches.push_back({"S", scalar(-1)});
    q.fq_rank_low = 0;
    q.fq_rank_high = 1;
    q.iota = IntegerMatrix(0, 0);
    cfg.special_points.push_back(std::move(q));
  }
  return {"x2z_y2u", "f = x^2 z + y^2 u", std::move(cfg), FinAbGroup{}, {0, 0, 0}};
}

CorpusCase thom_sebastiani(int p, int q) {
  const auto mu = static_cast<std::size_t>((p - 1) * (q - 1));
  return {"x" + std::to_string(p) + "_g" + std::to_string(q),
          "f = x^" + std::to_string(p) + " + (y^2 + z^2 + u^2)^" + std::to_string(q),
          thom_sebastiani_configuration(p, q), FinAbGroup{mu, {}}, {mu, 0, mu}};
}

}  // namespace

SliceConfiguration thom_sebastiani_configuration(int p, int q) {
  SliceConfiguration cfg = base_configuration();
  cfg.components.push_back({"S", 0, static_cast<std::int64_t>((p - 1) * (q - 1)), {}});
  return cfg;
}

std::vector<CorpusCase> corpus() {
  return {xyz(), xyzu(), x2z_y2u(), thom_sebastiani(2, 2), thom_sebastiani(3, 2), thom_sebastiani(2, 3)};
}

}  // namespace vanish
