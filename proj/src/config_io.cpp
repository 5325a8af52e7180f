#include "vanish/config_io.hpp"

#include <limits>
#include <set>

namespace vanish {
namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError(path + ": " + what);
}

class Reader {
 public:
  std::vector<Violation> unknown;

  const Json& object(const Json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    return j;
  }

  const Json& array(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected a list");
    return j;
  }

  const Json& required(const Json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing key '") + key + "'");
    return *it;
  }

  void allow_only(const Json& obj, std::initializer_list<const char*> keys, const std::string& path) {
    std::set<std::string> allowed(keys.begin(), keys.end());
    for (auto it = obj.begin(); it != obj.end(); ++it)
      if (!allowed.count(it.key()))
        unknown.push_back({"unknown-key", join(path, it.key()), "key is not part of the schema"});
  }

  static std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
  }

  std::int64_t int64(const Json& j, const std::string& path) {
    if (j.is_number_unsigned()) {
      if (j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        fail(path, "integer out of range");
      return static_cast<std::int64_t>(j.get<std::uint64_t>());
    }
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<std::int64_t>();
  }

  std::string string(const Json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
  }

  Integer integer(const Json& j, const std::string& path) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
      const auto s = j.get<std::string>();
      const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
      if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
        fail(path, "expected a decimal integer string");
      return Integer(s[0] == '+' ? s.substr(1) : s);
    }
    fail(path, "expected an integer");
  }

  IntegerMatrix matrix(const Json& j, const std::string& path) {
    array(j, path);
    std::vector<IntegerVector> rows;
    for (std::size_t r = 0; r < j.size(); ++r) {
      const std::string rp = path + "[" + std::to_string(r) + "]";
      array(j[r], rp);
      IntegerVector row;
      for (std::size_t c = 0; c < j[r].size(); ++c)
        row.push_back(integer(j[r][c], rp + "[" + std::to_string(c) + "]"));
      if (!rows.empty() && row.size() != rows.front().size()) fail(rp, "ragged matrix row");
      rows.push_back(std::move(row));
    }
    if (!rows.empty() && rows.front().empty()) {
      // [[], [], ...]: rows with no columns.
      return IntegerMatrix(rows.size(), 0);
    }
    return IntegerMatrix::from_rows(rows);
  }

  IntegerPolynomial polynomial(const Json& j, const std::string& path) {
    array(j, path);
    IntegerVector c;
    for (std::size_t i = 0; i < j.size(); ++i)
      c.push_back(integer(j[i], path + "[" + std::to_string(i) + "]"));
    return IntegerPolynomial(std::move(c));
  }

  EigenComparison comparison(const Json& j, const std::string& path) {
    object(j, path);
    allow_only(j, {"eigenvalue", "milnor", "transversal"}, path);
    EigenComparison e;
    e.eigenvalue = string(required(j, "eigenvalue", path), path + ".eigenvalue");
    e.milnor = int64(required(j, "milnor", path), path + ".milnor");
    const auto& t = array(required(j, "transversal", path), path + ".transversal");
    for (std::size_t i = 0; i < t.size(); ++i)
      e.transversal.push_back(int64(t[i], path + ".transversal[" + std::to_string(i) + "]"));
    return e;
  }

  SliceConfiguration configuration(const Json& root) {
    object(root, "document");
    allow_only(root,
               {"n", "original_n", "original_s", "components", "special_points", "isolated_points",
                "polar_data", "monodromy_data"},
               "");
    SliceConfiguration cfg;
    cfg.n = int64(required(root, "n", "document"), "n");
    cfg.original_n = int64(required(root, "original_n", "document"), "original_n");
    cfg.original_s = int64(required(root, "original_s", "document"), "original_s");

    const auto& comps = array(required(root, "components", "document"), "components");
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const std::string p = "components[" + std::to_string(i) + "]";
      object(comps[i], p);
      allow_only(comps[i], {"id", "genus", "transversal_rank", "loop_monodromies"}, p);
      CurveComponent c;
      c.id = string(required(comps[i], "id", p), p + ".id");
      c.genus = int64(required(comps[i], "genus", p), p + ".genus");
      c.transversal_rank = int64(required(comps[i], "transversal_rank", p), p + ".transversal_rank");
      const auto& loops = array(required(comps[i], "loop_monodromies", p), p + ".loop_monodromies");
      for (std::size_t w = 0; w < loops.size(); ++w)
        c.loop_monodromies.push_back(
            matrix(loops[w], p + ".loop_monodromies[" + std::to_string(w) + "]"));
      cfg.components.push_back(std::move(c));
    }

    const auto& points = array(required(root, "special_points", "document"), "special_points");
    for (std::size_t i = 0; i < points.size(); ++i) {
      const std::string p = "special_points[" + std::to_string(i) + "]";
      const auto& jq = object(points[i], p);
      allow_only(jq, {"id", "branches", "fq_rank_low", "fq_rank_high", "iota", "costalk_rank"}, p);
      SpecialPoint q;
      q.id = string(required(jq, "id", p), p + ".id");
      const auto& branches = array(required(jq, "branches", p), p + ".branches");
      for (std::size_t k = 0; k < branches.size(); ++k) {
        const std::string bp = p + ".branches[" + std::to_string(k) + "]";
        object(branches[k], bp);
        allow_only(branches[k], {"component_id", "monodromy"}, bp);
        Branch b;
        b.component_id = string(required(branches[k], "component_id", bp), bp + ".component_id");
        b.monodromy = matrix(required(branches[k], "monodromy", bp), bp + ".monodromy");
        q.branches.push_back(std::move(b));
      }
      q.fq_rank_low = int64(required(jq, "fq_rank_low", p), p + ".fq_rank_low");
      q.fq_rank_high = int64(required(jq, "fq_rank_high", p), p + ".fq_rank_high");
      q.iota = matrix(required(jq, "iota", p), p + ".iota");
      if (auto it = jq.find("costalk_rank"); it != jq.end() && !it->is_null())
        q.costalk_rank = int64(*it, p + ".costalk_rank");
      cfg.special_points.push_back(std::move(q));
    }

    const auto& isolated = array(required(root, "isolated_points", "document"), "isolated_points");
    for (std::size_t i = 0; i < isolated.size(); ++i) {
      const std::string p = "isolated_points[" + std::to_string(i) + "]";
      object(isolated[i], p);
      allow_only(isolated[i], {"id", "milnor_number"}, p);
      IsolatedPoint r;
      r.id = string(required(isolated[i], "id", p), p + ".id");
      r.milnor_number = int64(required(isolated[i], "milnor_number", p), p + ".milnor_number");
      cfg.isolated_points.push_back(std::move(r));
    }

    if (auto it = root.find("polar_data"); it != root.end() && !it->is_null()) {
      array(*it, "polar_data");
      std::vector<PolarEntry> polar;
      for (std::size_t k = 0; k < it->size(); ++k) {
        const std::string p = "polar_data[" + std::to_string(k) + "]";
        const auto& e = object((*it)[k], p);
        allow_only(e, {"lambda", "clk_betti"}, p);
        polar.push_back({int64(required(e, "lambda", p), p + ".lambda"),
                         int64(required(e, "clk_betti", p), p + ".clk_betti")});
      }
      cfg.polar_data = std::move(polar);
    }

    if (auto it = root.find("monodromy_data"); it != root.end() && !it->is_null()) {
      const std::string p = "monodromy_data";
      const auto& jm = object(*it, p);
      allow_only(jm, {"char_h", "component_char_polys", "eigenspace_dims", "jordan_sizes"}, p);
      MonodromyData md;
      md.char_h = polynomial(required(jm, "char_h", p), p + ".char_h");
      const auto& polys = array(required(jm, "component_char_polys", p), p + ".component_char_polys");
      for (std::size_t i = 0; i < polys.size(); ++i)
        md.component_char_polys.push_back(
            polynomial(polys[i], p + ".component_char_polys[" + std::to_string(i) + "]"));
      if (auto e = jm.find("eigenspace_dims"); e != jm.end())
        for (std::size_t i = 0; i < array(*e, p + ".eigenspace_dims").size(); ++i)
          md.eigenspace_dims.push_back(
              comparison((*e)[i], p + ".eigenspace_dims[" + std::to_string(i) + "]"));
      if (auto e = jm.find("jordan_sizes"); e != jm.end())
        for (std::size_t i = 0; i < array(*e, p + ".jordan_sizes").size(); ++i)
          md.jordan_sizes.push_back(
              comparison((*e)[i], p + ".jordan_sizes[" + std::to_string(i) + "]"));
      cfg.monodromy_data = std::move(md);
    }
    return cfg;
  }
};

Json polynomial_to_json(const IntegerPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(integer_to_json(c));
  return a;
}

Json comparison_to_json(const EigenComparison& e) {
  return Json{{"eigenvalue", e.eigenvalue}, {"milnor", e.milnor}, {"transversal", e.transversal}};
}

}  // namespace

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Json matrix_to_json(const IntegerMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ParsedConfiguration parse_configuration(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("syntax error: ") + e.what());
  }
  Reader reader;
  ParsedConfiguration out;
  out.config = reader.configuration(root);
  out.unknown_keys = std::move(reader.unknown);
  return out;
}

Json configuration_to_json(const SliceConfiguration& cfg) {
  Json root;
  root["n"] = cfg.n;
  root["original_n"] = cfg.original_n;
  root["original_s"] = cfg.original_s;
  Json comps = Json::array();
  for (const auto& c : cfg.components) {
    Json loops = Json::array();
    for (const auto& m : c.loop_monodromies) loops.push_back(matrix_to_json(m));
    comps.push_back(Json{{"id", c.id},
                         {"genus", c.genus},
                         {"transversal_rank", c.transversal_rank},
                         {"loop_monodromies", std::move(loops)}});
  }
  root["components"] = std::move(comps);
  Json points = Json::array();
  for (const auto& q : cfg.special_points) {
    Json branches = Json::array();
    for (const auto& b : q.branches)
      branches.push_back(Json{{"component_id", b.component_id}, {"monodromy", matrix_to_json(b.monodromy)}});
    Json jq{{"id", q.id},
            {"branches", std::move(branches)},
            {"fq_rank_low", q.fq_rank_low},
            {"fq_rank_high", q.fq_rank_high},
            {"iota", matrix_to_json(q.iota)}};
    if (q.costalk_rank) jq["costalk_rank"] = *q.costalk_rank;
    points.push_back(std::move(jq));
  }
  root["special_points"] = std::move(points);
  Json isolated = Json::array();
  for (const auto& r : cfg.isolated_points)
    isolated.push_back(Json{{"id", r.id}, {"milnor_number", r.milnor_number}});
  root["isolated_points"] = std::move(isolated);
  if (cfg.polar_data) {
    Json polar = Json::array();
    for (const auto& e : *cfg.polar_data) polar.push_back(Json{{"lambda", e.lambda}, {"clk_betti", e.clk_betti}});
    root["polar_data"] = std::move(polar);
  }
  if (cfg.monodromy_data) {
    const auto& md = *cfg.monodromy_data;
    Json polys = Json::array();
    for (const auto& p : md.component_char_polys) polys.push_back(polynomial_to_json(p));
    Json eig = Json::array(), jor = Json::array();
    for (const auto& e : md.eigenspace_dims) eig.push_back(comparison_to_json(e));
    for (const auto& e : md.jordan_sizes) jor.push_back(comparison_to_json(e));
    root["monodromy_data"] = Json{{"char_h", polynomial_to_json(md.char_h)},
                                  {"component_char_polys", std::move(polys)},
                                  {"eigenspace_dims", std::move(eig)},
                                  {"jordan_sizes", std::move(jor)}};
  }
  return root;
}

std::string serialize_configuration(const SliceConfiguration& cfg) {
  return pretty_json(configuration_to_json(cfg));
}

}  // namespace vanish
