#include "vanish/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <sstream>

#include "vanish/config_io.hpp"

namespace vanish {
namespace {

bool printable(const IntegerMatrix& m, bool verbose) {
  return verbose || (m.rows() <= kMatrixPrintLimit && m.cols() <= kMatrixPrintLimit);
}

std::string dims(const IntegerMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

Json group_to_json(const FinAbGroup& g) {
  Json torsion = Json::array();
  for (const auto& d : g.torsion) torsion.push_back(integer_to_json(d));
  return Json{{"text", format_group(g)}, {"free_rank", g.free_rank}, {"torsion", std::move(torsion)}};
}

Json violations_to_json(const std::vector<Violation>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(Json{{"code", v.code}, {"subject", v.subject}, {"message", v.message}});
  return a;
}

Json matrix_or_placeholder(const IntegerMatrix& m, bool verbose) {
  if (printable(m, verbose)) return matrix_to_json(m);
  return Json{{"suppressed", dims(m)}};
}

Json vanishing_to_json(const VanishingReport& v, bool verbose) {
  Json out;
  out["degrees"] = Json{{"m", v.degrees.m}, {"lowest_degree", v.degrees.lowest_degree}};
  out["lowest_group"] = group_to_json(v.lowest_group);
  out["g_rank"] = v.g_rank;
  Json i0 = Json::array();
  for (const auto& [id, rank] : v.i0_contribution) i0.push_back(Json{{"component_id", id}, {"rank", rank}});
  out["i0_contribution"] = std::move(i0);
  out["rank_ledger"] =
      Json{{"domain", v.ledger.domain}, {"codomain", v.ledger.codomain}, {"kernel", v.ledger.kernel}};
  Json comps = Json::array();
  for (const auto& c : v.components)
    comps.push_back(Json{{"component_id", c.component_id},
                         {"invariant_rank", c.invariants.rank()},
                         {"invariant_basis", matrix_or_placeholder(c.invariants.basis(), verbose)},
                         {"coker", group_to_json(c.coker)},
                         {"euler", c.euler}});
  out["components"] = std::move(comps);
  const auto& s = v.six_term;
  out["six_term"] = Json{{"a", s.a}, {"b", s.b}, {"c", s.c}, {"d", s.d},
                         {"e", s.e}, {"f", s.f}, {"consistent", s.consistent}};
  out["h_top"] = Json{{"rank", s.d}, {"torsion_determined", false}};
  out["upper_betti_high"] = v.upper_betti_high;
  out["euler_total"] = v.euler_total;
  Json bounds;
  bounds["upper_lowest"] = v.bounds.upper_lowest;
  bounds["upper_lowest_transversal"] = v.bounds.upper_lowest_transversal;
  bounds["lower_lowest"] = v.bounds.lower_lowest ? Json(*v.bounds.lower_lowest) : Json(nullptr);
  bounds["min_bound"] = v.bounds.min_bound;
  Json polar = Json::array();
  for (const auto& p : v.bounds.polar)
    polar.push_back(Json{{"k", p.k}, {"degree", p.degree}, {"bound", p.bound}});
  bounds["polar"] = std::move(polar);
  out["bounds"] = std::move(bounds);
  if (v.monodromy) {
    auto eig = [](const std::vector<EigenCheck>& list) {
      Json a = Json::array();
      for (const auto& e : list)
        a.push_back(Json{{"eigenvalue", e.eigenvalue},
                         {"milnor", e.milnor},
                         {"transversal_sum", e.transversal_sum},
                         {"holds", e.holds}});
      return a;
    };
    out["monodromy"] = Json{{"component_product", v.monodromy->component_product.to_string()},
                            {"char_poly_divides", v.monodromy->char_poly_divides},
                            {"eigenspace", eig(v.monodromy->eigenspace)},
                            {"jordan", eig(v.monodromy->jordan)}};
  }
  Json checks = Json::array();
  for (const auto& c : v.checks)
    checks.push_back(Json{{"name", c.name}, {"kind", c.assertion ? "assertion" : "predicate"}, {"passed", c.passed}});
  out["checks"] = std::move(checks);
  out["j"] = Json{{"rows", v.j.rows()}, {"cols", v.j.cols()}, {"entries", matrix_or_placeholder(v.j, verbose)}};
  return out;
}

void write_matrix(std::ostream& os, const IntegerMatrix& m, const std::string& indent, bool verbose) {
  if (!printable(m, verbose)) {
    os << indent << "(" << dims(m) << " matrix suppressed; use --verbose)\n";
    return;
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << indent << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << std::setw(3) << m(r, c).get_str();
    os << " ]\n";
  }
}

Report read_and_report(const std::string& path, const RunOptions& options) {
  const std::string id = std::filesystem::path(path).stem().string();
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    Report r;
    r.configuration_id = id;
    r.error = "cannot read '" + path + "'";
    return r;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return report_for_text(id, buffer.str(), options);
}

}  // namespace

int Report::status() const {
  if (defect) return 2;
  if (error || !validation.empty()) return 1;
  if (vanishing && !vanishing->assertions_hold()) return 2;
  return 0;
}

std::string format_group(const FinAbGroup& g) {
  if (g.is_trivial()) return "0";
  std::vector<std::string> parts;
  if (g.free_rank > 0) parts.push_back("Z^" + std::to_string(g.free_rank));
  for (const auto& d : g.torsion) parts.push_back("Z/" + d.get_str());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " (+) " : "") + parts[i];
  return out;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < length; ++i)
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return os.str();
}

Report report_for_configuration(const std::string& id, const SliceConfiguration& cfg,
                                const std::string& digest, const RunOptions& options) {
  Report r;
  r.configuration_id = id;
  r.input_digest = digest;
  r.validation = validate(cfg);
  if (options.costalk_required)
    for (const auto& q : cfg.special_points)
      if (!q.costalk_rank)
        r.validation.push_back({"costalk-required", q.id,
                                "costalk_rank is required to compute the lower bound"});
  if (!r.validation.empty() || !options.compute) return r;
  try {
    r.vanishing = analyze(cfg);
  } catch (const EngineDefect& e) {
    r.defect = e.what();
  }
  return r;
}

Report report_for_text(const std::string& id, const std::string& text, const RunOptions& options) {
  const std::string digest = sha256_hex(text);
  ParsedConfiguration parsed;
  try {
    parsed = parse_configuration(text);
  } catch (const ConfigError& e) {
    Report r;
    r.configuration_id = id;
    r.input_digest = digest;
    r.error = e.what();
    return r;
  }
  RunOptions effective = options;
  if (options.strict && !parsed.unknown_keys.empty()) effective.compute = false;
  Report r = report_for_configuration(id, parsed.config, digest, effective);
  if (options.strict) {
    r.validation.insert(r.validation.begin(), parsed.unknown_keys.begin(), parsed.unknown_keys.end());
    if (!r.validation.empty()) r.vanishing.reset();
  } else {
    r.warnings = std::move(parsed.unknown_keys);
  }
  return r;
}

Json report_to_json(const Report& r, bool verbose) {
  Json out;
  out["configuration_id"] = r.configuration_id;
  out["provenance"] = Json{{"tool", kToolName}, {"version", kToolVersion}, {"input_sha256", r.input_digest}};
  out["status"] = r.status();
  if (r.error) out["error"] = *r.error;
  out["validation"] = violations_to_json(r.validation);
  if (!r.warnings.empty()) out["warnings"] = violations_to_json(r.warnings);
  if (r.defect) out["defect"] = *r.defect;
  if (r.vanishing) out["vanishing"] = vanishing_to_json(*r.vanishing, verbose);
  return out;
}

std::string report_to_text(const Report& r, bool verbose) {
  std::ostringstream os;
  os << "== " << r.configuration_id << "  (" << kToolName << ' ' << kToolVersion << ", sha256 "
     << (r.input_digest.empty() ? "-" : r.input_digest.substr(0, 16)) << ")\n";
  if (r.error) {
    os << "error: " << *r.error << "\n";
    return os.str();
  }
  for (const auto& w : r.warnings) os << "warning: " << w.code << " at " << w.subject << ": " << w.message << "\n";
  if (r.validation.empty()) {
    os << "validation: ok\n";
  } else {
    os << "validation: " << r.validation.size() << " violation(s)\n";
    for (const auto& v : r.validation) os << "  " << v.code << " at " << v.subject << ": " << v.message << "\n";
  }
  if (r.defect) os << "internal defect: " << *r.defect << "\n";
  if (!r.vanishing) return os.str();

  const auto& v = *r.vanishing;
  os << "degree: m = " << v.degrees.m << ", original lowest degree " << v.degrees.lowest_degree << "\n";
  os << "lowest group H^{n-2}(F): " << format_group(v.lowest_group) << "\n";
  os << "  G rank " << v.g_rank << ", I0:";
  if (v.i0_contribution.empty()) os << " none";
  for (const auto& [id, rank] : v.i0_contribution) os << ' ' << id << '=' << rank;
  os << "\n  rank ledger: domain " << v.ledger.domain << ", codomain " << v.ledger.codomain
     << ", kernel " << v.ledger.kernel << "\n";
  os << "components:\n";
  for (const auto& c : v.components)
    os << "  " << c.component_id << ": invariants rank " << c.invariants.rank() << ", coker "
       << format_group(c.coker) << ", euler " << c.euler << "\n";
  const auto& s = v.six_term;
  os << "six-term ranks: A=" << s.a << " B=" << s.b << " C=" << s.c << " D=" << s.d << " E=" << s.e
     << " F=" << s.f << (s.consistent ? " (consistent)" : " (INCONSISTENT)") << "\n";
  os << "H^n(T_S) rank " << s.d << " (torsion not determined)\n";
  os << "b_{n-1}(F) <= " << v.upper_betti_high << "\n";
  os << "euler characteristic: " << v.euler_total << "\n";
  os << "bounds on the lowest group rank: upper " << v.bounds.upper_lowest << " (transversal "
     << v.bounds.upper_lowest_transversal << "), min " << v.bounds.min_bound << ", lower "
     << (v.bounds.lower_lowest ? std::to_string(*v.bounds.lower_lowest) : std::string("n/a")) << "\n";
  for (const auto& p : v.bounds.polar) os << "  b_" << p.degree << "(F) <= " << p.bound << "  (k = " << p.k << ")\n";
  if (v.monodromy)
    os << "monodromy: char_h divides " << v.monodromy->component_product.to_string() << ": "
       << (v.monodromy->char_poly_divides ? "yes" : "no") << "\n";
  os << "checks:\n";
  for (const auto& c : v.checks)
    os << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name << " ("
       << (c.assertion ? "assertion" : "predicate") << ")\n";
  os << "j (" << dims(v.j) << "):\n";
  write_matrix(os, v.j, "  ", verbose);
  return os.str();
}

RunResult run(const std::vector<std::string>& paths, const RunOptions& options) {
  std::vector<std::future<Report>> pending;
  pending.reserve(paths.size());
  for (const auto& p : paths)
    pending.push_back(std::async(std::launch::async, read_and_report, p, options));
  RunResult result;
  for (auto& f : pending) {
    result.reports.push_back(f.get());
    result.exit_status = std::max(result.exit_status, result.reports.back().status());
  }
  return result;
}

std::string render(const RunResult& result, const RunOptions& options) {
  if (options.format == OutputFormat::json) {
    Json reports = Json::array();
    for (const auto& r : result.reports) reports.push_back(report_to_json(r, options.verbose));
    Json doc{{"reports", std::move(reports)}, {"exit_status", result.exit_status}};
    return pretty_json(doc);
  }
  std::string out;
  for (const auto& r : result.reports) out += report_to_text(r, options.verbose);
  return out;
}

}  // namespace vanish
