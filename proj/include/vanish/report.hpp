#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vanish/engine.hpp"
#include "vanish/json_types.hpp"
#include "vanish/lattice.hpp"
#include "vanish/strata.hpp"

namespace vanish {

inline constexpr const char* kToolName = "vanish";
inline constexpr const char* kToolVersion = "1.0.0";

/// Matrices larger than this in either dimension are omitted unless verbose.
inline constexpr std::size_t kMatrixPrintLimit = 12;

enum class OutputFormat { text, json };

struct RunOptions {
  OutputFormat format = OutputFormat::text;
  bool compute = true;
  bool strict = false;
  bool costalk_required = false;
  bool verbose = false;
};

struct Report {
  std::string configuration_id;
  std::string input_digest;
  /// Unreadable file or malformed document.
  std::optional<std::string> error;
  std::vector<Violation> validation;
  std::vector<Violation> warnings;
  std::optional<VanishingReport> vanishing;
  std::optional<std::string> defect;

  /// 0 valid and consistent, 1 invalid or unreadable, 2 internal defect.
  int status() const;
};

/// "0", "Z^r", or "Z^r (+) Z/d1 (+) ..." (the free part is omitted when r = 0).
std::string format_group(const FinAbGroup& g);

std::string sha256_hex(const std::string& bytes);

/// Parses, validates and (if requested and valid) analyzes one document.
Report report_for_text(const std::string& id, const std::string& text, const RunOptions& options);
Report report_for_configuration(const std::string& id, const SliceConfiguration& cfg,
                                const std::string& digest, const RunOptions& options);

Json report_to_json(const Report& r, bool verbose);
std::string report_to_text(const Report& r, bool verbose);

struct RunResult {
  std::vector<Report> reports;
  int exit_status = 0;
};

/// One report per path, in path order; files are processed concurrently.
RunResult run(const std::vector<std::string>& paths, const RunOptions& options);

/// Byte-deterministic rendering of a whole run in the requested format.
std::string render(const RunResult& result, const RunOptions& options);

}  // namespace vanish
