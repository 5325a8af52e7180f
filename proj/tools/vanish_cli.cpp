#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "vanish/config_io.hpp"
#include "vanish/corpus.hpp"
#include "vanish/report.hpp"

namespace {

int write_corpus(const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& c : vanish::corpus()) {
    const auto path = std::filesystem::path(dir) / (c.name + ".json");
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << path << "\n";
      return 1;
    }
    out << vanish::serialize_configuration(c.config);
    std::cout << "wrote " << path.string() << "\n";
  }
  return 0;
}

// Runs every bundled case and compares against its embedded expectation.
int check_corpus(const vanish::RunOptions& options) {
  int status = 0;
  for (const auto& c : vanish::corpus()) {
    const auto text = vanish::serialize_configuration(c.config);
    const auto report = vanish::report_for_configuration(c.name, c.config, vanish::sha256_hex(text), options);
    bool ok = report.status() == 0 && report.vanishing.has_value();
    std::string got = "-";
    if (report.vanishing) {
      const auto& v = *report.vanishing;
      got = vanish::format_group(v.lowest_group);
      ok = ok && v.lowest_group == c.expected_group && v.ledger.domain == c.expected_ledger.domain &&
           v.ledger.codomain == c.expected_ledger.codomain && v.ledger.kernel == c.expected_ledger.kernel;
    }
    std::cout << (ok ? "ok   " : "FAIL ") << c.name << "  " << c.germ << "  expected "
              << vanish::format_group(c.expected_group) << ", got " << got << "\n";
    if (!ok) status = std::max(status, std::max(report.status(), 2));
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lowest vanishing cohomology of Milnor fibres from slice configurations"};
  app.set_version_flag("--version", std::string(vanish::kToolName) + " " + vanish::kToolVersion);
  app.require_subcommand(1);

  vanish::RunOptions options;
  std::string format = "text";
  std::vector<std::string> paths;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("files", paths, "Configuration documents")->required()->check(CLI::ExistingFile);
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--strict", options.strict, "Treat unknown keys as violations");
    sub->add_flag("--costalk-required", options.costalk_required,
                  "Require costalk_rank on every special point");
    sub->add_flag("--verbose", options.verbose, "Print matrices of any size");
  };

  auto* validate = app.add_subcommand("validate", "Check configurations without computing");
  add_common(validate);
  auto* compute = app.add_subcommand("compute", "Validate and compute the vanishing report");
  add_common(compute);
  std::string corpus_dir;
  auto* corpus = app.add_subcommand("corpus", "Check the bundled worked examples against their known groups");
  corpus->add_option("--write", corpus_dir, "Also write the configurations into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (corpus->parsed()) {
    if (!corpus_dir.empty()) {
      if (const int rc = write_corpus(corpus_dir); rc != 0) return rc;
    }
    return check_corpus(options);
  }

  options.compute = compute->parsed();
  options.format = format == "json" ? vanish::OutputFormat::json : vanish::OutputFormat::text;
  const auto result = vanish::run(paths, options);
  std::cout << vanish::render(result, options);
  return result.exit_status;
}
