#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "vanish/json_types.hpp"
#include "vanish/strata.hpp"

namespace vanish {

/// Malformed document: syntax errors, wrong value types, missing keys.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParsedConfiguration {
  SliceConfiguration config;
  /// One entry (code "unknown-key") per key outside the schema.
  std::vector<Violation> unknown_keys;
};

/// Reads one configuration document. Matrix entries may be JSON integers or
/// decimal strings (for values beyond 64 bits); polynomials are coefficient
/// lists, lowest degree first.
ParsedConfiguration parse_configuration(const std::string& text);

Json configuration_to_json(const SliceConfiguration& cfg);
/// Pretty-printed document, newline terminated; parse_configuration inverts it.
std::string serialize_configuration(const SliceConfiguration& cfg);

Json matrix_to_json(const IntegerMatrix& m);
Json integer_to_json(const Integer& x);

}  // namespace vanish
