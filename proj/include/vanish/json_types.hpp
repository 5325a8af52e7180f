#pragma once

#include <string>

#include "json.hpp"

namespace vanish {

/// Insertion-ordered so serialized documents follow schema order.
using Json = nlohmann::ordered_json;

/// Two-space indented dump that keeps arrays of scalars (matrix rows,
/// coefficient lists) on one line. Newline terminated.
std::string pretty_json(const Json& j);

}  // namespace vanish
