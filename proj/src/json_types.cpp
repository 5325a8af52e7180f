#include "vanish/json_types.hpp"

#include <algorithm>

namespace vanish {
namespace {

bool is_flat(const Json& j) {
  return j.is_array() &&
         std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
}

void write(std::string& out, const Json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
  const std::string close(static_cast<std::size_t>(depth) * 2, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Json(it.key()).dump() + ": ";
      write(out, it.value(), depth + 1);
    }
    out += "\n" + close + "}";
  } else if (j.is_array() && !j.empty() && !is_flat(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += pad;
      write(out, j[i], depth + 1);
    }
    out += "\n" + close + "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
    out += "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string pretty_json(const Json& j) {
  std::string out;
  write(out, j, 0);
  return out + "\n";
}

}  // namespace vanish
