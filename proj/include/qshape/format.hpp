#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <fmt/format.h>

namespace qshape {

// Locale-independent 17-significant-digit rendering used by every writer.
inline std::string fmt_real(double x) { return fmt::format("{:.17g}", x); }

inline std::string fmt_real(const std::optional<double>& x, std::string_view missing) {
  return x ? fmt_real(*x) : std::string(missing);
}

// Minimal JSON string escaping for labels and identifiers.
inline std::string json_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      default:
        out += c;
    }
  }
  out += '"';
  return out;
}

}  // namespace qshape
