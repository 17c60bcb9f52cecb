#pragma once

#include <cstdio>
#include <string>

namespace sparseph {

/// Decimal text with 17 significant digits; parses back to the same double.
inline std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace sparseph
