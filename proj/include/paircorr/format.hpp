#pragma once

#include <cstdio>
#include <string>

namespace paircorr {

// Fixed 17-significant-digit rendering; round-trips every double and gives
// byte-identical text for identical values.
inline std::string format_double(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

}  // namespace paircorr
