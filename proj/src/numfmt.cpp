#include "cohkey/numfmt.hpp"

#include <cmath>
#include <cstdio>

namespace cohkey {

std::string format_sig9(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  double a = std::fabs(v);
  if (a != 0.0 && (a >= 1e6 || a < 1e-4))
    std::snprintf(buf, sizeof buf, "%.8e", v);
  else
    std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace cohkey
