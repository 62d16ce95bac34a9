#pragma once

#include <string>

namespace cohkey {

// Locale-independent 9-significant-digit rendering: plain decimal inside
// [1e-4, 1e6), lowercase scientific outside, "inf"/"-inf"/"nan" for
// non-finite values.
std::string format_sig9(double v);

}  // namespace cohkey
