#pragma once

#include <string>

#include "cohkey/csv.hpp"

namespace cohkey {

// Fixed 800x600 line chart: first table column is the x axis, every further
// column one series, colored from a fixed palette and named in a legend.
// Byte-identical output for identical input.  EmptyData below 2 rows or 2
// columns.
std::string emit_line_chart(const CsvTable& data, const std::string& title);

}  // namespace cohkey
