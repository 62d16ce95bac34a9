#pragma once

#include <string>
#include <vector>

namespace cohkey {

// Numeric table with a header row; rendered with 9-significant-digit cells,
// comma separators, and \n line endings so identical data yields identical
// bytes.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  std::string to_string() const;
  void write(const std::string& path) const;
  static CsvTable parse(const std::string& text);
};

}  // namespace cohkey
