#include "cohkey/csv.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cohkey/errors.hpp"
#include "cohkey/numfmt.hpp"

namespace cohkey {

namespace {

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t pos = 0;
  for (;;) {
    std::size_t comma = line.find(',', pos);
    if (comma == std::string::npos) {
      cells.push_back(line.substr(pos));
      return cells;
    }
    cells.push_back(line.substr(pos, comma - pos));
    pos = comma + 1;
  }
}

}  // namespace

std::string CsvTable::to_string() const {
  std::string out;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c) out += ',';
    out += header[c];
  }
  out += '\n';
  for (const std::vector<double>& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_sig9(row[c]);
    }
    out += '\n';
  }
  return out;
}

void CsvTable::write(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path + ": cannot open for writing");
  out << to_string();
  if (!out) throw ParseError(path + ": write failed");
}

CsvTable CsvTable::parse(const std::string& text) {
  CsvTable table;
  std::istringstream stream(text);
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(stream, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells = split_commas(line);
    if (!have_header) {
      table.header = cells;
      have_header = true;
      continue;
    }
    if (cells.size() != table.header.size())
      throw ParseError("csv line " + std::to_string(line_no) + ": expected " +
                       std::to_string(table.header.size()) + " cells, got " +
                       std::to_string(cells.size()));
    std::vector<double> row;
    row.reserve(cells.size());
    for (const std::string& cell : cells) {
      const char* begin = cell.c_str();
      char* end = nullptr;
      double v = std::strtod(begin, &end);
      if (end != begin + cell.size())
        throw ParseError("csv line " + std::to_string(line_no) + ": bad number '" + cell + "'");
      row.push_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  if (table.header.empty()) throw ParseError("csv: empty input");
  return table;
}

}  // namespace cohkey
