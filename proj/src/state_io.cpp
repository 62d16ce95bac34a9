#include "cohkey/state_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "cohkey/errors.hpp"

namespace cohkey {

namespace {

[[noreturn]] void fail(const std::string& filename, std::size_t line, const std::string& msg) {
  throw ParseError(filename + ":" + std::to_string(line) + ": " + msg);
}

struct FieldBuf {
  const char* name;
  std::size_t expected;
  bool seen = false;
  std::size_t start_line = 0;
  std::vector<double> values;
};

double parse_number(const std::string& token, const std::string& filename, std::size_t line) {
  const char* begin = token.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end != begin + token.size()) fail(filename, line, "bad number '" + token + "'");
  return v;
}

}  // namespace

TwoQubitState parse_state_text(const std::string& text, const std::string& filename) {
  FieldBuf dims{"dims", 2, false, 0, {}};
  FieldBuf re{"re", 16, false, 0, {}};
  FieldBuf im{"im", 16, false, 0, {}};
  FieldBuf* open = nullptr;

  std::istringstream stream(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    if (std::size_t hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    std::string token;
    bool first = true;
    while (words >> token) {
      if (first && token.back() == ':') {
        std::string key = token.substr(0, token.size() - 1);
        if (open && open->values.size() < open->expected)
          fail(filename, line_no,
               "field '" + std::string(open->name) + "' starting at line " +
                   std::to_string(open->start_line) + " has " +
                   std::to_string(open->values.size()) + " of " +
                   std::to_string(open->expected) + " values");
        FieldBuf* next = key == "dims" ? &dims : key == "re" ? &re : key == "im" ? &im : nullptr;
        if (!next) fail(filename, line_no, "unknown key '" + key + "'");
        if (next->seen) fail(filename, line_no, "duplicate key '" + key + "'");
        next->seen = true;
        next->start_line = line_no;
        open = next;
      } else {
        if (!open) fail(filename, line_no, "value '" + token + "' outside any field");
        if (open->values.size() >= open->expected)
          fail(filename, line_no, "too many values for '" + std::string(open->name) + "'");
        open->values.push_back(parse_number(token, filename, line_no));
      }
      first = false;
    }
  }
  for (const FieldBuf* f : {&dims, &re, &im}) {
    if (!f->seen) fail(filename, line_no, "missing field '" + std::string(f->name) + "'");
    if (f->values.size() < f->expected)
      fail(filename, f->start_line,
           "field '" + std::string(f->name) + "' has " + std::to_string(f->values.size()) +
               " of " + std::to_string(f->expected) + " values");
  }
  if (dims.values[0] != 4.0 || dims.values[1] != 4.0)
    fail(filename, dims.start_line, "only 4 4 dims are supported");

  ComplexMatrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      m(i, j) = Complex(re.values[4 * i + j], im.values[4 * i + j]);

  try {
    return make_state(m);
  } catch (const NotHermitian& e) {
    double re_asym = 0.0;
    double im_asym = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i; j < 4; ++j) {
        Complex d = m(i, j) - std::conj(m(j, i));
        re_asym = std::max(re_asym, std::abs(d.real()));
        im_asym = std::max(im_asym, std::abs(d.imag()));
      }
    }
    std::size_t at = im_asym >= re_asym ? im.start_line : re.start_line;
    throw NotHermitian(filename + ":" + std::to_string(at) + ": " + e.what());
  } catch (const TraceNotOne& e) {
    throw TraceNotOne(filename + ":" + std::to_string(re.start_line) + ": " + e.what());
  } catch (const NotPositive& e) {
    throw NotPositive(filename + ":" + std::to_string(re.start_line) + ": " + e.what());
  }
}

TwoQubitState read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_text(buf.str(), path);
}

}  // namespace cohkey
