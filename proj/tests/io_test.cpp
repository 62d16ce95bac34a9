#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <string>

#include "cohkey/csv.hpp"
#include "cohkey/errors.hpp"
#include "cohkey/numfmt.hpp"
#include "cohkey/state_io.hpp"
#include "cohkey/svg.hpp"
#include "test_support.hpp"

using namespace cohkey;

namespace {

std::string full_precision(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string render_state(const TwoQubitState& rho) {
  std::string out = "dims: 4 4\nre:";
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      out += " " + full_precision(rho(i, j).real());
  out += "\nim:";
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      out += " " + full_precision(rho(i, j).imag());
  out += "\n";
  return out;
}

std::size_t count_substr(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++n;
  return n;
}

const char* kBellText =
    "# four-by-four density matrix\n"
    "dims: 4 4\n"
    "re: 0.5 0 0 0.5\n"
    "    0 0 0 0\n"
    "    0 0 0 0\n"
    "    0.5 0 0 0.5\n"
    "im: 0 0 0 0  0 0 0 0  0 0 0 0  0 0 0 0\n";

}  // namespace

TEST_CASE("state text parses with comments and line continuations") {
  TwoQubitState rho = parse_state_text(kBellText, "bell.state");
  CHECK(rho.matrix().max_abs_diff(projector_onto(bell_ket(0))) <= 1e-12);
}

TEST_CASE("state text round trips random states at 9 digits") {
  std::mt19937_64 rng(223);
  for (int k = 0; k < 20; ++k) {
    TwoQubitState rho = cohkey::testing::random_state(rng);
    TwoQubitState back = parse_state_text(render_state(rho), "trip.state");
    CHECK(back.matrix().max_abs_diff(rho.matrix()) <= 1e-8);
  }
}

TEST_CASE("state text syntax diagnostics carry positions") {
  auto expect_parse_error = [](const std::string& text, const std::string& fragment) {
    try {
      parse_state_text(text, "f");
      FAIL_CHECK("expected ParseError for: " << fragment);
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };

  expect_parse_error("dims: 4 4\nfoo: 1\n", "f:2: unknown key 'foo'");
  expect_parse_error("dims: 4 4\ndims: 4 4\n", "f:2: duplicate key 'dims'");
  expect_parse_error("0.5 0.5\n", "f:1: value '0.5' outside any field");
  expect_parse_error("dims: 4 x\n", "f:1: bad number 'x'");
  expect_parse_error("dims: 4 4 4\n", "too many values for 'dims'");
  expect_parse_error("dims: 4\nre: 0\n", "field 'dims' starting at line 1 has 1 of 2");
  expect_parse_error("dims: 4 4\n", "missing field 're'");
  std::string short_re = "dims: 4 4\nre: 0.5 0.5\n";
  expect_parse_error(short_re + "im:" + std::string(16, ' '), "has 2 of 16");

  std::string sixteen_zeros;
  for (int i = 0; i < 16; ++i) sixteen_zeros += " 0";
  expect_parse_error("dims: 2 2\nre:" + sixteen_zeros + "\nim:" + sixteen_zeros + "\n",
                     "only 4 4 dims");
}

TEST_CASE("state text semantic diagnostics name the right field") {
  // An imaginary-part asymmetry: im line blamed.
  std::string im_bad =
      "dims: 4 4\n"
      "re: 0.5 0 0 0  0 0.5 0 0  0 0 0 0  0 0 0 0\n"
      "im: 0 0.2 0 0  0.2 0 0 0  0 0 0 0  0 0 0 0\n";
  try {
    parse_state_text(im_bad, "f");
    FAIL_CHECK("expected NotHermitian");
  } catch (const NotHermitian& e) {
    CHECK(std::string(e.what()).find("f:3") != std::string::npos);
  }

  // A real-part asymmetry: re line blamed.
  std::string re_bad =
      "dims: 4 4\n"
      "re: 0.5 0.3 0 0  0.1 0.5 0 0  0 0 0 0  0 0 0 0\n"
      "im: 0 0 0 0  0 0 0 0  0 0 0 0  0 0 0 0\n";
  try {
    parse_state_text(re_bad, "f");
    FAIL_CHECK("expected NotHermitian");
  } catch (const NotHermitian& e) {
    CHECK(std::string(e.what()).find("f:2") != std::string::npos);
  }

  std::string bad_trace =
      "dims: 4 4\n"
      "re: 1 0 0 0  0 1 0 0  0 0 0 0  0 0 0 0\n"
      "im: 0 0 0 0  0 0 0 0  0 0 0 0  0 0 0 0\n";
  CHECK_THROWS_AS(parse_state_text(bad_trace, "f"), TraceNotOne);

  std::string negative =
      "dims: 4 4\n"
      "re: 0.6 0 0 0  0 0.6 0 0  0 0 -0.1 0  0 0 0 -0.1\n"
      "im: 0 0 0 0  0 0 0 0  0 0 0 0  0 0 0 0\n";
  CHECK_THROWS_AS(parse_state_text(negative, "f"), NotPositive);
}

TEST_CASE("missing state files are reported by path") {
  try {
    read_state_file("/nonexistent/veiled.state");
    FAIL_CHECK("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("cannot open") != std::string::npos);
  }
}

TEST_CASE("nine-significant-digit formatting") {
  CHECK(format_sig9(0.0) == "0");
  CHECK(format_sig9(0.5) == "0.5");
  CHECK(format_sig9(1.0 / 3.0) == "0.333333333");
  CHECK(format_sig9(-2.0) == "-2");
  CHECK(format_sig9(123456.789) == "123456.789");
  // Boundaries: 1e6 switches to scientific, 1e-4 stays decimal.
  CHECK(format_sig9(1e6) == "1.00000000e+06");
  CHECK(format_sig9(999999.0) == "999999");
  CHECK(format_sig9(1e-4) == "0.0001");
  CHECK(format_sig9(9.9e-5) == "9.90000000e-05");
  CHECK(format_sig9(-5.5e-7) == "-5.50000000e-07");
  CHECK(format_sig9(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_sig9(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(format_sig9(std::numeric_limits<double>::quiet_NaN()) == "nan");
}

TEST_CASE("csv rendering is exact and round trips") {
  CsvTable t;
  t.header = {"x", "rate"};
  t.rows = {{0.25, 0.296547608}, {0.5, 0.427206086}};
  CHECK(t.to_string() == "x,rate\n0.25,0.296547608\n0.5,0.427206086\n");

  CsvTable back = CsvTable::parse(t.to_string());
  REQUIRE(back.header.size() == 2);
  REQUIRE(back.rows.size() == 2);
  CHECK(back.header[1] == "rate");
  CHECK(back.rows[1][1] == doctest::Approx(0.427206086).epsilon(1e-12));
  CHECK(back.to_string() == t.to_string());
}

TEST_CASE("csv parse diagnostics") {
  CHECK_THROWS_AS(CsvTable::parse(""), ParseError);
  try {
    CsvTable::parse("a,b\n1,2,3\n");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(CsvTable::parse("a,b\n1,zzz\n"), ParseError);
  // Blank lines and CRLF are tolerated.
  CsvTable crlf = CsvTable::parse("\na,b\r\n1,2\r\n\n");
  CHECK(crlf.rows.size() == 1);
}

TEST_CASE("line charts are deterministic with one polyline per series") {
  CsvTable t;
  t.header = {"x", "K", "K1", "K2"};
  t.rows = {{0.1, 0.0, 0.1, -0.1}, {0.3, 0.2, 0.25, 0.05}, {0.5, 0.42, 0.42, 0.42}};
  std::string a = emit_line_chart(t, "rates");
  std::string b = emit_line_chart(t, "rates");
  CHECK(a == b);
  CHECK(count_substr(a, "<polyline") == 3);
  CHECK(a.find("rates") != std::string::npos);
  CHECK(a.find("K2") != std::string::npos);
  CHECK(a.find("width=\"800\"") != std::string::npos);

  CsvTable two;
  two.header = {"x", "y"};
  two.rows = {{0.0, 1.0}, {1.0, 2.0}};
  CHECK(count_substr(emit_line_chart(two, "pair"), "<polyline") == 1);
}

TEST_CASE("line charts reject degenerate tables") {
  CsvTable one_row;
  one_row.header = {"x", "y"};
  one_row.rows = {{0.0, 1.0}};
  CHECK_THROWS_AS(emit_line_chart(one_row, "t"), EmptyData);

  CsvTable one_col;
  one_col.header = {"x"};
  one_col.rows = {{0.0}, {1.0}};
  CHECK_THROWS_AS(emit_line_chart(one_col, "t"), EmptyData);

  CsvTable ragged;
  ragged.header = {"x", "y"};
  ragged.rows = {{0.0, 1.0}, {1.0}};
  CHECK_THROWS_AS(emit_line_chart(ragged, "t"), DimensionMismatch);
}
