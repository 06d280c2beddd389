// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "catalog.hpp"
#include "errors.hpp"
#include "matrix_io.hpp"
#include "polynomial.hpp"
#include "report.hpp"
#include "tutte.hpp"

using namespace tutteforge;

namespace {

int parse_error_line(const std::string& text) {
  try {
    parse_matrix_text(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("parses reduced and full matrix documents") {
  BinaryMatroid n = parse_matrix_text(
      "# rank-6 fixture\n"
      "6 18 reduced\n"
      "110010001111\n"
      "101100011011\n"
      "010011111100\n"
      "101011101010\n"
      "011100101110\n"
      "011010110011\n");
  CHECK(n == minor_n());

  BinaryMatroid pair = parse_matrix_text("1 2 full\n11  \n");
  CHECK(pair.rank() == 1);
  CHECK(pair.size() == 2);

  BinaryMatroid empty = parse_matrix_text("0 3 full\n");
  CHECK(empty.rank() == 0);
  CHECK(empty.size() == 3);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(parse_error_line("") == 1);
  CHECK(parse_error_line("6 18\n") == 1);            // missing kind
  CHECK(parse_error_line("2 4 diagonal\n10\n01\n") == 1);
  CHECK(parse_error_line("3 2 full\n10\n01\n") == 1);  // r > n
  CHECK(parse_error_line("2 2 full\n10\n0x\n") == 3);
  CHECK(parse_error_line("2 2 full\n10\n011\n") == 3);  // wrong length
  CHECK(parse_error_line("2 2 full\n10\n") == 2);       // missing row
  CHECK(parse_error_line("1 2 full\n10\n01\n") == 3);   // extra row
}

TEST_CASE("matrix round-trip preserves the census") {
  for (const char* name : {"paper-n", "paper-nprime", "k4", "circuit5",
                           "loop", "coloop", "loop+coloop"}) {
    BinaryMatroid m = *fixture(name);
    BinaryMatroid back = parse_matrix_text(write_matrix_text(m, name));
    CHECK(census(back).key() == census(m).key());
  }
}

TEST_CASE("plain polynomial formatting follows display order") {
  TuttePolynomial t = tutte_from_census(census(minor_n()));
  std::string plain = format_tutte_plain(t);
  CHECK(plain.starts_with("y^12 + 6 y^11 + 21 y^10 + 56 y^9"));
  CHECK(contains(plain, "x^6 + 45 x y^5 + 462 y^6"));
  CHECK(plain.ends_with("231 x + 231 y"));

  QPolynomial q = q_from_census(census(minor_n()));
  std::string qplain = format_q_plain(q.poly);
  CHECK(qplain.starts_with("262144 z^12 - 393216 z^11 + 344064 z^10"));
  CHECK(qplain.ends_with("195/2 z^2 - 15/2 z + 1"));
}

TEST_CASE("tutte report document") {
  ReportOptions opt;
  std::string doc = render_tutte_report("coloop", *fixture("coloop"), opt);
  CHECK(contains(doc, "tutte-forge-report v1\n"));
  CHECK(contains(doc, "command = tutte\n"));
  CHECK(contains(doc, "input = coloop\n"));
  CHECK(contains(doc, "rank = 1\n"));
  CHECK(contains(doc, "elements = 1\n"));
  CHECK(contains(doc, "tutte_terms = 1\n"));
  CHECK(contains(doc, "tutte_coeff 1 0 = 1\n"));
}

TEST_CASE("tutte report eval and delcon verification") {
  ReportOptions opt;
  opt.eval = {BigRat(-1), BigRat(-1)};
  opt.verify_delcon = true;
  std::string doc = render_tutte_report("k4", *fixture("k4"), opt);
  CHECK(contains(doc, "eval -1 -1 = 4\n"));
  CHECK(contains(doc, "delcon_verified = true\n"));

  opt.eval = {BigRat(1, 2), BigRat(3)};
  std::string frac = render_tutte_report("coloop", *fixture("coloop"), opt);
  CHECK(contains(frac, "eval 1/2 3 = 1/2\n"));
}

TEST_CASE("delcon verification is size guarded") {
  ReportOptions opt;
  opt.verify_delcon = true;
  CHECK_THROWS_AS(render_tutte_report("golay24", *fixture("golay24"), opt),
                  SizeGuardError);
}

TEST_CASE("lv report document") {
  ReportOptions opt;
  opt.z_range = ZRange{-8, 8};
  long long violations = 0;
  std::string doc =
      render_lv_report("paper-n", *fixture("paper-n"), opt, &violations);
  CHECK(violations == 8);
  CHECK(contains(doc, "command = lv\n"));
  CHECK(contains(doc, "bicycle_dimension = 6\n"));
  CHECK(contains(doc, "rosenstiehl = true\n"));
  CHECK(contains(doc, "theorem33 = true\n"));
  CHECK(contains(doc, "t_at_minus1 = 64\n"));
  CHECK(contains(doc, "q_degree = 12\n"));
  CHECK(contains(doc, "q_coeff 12 = 262144 1\n"));
  CHECK(contains(doc, "q_coeff 2 = 195 2\n"));
  CHECK(contains(doc, "q_coeff 1 = -15 2\n"));
  CHECK(contains(doc, "q_coeff 0 = 1 1\n"));
  CHECK(contains(doc, "integer_coefficients = false\n"));
  CHECK(contains(doc, "shortcut_used = false\n"));
  CHECK(contains(doc, "z_range = -8 8\n"));
  CHECK(contains(doc, "violations = 8\n"));
  CHECK(contains(doc, "violation -2 = even-integer "));
  CHECK(contains(doc, "violation -1 = even-integer "));
  CHECK(contains(doc, "violation 2 = even-integer "));
  CHECK(contains(doc, "verdict = counterexample\n"));
  CHECK(contains(doc, "verdict_scope = scanned-range\n"));
}

TEST_CASE("lv shortcut scope on an integer-coefficient quotient") {
  ReportOptions opt;
  std::string doc = render_lv_report("k5", *fixture("k5"), opt, nullptr);
  CHECK(contains(doc, "integer_coefficients = true\n"));
  CHECK(contains(doc, "shortcut_used = true\n"));
  CHECK(contains(doc, "violations = 0\n"));
  CHECK(contains(doc, "verdict = holds\n"));
  CHECK(contains(doc, "verdict_scope = all-integers\n"));
}

TEST_CASE("documents are byte-identical across runs and worker counts") {
  ReportOptions one;
  one.z_range = ZRange{-8, 8};
  ReportOptions many = one;
  many.workers = 4;
  BinaryMatroid n = *fixture("paper-n");
  std::string a = render_lv_report("paper-n", n, one, nullptr);
  std::string b = render_lv_report("paper-n", n, one, nullptr);
  std::string c = render_lv_report("paper-n", n, many, nullptr);
  CHECK(a == b);
  CHECK(a == c);

  std::string d = render_tutte_report("paper-n", n, one);
  std::string e = render_tutte_report("paper-n", n, many);
  CHECK(d == e);
}

TEST_CASE("timings lines appear only on request") {
  ReportOptions opt;
  std::string without = render_tutte_report("k4", *fixture("k4"), opt);
  CHECK_FALSE(contains(without, "timing_"));
  opt.timings = true;
  std::string with = render_tutte_report("k4", *fixture("k4"), opt);
  CHECK(contains(with, "timing_census_ms = "));
}

TEST_CASE("plain lv output") {
  ReportOptions opt;
  opt.plain = true;
  opt.z_range = ZRange{-8, 8};
  std::string doc = render_lv_report("paper-n", *fixture("paper-n"), opt);
  CHECK(contains(doc, "Q(z) = 262144 z^12"));
  CHECK(contains(doc, "T(-1,-1) = 64\n"));
  CHECK(contains(doc, "verdict = counterexample\n"));
}

TEST_CASE("scan report document") {
  ReportOptions opt;
  long long violations = -1;
  std::string doc = render_scan_report(4, ZRange{-8, 8}, opt, &violations);
  CHECK(violations == 0);
  CHECK(contains(doc, "command = scan\n"));
  CHECK(contains(doc, "max_n = 4\n"));
  CHECK(contains(doc, "integer_coefficients_all = true\n"));
  CHECK(contains(doc, "violations = 0\n"));
  CHECK(contains(doc, "verdict = holds\n"));
}

TEST_CASE("search report document") {
  SearchConfig cfg;
  cfg.target_min = cfg.target_max = 18;
  cfg.samples = 4;
  cfg.z_range = ZRange{-8, 8};
  ReportOptions opt;
  long long results = 0;
  std::string doc = render_search_report("paper-n", *fixture("paper-n"), cfg,
                                         opt, &results);
  CHECK(results == 1);
  CHECK(contains(doc, "command = search\n"));
  CHECK(contains(doc, "source = paper-n\n"));
  CHECK(contains(doc, "mode = sampled\n"));
  CHECK(contains(doc, "results = 1\n"));
  CHECK(contains(doc, "result 0 contract = \n"));
  CHECK(contains(doc, "result 0 delete = \n"));
  CHECK(contains(doc, "result 0 verdict = counterexample\n"));
}
