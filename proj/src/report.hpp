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

#ifndef TUTTEFORGE_REPORT_HPP_
#define TUTTEFORGE_REPORT_HPP_

#include <optional>
#include <string>
#include <utility>

#include "lasvergnas.hpp"
#include "matroid.hpp"
#include "search.hpp"
#include "tutte.hpp"

namespace tutteforge {

// Stable line-oriented key/value documents. All numbers are decimal strings;
// no floating point. For fixed inputs, seeds, and flags the documents are
// byte-identical across runs and worker counts, so wall-clock timings only
// appear when explicitly requested.
struct ReportOptions {
  int workers = 0;  // 0 reads TUTTE_FORGE_WORKERS, defaulting to 1
  bool plain = false;
  bool timings = false;
  bool verify_delcon = false;
  std::optional<std::pair<BigRat, BigRat>> eval;
  ZRange z_range{-16, 16};
};

std::string render_tutte_report(const std::string& input_id,
                                const BinaryMatroid& m,
                                const ReportOptions& opt);

// violations_out, when given, receives the number of violating z values.
std::string render_lv_report(const std::string& input_id,
                             const BinaryMatroid& m, const ReportOptions& opt,
                             long long* violations_out = nullptr);

std::string render_search_report(const std::string& source_id,
                                 const BinaryMatroid& source,
                                 const SearchConfig& cfg,
                                 const ReportOptions& opt,
                                 long long* results_out = nullptr);

std::string render_scan_report(int max_n, ZRange z_range,
                               const ReportOptions& opt,
                               long long* violations_out = nullptr);

// Descending total degree, then descending x power; the classic display
// order for two-variable polynomials.
std::string format_tutte_plain(const TuttePolynomial& t);
// Descending degree with rational coefficients in p/q form.
std::string format_q_plain(const RationalPolynomial& q);

}  // namespace tutteforge

#endif  // TUTTEFORGE_REPORT_HPP_
