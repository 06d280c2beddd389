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

#include "report.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <vector>

#include "errors.hpp"

namespace tutteforge {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

std::string hex16(uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setfill('0') << std::setw(16) << v;
  return os.str();
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(xs[i]);
  }
  return out;
}

void emit_header(std::ostringstream& os, const std::string& command,
                 const std::string& input_key, const std::string& input_id) {
  os << "tutte-forge-report v1\n";
  os << "command = " << command << "\n";
  os << input_key << " = " << input_id << "\n";
}

void emit_matroid_summary(std::ostringstream& os, const BinaryMatroid& m) {
  os << "rank = " << m.rank() << "\n";
  os << "elements = " << m.size() << "\n";
  os << "loops = " << join(m.loops()) << "\n";
  os << "coloops = " << join(m.coloops()) << "\n";
}

// One monomial like "45 x y^5"; empty exponents drop their variable.
std::string monomial(const std::string& coeff_text, int i, int j) {
  std::string out;
  bool unit = coeff_text == "1" && (i > 0 || j > 0);
  if (!unit) out = coeff_text;
  auto var = [&out](const char* name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += " ";
    out += name;
    if (e > 1) out += "^" + std::to_string(e);
  };
  var("x", i);
  var("y", j);
  return out;
}

void emit_conjecture_block(std::ostringstream& os, const std::string& prefix,
                           const ConjectureReport& rep) {
  const RationalPolynomial& q = rep.q.poly;
  os << prefix << "t_at_minus1 = " << rep.q.t_minus1.get_str() << "\n";
  os << prefix << "q_degree = " << q.degree() << "\n";
  for (int k = q.degree(); k >= 0; --k) {
    os << prefix << "q_coeff " << k << " = " << q.coeff(k).get_num().get_str()
       << " " << q.coeff(k).get_den().get_str() << "\n";
  }
  os << prefix
     << "integer_coefficients = " << (rep.integer_coefficients ? "true" : "false")
     << "\n";
  os << prefix << "shortcut_used = " << (rep.shortcut_used ? "true" : "false")
     << "\n";
  os << prefix << "z_range = " << rep.scanned.lo << " " << rep.scanned.hi
     << "\n";
  os << prefix << "violations = " << rep.violations.size() << "\n";
  for (const auto& [z, verdict] : rep.violations) {
    os << prefix << "violation " << z << " = "
       << parity_class_name(verdict.cls) << " " << rat_to_string(verdict.value)
       << "\n";
  }
  os << prefix << "verdict = " << (rep.holds() ? "holds" : "counterexample")
     << "\n";
  os << prefix << "verdict_scope = "
     << (rep.shortcut_used ? "all-integers" : "scanned-range") << "\n";
}

}  // namespace

std::string format_tutte_plain(const TuttePolynomial& t) {
  auto terms = t.terms();
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int da = std::get<0>(a) + std::get<1>(a);
    int db = std::get<0>(b) + std::get<1>(b);
    if (da != db) return da > db;
    return std::get<0>(a) > std::get<0>(b);
  });
  if (terms.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < terms.size(); ++k) {
    const auto& [i, j, c] = terms[k];
    if (k) out += " + ";
    out += monomial(c.get_str(), i, j);
  }
  return out;
}

std::string format_q_plain(const RationalPolynomial& q) {
  if (q.degree() < 0) return "0";
  std::string out;
  bool first = true;
  for (int k = q.degree(); k >= 0; --k) {
    BigRat c = q.coeff(k);
    if (c == 0) continue;
    bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    BigRat a = negative ? BigRat(-c) : c;
    std::string coeff_text = rat_to_string(a);
    std::string term;
    if (coeff_text != "1" || k == 0) term = coeff_text;
    if (k > 0) {
      if (!term.empty()) term += " ";
      term += "z";
      if (k > 1) term += "^" + std::to_string(k);
    }
    out += term;
  }
  return out;
}

std::string render_tutte_report(const std::string& input_id,
                                const BinaryMatroid& m,
                                const ReportOptions& opt) {
  CensusOptions copt;
  copt.workers = opt.workers;

  Clock::time_point t0 = Clock::now();
  RankNullityCensus c = census(m, copt);
  long long census_ms = ms_since(t0);

  t0 = Clock::now();
  TuttePolynomial t = tutte_from_census(c);
  long long expand_ms = ms_since(t0);

  long long delcon_ms = -1;
  if (opt.verify_delcon) {
    if (m.size() > 18) {
      throw SizeGuardError("--verify-delcon is limited to 18 elements");
    }
    t0 = Clock::now();
    TuttePolynomial oracle = tutte_delcon(m);
    delcon_ms = ms_since(t0);
    if (!(oracle == t)) {
      throw VerificationError(
          "deletion-contraction disagrees with the census polynomial");
    }
  }

  std::ostringstream os;
  if (opt.plain) {
    os << "T(x,y) = " << format_tutte_plain(t) << "\n";
    if (opt.eval) {
      os << "T(" << rat_to_string(opt.eval->first) << ","
         << rat_to_string(opt.eval->second)
         << ") = " << rat_to_string(t.evaluate(opt.eval->first,
                                               opt.eval->second))
         << "\n";
    }
    return os.str();
  }

  emit_header(os, "tutte", "input", input_id);
  emit_matroid_summary(os, m);
  os << "census_fingerprint = " << hex16(c.fingerprint()) << "\n";
  auto terms = t.terms();
  os << "tutte_terms = " << terms.size() << "\n";
  for (const auto& [i, j, coeff] : terms) {
    os << "tutte_coeff " << i << " " << j << " = " << coeff.get_str() << "\n";
  }
  if (opt.eval) {
    os << "eval " << rat_to_string(opt.eval->first) << " "
       << rat_to_string(opt.eval->second) << " = "
       << rat_to_string(t.evaluate(opt.eval->first, opt.eval->second)) << "\n";
  }
  if (opt.verify_delcon) os << "delcon_verified = true\n";
  if (opt.timings) {
    os << "timing_census_ms = " << census_ms << "\n";
    os << "timing_expand_ms = " << expand_ms << "\n";
    if (delcon_ms >= 0) os << "timing_delcon_ms = " << delcon_ms << "\n";
  }
  return os.str();
}

std::string render_lv_report(const std::string& input_id,
                             const BinaryMatroid& m, const ReportOptions& opt,
                             long long* violations_out) {
  CensusOptions copt;
  copt.workers = opt.workers;

  Clock::time_point t0 = Clock::now();
  RankNullityCensus c = census(m, copt);
  long long census_ms = ms_since(t0);

  TuttePolynomial t = tutte_from_census(c);
  ConjectureReport rep = check_conjecture_with_census(c, opt.z_range, input_id);
  int bicycle = bicycle_dimension(m);
  bool rosenstiehl = check_rosenstiehl(m, t);
  bool theorem33 = check_theorem33(m, t);

  if (violations_out != nullptr) {
    *violations_out = static_cast<long long>(rep.violations.size());
  }

  std::ostringstream os;
  if (opt.plain) {
    os << "Q(z) = " << format_q_plain(rep.q.poly) << "\n";
    os << "T(-1,-1) = " << rep.q.t_minus1.get_str() << "\n";
    os << "verdict = " << (rep.holds() ? "holds" : "counterexample") << "\n";
    return os.str();
  }

  emit_header(os, "lv", "input", input_id);
  emit_matroid_summary(os, m);
  os << "census_fingerprint = " << hex16(c.fingerprint()) << "\n";
  os << "bicycle_dimension = " << bicycle << "\n";
  os << "rosenstiehl = " << (rosenstiehl ? "true" : "false") << "\n";
  os << "theorem33 = " << (theorem33 ? "true" : "false") << "\n";
  emit_conjecture_block(os, "", rep);
  if (opt.timings) os << "timing_census_ms = " << census_ms << "\n";
  return os.str();
}

std::string render_search_report(const std::string& source_id,
                                 const BinaryMatroid& source,
                                 const SearchConfig& cfg,
                                 const ReportOptions& opt,
                                 long long* results_out) {
  Clock::time_point t0 = Clock::now();
  SearchOutcome outcome = search_counterexamples(source, cfg);
  long long search_ms = ms_since(t0);

  if (results_out != nullptr) {
    *results_out = static_cast<long long>(outcome.results.size());
  }

  std::ostringstream os;
  emit_header(os, "search", "source", source_id);
  os << "source_rank = " << source.rank() << "\n";
  os << "source_elements = " << source.size() << "\n";
  os << "target_size = " << std::max(cfg.target_min, 0) << " "
     << std::min(cfg.target_max, source.size()) << "\n";
  if (cfg.target_rank) {
    os << "target_rank = " << *cfg.target_rank << "\n";
  } else {
    os << "target_rank = any\n";
  }
  os << "mode = "
     << (cfg.mode == SearchConfig::Mode::kSampled ? "sampled" : "exhaustive")
     << "\n";
  if (cfg.mode == SearchConfig::Mode::kSampled) {
    os << "seed = " << cfg.seed << "\n";
    os << "samples = " << cfg.samples << "\n";
  }
  os << "z_range = " << cfg.z_range.lo << " " << cfg.z_range.hi << "\n";
  os << "dedup = " << (cfg.dedup ? "true" : "false") << "\n";
  os << "minors_checked = " << outcome.minors_checked << "\n";
  os << "budget_exhausted = " << outcome.budget_exhausted << "\n";
  for (size_t i = 0; i < outcome.budget_exhausted_specs.size(); ++i) {
    const MinorSpec& spec = outcome.budget_exhausted_specs[i];
    os << "budget_exhausted_minor " << i << " contract = "
       << join(spec.contract) << "\n";
    os << "budget_exhausted_minor " << i << " delete = " << join(spec.remove)
       << "\n";
  }
  os << "violating_minors = " << outcome.violating_minors << "\n";
  os << "results = " << outcome.results.size() << "\n";
  for (size_t i = 0; i < outcome.results.size(); ++i) {
    const SearchResult& res = outcome.results[i];
    std::string prefix = "result " + std::to_string(i) + " ";
    os << prefix << "contract = " << join(res.spec.contract) << "\n";
    os << prefix << "delete = " << join(res.spec.remove) << "\n";
    os << prefix << "rank = " << res.rank << "\n";
    os << prefix << "elements = " << res.size << "\n";
    os << prefix << "census_fingerprint = " << hex16(res.fingerprint) << "\n";
    emit_conjecture_block(os, prefix, res.report);
  }
  if (opt.timings) os << "timing_search_ms = " << search_ms << "\n";
  return os.str();
}

std::string render_scan_report(int max_n, ZRange z_range,
                               const ReportOptions& opt,
                               long long* violations_out) {
  int workers = opt.workers;
  Clock::time_point t0 = Clock::now();
  ScanOutcome outcome = small_scan(max_n, z_range, workers);
  long long scan_ms = ms_since(t0);

  if (violations_out != nullptr) *violations_out = outcome.violations;

  std::ostringstream os;
  os << "tutte-forge-report v1\n";
  os << "command = scan\n";
  os << "max_n = " << max_n << "\n";
  os << "z_range = " << z_range.lo << " " << z_range.hi << "\n";
  os << "representations_checked = " << outcome.representations_checked
     << "\n";
  os << "distinct_censuses = " << outcome.distinct_censuses << "\n";
  os << "integer_coefficients_all = "
     << (outcome.all_integer_coefficients ? "true" : "false") << "\n";
  os << "violations = " << outcome.violations << "\n";
  for (size_t i = 0; i < outcome.violating.size(); ++i) {
    const ScanViolation& v = outcome.violating[i];
    std::string prefix = "violating " + std::to_string(i) + " ";
    os << prefix << "rank = " << v.rank << "\n";
    os << prefix << "elements = " << v.size << "\n";
    std::string rows;
    for (const std::string& row : v.reduced.to_strings()) {
      if (!rows.empty()) rows += ",";
      rows += row;
    }
    os << prefix << "reduced = " << rows << "\n";
    emit_conjecture_block(os, prefix, v.report);
  }
  os << "verdict = " << (outcome.violations == 0 ? "holds" : "counterexample")
     << "\n";
  if (opt.timings) os << "timing_scan_ms = " << scan_ms << "\n";
  return os.str();
}

}  // namespace tutteforge
