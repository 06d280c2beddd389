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

// Command-line front end. Links the C interface of libtutteforge only.
//
// Exit codes: 0 success; 1 usage or parse error; 2 size guard or budget
// exhausted; 3 internal verification failure; 4 exhaustive search finished
// with zero results.

#include <tutteforge/tutteforge.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitGuard = 2;
constexpr int kExitVerify = 3;
constexpr int kExitNoResults = 4;

int status_to_exit(tf_status s) {
  switch (s) {
    case TF_OK:
      return kExitOk;
    case TF_ERR_USAGE:
    case TF_ERR_PARSE:
    case TF_ERR_UNKNOWN_ELEMENT:
    case TF_ERR_DIMENSION:
      return kExitUsage;
    case TF_ERR_SIZE_GUARD:
    case TF_ERR_BUDGET:
      return kExitGuard;
    default:
      return kExitVerify;
  }
}

int fail(tf_status s) {
  std::fprintf(stderr, "tutte-forge: error: %s (%s)\n", tf_last_error(),
               tf_status_name(s));
  return status_to_exit(s);
}

// Fixture names win; anything else is read as a matrix file path.
int resolve_input(const std::string& input, tf_matroid** out) {
  tf_status s = tf_matroid_from_fixture(input.c_str(), 0, out);
  if (s == TF_OK) return kExitOk;
  if (s != TF_ERR_USAGE) return fail(s);
  s = tf_matroid_from_file(input.c_str(), out);
  if (s == TF_OK) return kExitOk;
  return fail(s);
}

struct MatroidHandle {
  tf_matroid* m = nullptr;
  ~MatroidHandle() { tf_matroid_free(m); }
};

struct TextHandle {
  char* text = nullptr;
  ~TextHandle() { tf_free_text(text); }
};

void zrange_into(const std::vector<long long>& z, int64_t* lo, int64_t* hi) {
  if (z.size() == 2) {
    *lo = z[0];
    *hi = z[1];
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Tutte polynomials and odd-integer quotient checks for "
               "binary matroids"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("tutte-forge ") + tf_version());

  std::string input;
  std::string format = "report";
  std::vector<std::string> eval_xy;
  std::vector<long long> z_range;
  int workers = 0;
  bool verify_delcon = false;
  bool dump_matrix = false;
  bool timings = false;

  CLI::App* tutte = app.add_subcommand(
      "tutte", "rank-nullity census and Tutte polynomial coefficients");
  tutte->add_option("input", input, "fixture name or matrix file")->required();
  tutte->add_option("--eval", eval_xy,
                    "evaluate at x y (exact rationals like -1 or 3/2)")
      ->expected(2);
  tutte->add_flag("--verify-delcon", verify_delcon,
                  "cross-check against deletion-contraction (n <= 18)");
  tutte->add_option("--format", format, "report|plain")
      ->check(CLI::IsMember({"report", "plain"}));
  tutte->add_flag("--dump-matrix", dump_matrix,
                  "print the representation in matrix-file form and exit");
  tutte->add_option("--workers", workers, "census worker threads");
  tutte->add_flag("--timings", timings, "append wall-clock lines");

  CLI::App* lv = app.add_subcommand(
      "lv", "bicycle dimension, quotient Q(z), and conjecture verdict");
  lv->add_option("input", input, "fixture name or matrix file")->required();
  lv->add_option("--z-range", z_range, "scan window, two integers a b")
      ->expected(2);
  lv->add_option("--format", format, "report|plain")
      ->check(CLI::IsMember({"report", "plain"}));
  lv->add_option("--workers", workers, "census worker threads");
  lv->add_flag("--timings", timings, "append wall-clock lines");

  std::vector<int> target_size;
  int target_rank = -1;
  std::string mode = "sampled";
  uint64_t seed = 1;
  long long samples = 10000;
  long long census_budget = 0;
  bool no_dedup = false;

  CLI::App* search = app.add_subcommand(
      "search", "hunt for counterexample minors of a source matroid");
  search->add_option("source", input, "fixture name or matrix file")
      ->required();
  search->add_option("--target-size", target_size,
                     "minor element count, one value or min max")
      ->expected(1, 2);
  search->add_option("--target-rank", target_rank, "restrict minor rank");
  search->add_option("--mode", mode, "sampled|exhaustive")
      ->check(CLI::IsMember({"sampled", "exhaustive"}));
  search->add_option("--seed", seed, "sampling seed");
  search->add_option("--samples", samples, "draws in sampled mode");
  search->add_option("--census-budget", census_budget,
                     "per-minor census node budget");
  search->add_flag("--no-dedup", no_dedup, "report census-equal repeats");
  search->add_option("--workers", workers, "analysis worker threads");
  search->add_option("--z-range", z_range, "scan window, two integers a b")
      ->expected(2);

  int max_n = 8;
  CLI::App* scan = app.add_subcommand(
      "scan", "check every reduced representation up to max-n elements");
  scan->add_option("--max-n", max_n, "largest ground set (at most 10)");
  scan->add_option("--z-range", z_range, "scan window, two integers a b")
      ->expected(2);
  scan->add_option("--workers", workers, "analysis worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (!z_range.empty() && z_range[0] > z_range[1]) {
    std::fprintf(stderr, "tutte-forge: error: empty z range %lld > %lld\n",
                 static_cast<long long>(z_range[0]),
                 static_cast<long long>(z_range[1]));
    return kExitUsage;
  }

  if (tutte->parsed() || lv->parsed()) {
    MatroidHandle h;
    if (int code = resolve_input(input, &h.m)) return code;

    if (dump_matrix) {
      TextHandle text;
      tf_status s = tf_matroid_dump(h.m, &text.text);
      if (s != TF_OK) return fail(s);
      std::fputs(text.text, stdout);
      return kExitOk;
    }

    tf_report_options opt;
    tf_report_options_init(&opt);
    opt.workers = workers;
    opt.plain = format == "plain" ? 1 : 0;
    opt.timings = timings ? 1 : 0;
    opt.verify_delcon = verify_delcon ? 1 : 0;
    if (!eval_xy.empty()) {
      opt.eval_x = eval_xy[0].c_str();
      opt.eval_y = eval_xy[1].c_str();
    }
    zrange_into(z_range, &opt.z_min, &opt.z_max);

    TextHandle doc;
    tf_status s = tutte->parsed()
                      ? tf_report_tutte(h.m, input.c_str(), &opt, &doc.text)
                      : tf_report_lv(h.m, input.c_str(), &opt, &doc.text,
                                     nullptr);
    if (s != TF_OK) return fail(s);
    std::fputs(doc.text, stdout);
    return kExitOk;
  }

  if (search->parsed()) {
    MatroidHandle h;
    if (int code = resolve_input(input, &h.m)) return code;

    tf_search_options opt;
    tf_search_options_init(&opt);
    if (target_size.size() >= 1) opt.target_min = target_size[0];
    if (target_size.size() == 2) opt.target_max = target_size[1];
    opt.target_rank = target_rank;
    opt.mode = mode == "exhaustive" ? 1 : 0;
    opt.seed = seed;
    opt.samples = samples;
    opt.census_budget = census_budget;
    opt.dedup = no_dedup ? 0 : 1;
    opt.workers = workers;
    zrange_into(z_range, &opt.z_min, &opt.z_max);

    TextHandle doc;
    int64_t results = 0;
    tf_status s =
        tf_report_search(h.m, input.c_str(), &opt, &doc.text, &results);
    if (s != TF_OK) return fail(s);
    std::fputs(doc.text, stdout);
    if (opt.mode == 1 && results == 0) return kExitNoResults;
    return kExitOk;
  }

  // scan
  int64_t z_lo = -16, z_hi = 16;
  zrange_into(z_range, &z_lo, &z_hi);
  TextHandle doc;
  tf_status s =
      tf_report_scan(max_n, z_lo, z_hi, workers, &doc.text, nullptr);
  if (s != TF_OK) return fail(s);
  std::fputs(doc.text, stdout);
  return kExitOk;
}
