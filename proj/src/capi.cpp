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

#include "tutteforge/tutteforge.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "catalog.hpp"
#include "errors.hpp"
#include "lasvergnas.hpp"
#include "matrix_io.hpp"
#include "matroid.hpp"
#include "report.hpp"
#include "search.hpp"

using namespace tutteforge;

struct tf_matroid {
  BinaryMatroid value;
};

namespace {

thread_local std::string tl_error;

void set_error(const std::string& msg) { tl_error = msg; }

char* dup_text(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn, translating typed C++ failures into status codes and recording
// the message for tf_last_error.
template <typename Fn>
tf_status guarded(Fn&& fn) {
  try {
    fn();
    tl_error.clear();
    return TF_OK;
  } catch (const ParseError& e) {
    set_error(e.what());
    return TF_ERR_PARSE;
  } catch (const UnknownElementError& e) {
    set_error(e.what());
    return TF_ERR_UNKNOWN_ELEMENT;
  } catch (const DimensionMismatchError& e) {
    set_error(e.what());
    return TF_ERR_DIMENSION;
  } catch (const SizeGuardError& e) {
    set_error(e.what());
    return TF_ERR_SIZE_GUARD;
  } catch (const BudgetExhaustedError& e) {
    set_error(e.what());
    return TF_ERR_BUDGET;
  } catch (const VerificationError& e) {
    set_error(e.what());
    return TF_ERR_VERIFY;
  } catch (const UsageError& e) {
    set_error(e.what());
    return TF_ERR_USAGE;
  } catch (const std::exception& e) {
    set_error(e.what());
    return TF_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown failure");
    return TF_ERR_INTERNAL;
  }
}

tf_status require(bool ok, const char* msg) {
  if (ok) return TF_OK;
  set_error(msg);
  return TF_ERR_USAGE;
}

ReportOptions to_report_options(const tf_report_options* opt) {
  ReportOptions out;
  if (opt == nullptr) return out;
  out.workers = opt->workers;
  out.plain = opt->plain != 0;
  out.timings = opt->timings != 0;
  out.verify_delcon = opt->verify_delcon != 0;
  if ((opt->eval_x == nullptr) != (opt->eval_y == nullptr)) {
    throw UsageError("eval needs both coordinates");
  }
  if (opt->eval_x != nullptr) {
    out.eval = {parse_rational(opt->eval_x), parse_rational(opt->eval_y)};
  }
  if (opt->z_min <= opt->z_max) out.z_range = ZRange{opt->z_min, opt->z_max};
  return out;
}

}  // namespace

extern "C" {

const char* tf_version(void) { return "0.1.0"; }

const char* tf_status_name(int status) {
  switch (status) {
    case TF_OK:
      return "ok";
    case TF_ERR_USAGE:
      return "usage-error";
    case TF_ERR_PARSE:
      return "parse-error";
    case TF_ERR_UNKNOWN_ELEMENT:
      return "unknown-element";
    case TF_ERR_DIMENSION:
      return "dimension-mismatch";
    case TF_ERR_SIZE_GUARD:
      return "size-guard";
    case TF_ERR_BUDGET:
      return "budget-exhausted";
    case TF_ERR_VERIFY:
      return "verification-failed";
    case TF_ERR_INTERNAL:
      return "internal-error";
  }
  return "unknown-status";
}

const char* tf_last_error(void) { return tl_error.c_str(); }

tf_status tf_matroid_from_fixture(const char* name, int self_test,
                                  tf_matroid** out) {
  if (tf_status s = require(name != nullptr && out != nullptr,
                            "null argument to tf_matroid_from_fixture"))
    return s;
  *out = nullptr;
  return guarded([&] {
    std::optional<BinaryMatroid> m = fixture(name, self_test != 0);
    if (!m) throw UsageError("unknown fixture '" + std::string(name) + "'");
    *out = new tf_matroid{std::move(*m)};
  });
}

tf_status tf_matroid_from_text(const char* text, tf_matroid** out) {
  if (tf_status s = require(text != nullptr && out != nullptr,
                            "null argument to tf_matroid_from_text"))
    return s;
  *out = nullptr;
  return guarded([&] { *out = new tf_matroid{parse_matrix_text(text)}; });
}

tf_status tf_matroid_from_file(const char* path, tf_matroid** out) {
  if (tf_status s = require(path != nullptr && out != nullptr,
                            "null argument to tf_matroid_from_file"))
    return s;
  *out = nullptr;
  return guarded([&] { *out = new tf_matroid{load_matrix_file(path)}; });
}

void tf_matroid_free(tf_matroid* m) { delete m; }

int tf_matroid_rank(const tf_matroid* m) {
  return m == nullptr ? -1 : m->value.rank();
}

int tf_matroid_size(const tf_matroid* m) {
  return m == nullptr ? -1 : m->value.size();
}

tf_status tf_matroid_dual(const tf_matroid* m, tf_matroid** out) {
  if (tf_status s = require(m != nullptr && out != nullptr,
                            "null argument to tf_matroid_dual"))
    return s;
  *out = nullptr;
  return guarded([&] { *out = new tf_matroid{m->value.dual()}; });
}

tf_status tf_matroid_minor(const tf_matroid* m, const int* contract,
                           int n_contract, const int* del, int n_delete,
                           tf_matroid** out) {
  if (tf_status s = require(m != nullptr && out != nullptr &&
                                (contract != nullptr || n_contract == 0) &&
                                (del != nullptr || n_delete == 0) &&
                                n_contract >= 0 && n_delete >= 0,
                            "bad argument to tf_matroid_minor"))
    return s;
  *out = nullptr;
  return guarded([&] {
    *out = new tf_matroid{
        m->value.minor(std::span<const int>(contract, n_contract),
                       std::span<const int>(del, n_delete))};
  });
}

tf_status tf_matroid_is_isomorphic(const tf_matroid* a, const tf_matroid* b,
                                   int64_t node_budget, int* out) {
  if (tf_status s = require(a != nullptr && b != nullptr && out != nullptr,
                            "null argument to tf_matroid_is_isomorphic"))
    return s;
  return guarded([&] {
    long long budget = node_budget > 0 ? node_budget : kDefaultIsoNodeBudget;
    *out = is_isomorphic(a->value, b->value, budget) ? 1 : 0;
  });
}

int tf_matroid_is_identically_self_dual(const tf_matroid* m) {
  if (m == nullptr) return -1;
  return m->value.is_identically_self_dual() ? 1 : 0;
}

tf_status tf_matroid_dump(const tf_matroid* m, char** out_text) {
  if (tf_status s = require(m != nullptr && out_text != nullptr,
                            "null argument to tf_matroid_dump"))
    return s;
  *out_text = nullptr;
  return guarded([&] {
    std::string text = write_matrix_text(m->value);
    *out_text = dup_text(text);
    if (*out_text == nullptr) throw std::bad_alloc();
  });
}

void tf_report_options_init(tf_report_options* opt) {
  if (opt == nullptr) return;
  opt->workers = 0;
  opt->plain = 0;
  opt->timings = 0;
  opt->verify_delcon = 0;
  opt->eval_x = nullptr;
  opt->eval_y = nullptr;
  opt->z_min = -16;
  opt->z_max = 16;
}

tf_status tf_report_tutte(const tf_matroid* m, const char* input_id,
                          const tf_report_options* opt, char** out_doc) {
  if (tf_status s = require(m != nullptr && out_doc != nullptr,
                            "null argument to tf_report_tutte"))
    return s;
  *out_doc = nullptr;
  return guarded([&] {
    std::string id = input_id != nullptr ? input_id : "matrix";
    std::string doc = render_tutte_report(id, m->value, to_report_options(opt));
    *out_doc = dup_text(doc);
    if (*out_doc == nullptr) throw std::bad_alloc();
  });
}

tf_status tf_report_lv(const tf_matroid* m, const char* input_id,
                       const tf_report_options* opt, char** out_doc,
                       int64_t* out_violations) {
  if (tf_status s = require(m != nullptr && out_doc != nullptr,
                            "null argument to tf_report_lv"))
    return s;
  *out_doc = nullptr;
  return guarded([&] {
    std::string id = input_id != nullptr ? input_id : "matrix";
    long long violations = 0;
    std::string doc =
        render_lv_report(id, m->value, to_report_options(opt), &violations);
    if (out_violations != nullptr) *out_violations = violations;
    *out_doc = dup_text(doc);
    if (*out_doc == nullptr) throw std::bad_alloc();
  });
}

void tf_search_options_init(tf_search_options* opt) {
  if (opt == nullptr) return;
  opt->target_min = -1;
  opt->target_max = -1;
  opt->target_rank = -1;
  opt->mode = 0;
  opt->seed = 1;
  opt->samples = 10000;
  opt->census_budget = 0;
  opt->dedup = 1;
  opt->workers = 0;
  opt->z_min = -16;
  opt->z_max = 16;
}

tf_status tf_report_search(const tf_matroid* source, const char* source_id,
                           const tf_search_options* opt, char** out_doc,
                           int64_t* out_results) {
  if (tf_status s = require(source != nullptr && out_doc != nullptr,
                            "null argument to tf_report_search"))
    return s;
  *out_doc = nullptr;
  return guarded([&] {
    SearchConfig cfg;
    ReportOptions ropt;
    if (opt != nullptr) {
      if (opt->target_min >= 0) cfg.target_min = opt->target_min;
      cfg.target_max =
          opt->target_max >= 0 ? opt->target_max : source->value.size();
      if (opt->target_max < 0 && opt->target_min >= 0) {
        cfg.target_max = cfg.target_min;  // single --target-size k
      }
      if (opt->target_rank >= 0) cfg.target_rank = opt->target_rank;
      cfg.mode = opt->mode == 1 ? SearchConfig::Mode::kExhaustive
                                : SearchConfig::Mode::kSampled;
      cfg.seed = opt->seed;
      if (opt->samples > 0) cfg.samples = opt->samples;
      cfg.census_budget = opt->census_budget > 0 ? opt->census_budget : -1;
      cfg.dedup = opt->dedup != 0;
      cfg.workers = opt->workers;
      if (opt->z_min <= opt->z_max) cfg.z_range = ZRange{opt->z_min, opt->z_max};
    } else {
      cfg.target_max = source->value.size();
    }
    if (cfg.workers <= 0) {
      const char* env = std::getenv("TUTTE_FORGE_WORKERS");
      cfg.workers = env != nullptr && std::atoi(env) >= 1 ? std::atoi(env) : 1;
    }
    std::string id = source_id != nullptr ? source_id : "matrix";
    long long results = 0;
    std::string doc =
        render_search_report(id, source->value, cfg, ropt, &results);
    if (out_results != nullptr) *out_results = results;
    *out_doc = dup_text(doc);
    if (*out_doc == nullptr) throw std::bad_alloc();
  });
}

tf_status tf_report_scan(int max_n, int64_t z_min, int64_t z_max, int workers,
                         char** out_doc, int64_t* out_violations) {
  if (tf_status s =
          require(out_doc != nullptr, "null argument to tf_report_scan"))
    return s;
  *out_doc = nullptr;
  return guarded([&] {
    ZRange range;
    if (z_min <= z_max) range = ZRange{z_min, z_max};
    ReportOptions ropt;
    ropt.workers = workers;
    if (ropt.workers <= 0) {
      const char* env = std::getenv("TUTTE_FORGE_WORKERS");
      ropt.workers = env != nullptr && std::atoi(env) >= 1 ? std::atoi(env) : 1;
    }
    long long violations = 0;
    std::string doc = render_scan_report(max_n, range, ropt, &violations);
    if (out_violations != nullptr) *out_violations = violations;
    *out_doc = dup_text(doc);
    if (*out_doc == nullptr) throw std::bad_alloc();
  });
}

void tf_free_text(char* text) { std::free(text); }

}  // extern "C"
