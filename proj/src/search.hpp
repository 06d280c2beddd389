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

#ifndef TUTTEFORGE_SEARCH_HPP_
#define TUTTEFORGE_SEARCH_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lasvergnas.hpp"
#include "matroid.hpp"
#include "tutte.hpp"

namespace tutteforge {

// A minor given against the labels of the source matroid: contract every
// element of `contract`, delete every element of `remove`.
struct MinorSpec {
  std::vector<int> contract;
  std::vector<int> remove;

  friend auto operator<=>(const MinorSpec&, const MinorSpec&) = default;
};

struct SearchConfig {
  // Element-count window for the minors to visit, clamped to [0, n].
  int target_min = 0;
  int target_max = 1 << 30;
  std::optional<int> target_rank;
  ZRange z_range{-16, 16};
  // Per-minor census node budget; < 0 unlimited. Exhaustion is recorded for
  // the minor and the search continues.
  long long census_budget = -1;
  bool dedup = true;
  int workers = 1;
  uint64_t seed = 1;
  enum class Mode { kSampled, kExhaustive } mode = Mode::kSampled;
  // Number of draws in sampled mode.
  long long samples = 10000;
};

// One violating minor. Replaying (contract, remove) on the source reproduces
// the reported quotient bit-exactly.
struct SearchResult {
  MinorSpec spec;
  int rank = 0;
  int size = 0;
  uint64_t fingerprint = 0;
  ConjectureReport report;
};

struct SearchOutcome {
  std::vector<SearchResult> results;  // deduplicated, (|C|, C, D) order
  long long minors_checked = 0;
  long long violating_minors = 0;  // before deduplication
  long long budget_exhausted = 0;
  std::vector<MinorSpec> budget_exhausted_specs;
};

// Visits minors with the target element count. Contract sets are restricted
// to independent sets: contracting a dependent set equals contracting a
// maximal independent subset of it and deleting the rest, so nothing is
// missed. Exhaustive mode walks every normalized (C, D) pair in
// (|C|, C, D) lexicographic order and is guarded at n <= 12; sampled mode
// draws `samples` pairs from the seeded generator. The visitor returns false
// to stop early.
void enumerate_minors(
    const BinaryMatroid& source, const SearchConfig& cfg,
    const std::function<bool(const MinorSpec&, const BinaryMatroid&)>& visit);

// Runs the conjecture check on every enumerated minor and reports the
// violating ones. With dedup on, repeats of an already-seen rank-nullity
// census are suppressed; census-equal minors have equal Tutte polynomials
// and hence equal verdicts, so this never changes what holds or violates.
SearchOutcome search_counterexamples(const BinaryMatroid& source,
                                     const SearchConfig& cfg);

struct ScanViolation {
  int rank = 0;
  int size = 0;
  GF2Matrix reduced;
  ConjectureReport report;
};

struct ScanOutcome {
  long long representations_checked = 0;
  long long distinct_censuses = 0;
  long long violations = 0;
  bool all_integer_coefficients = true;
  std::vector<ScanViolation> violating;  // at most 32 kept
};

// Enumerates every reduced representation D (all r x (n-r) bit patterns,
// all r, all n <= max_n), deduplicates by census, and checks the conjecture
// on each distinct census. Guarded at max_n <= 10.
ScanOutcome small_scan(int max_n, ZRange z_range, int workers = 1);

}  // namespace tutteforge

#endif  // TUTTEFORGE_SEARCH_HPP_
