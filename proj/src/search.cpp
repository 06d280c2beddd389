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

#include "search.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <thread>
#include <unordered_set>
#include <utility>

#include "errors.hpp"

namespace tutteforge {

namespace {

void check_config(const BinaryMatroid& source, const SearchConfig& cfg) {
  if (cfg.target_min > cfg.target_max) {
    throw UsageError("empty target size range");
  }
  if (cfg.target_min > source.size()) {
    throw UsageError("target size exceeds the source ground set");
  }
  if (cfg.mode == SearchConfig::Mode::kExhaustive && source.size() > 12) {
    throw SizeGuardError(
        "exhaustive minor enumeration is limited to 12-element sources; "
        "use sampled mode");
  }
  if (cfg.mode == SearchConfig::Mode::kSampled && cfg.samples < 1) {
    throw UsageError("sample count must be positive");
  }
}

// Uniform integer in [0, bound) from raw 64-bit draws, by rejection; keeps
// sampled runs reproducible independent of the standard library.
uint64_t rand_below(std::mt19937_64& rng, uint64_t bound) {
  uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

// Draws a uniform k-subset of items via a partial Fisher-Yates shuffle.
std::vector<int> sample_subset(std::mt19937_64& rng, std::vector<int> items,
                               int k) {
  std::vector<int> out;
  out.reserve(k);
  for (int i = 0; i < k; ++i) {
    size_t j = i + rand_below(rng, items.size() - i);
    std::swap(items[i], items[j]);
    out.push_back(items[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct ExhaustiveWalk {
  const BinaryMatroid& source;
  const SearchConfig& cfg;
  const std::function<bool(const MinorSpec&, const BinaryMatroid&)>& visit;
  int n;
  std::vector<int> contract;

  bool emit_with_deletions(const BinaryMatroid& contracted) {
    // Remaining elements, in label order, from which D is chosen.
    std::vector<int> rest = contracted.labels();
    int lo = std::max(cfg.target_min, 0);
    int hi = std::min(cfg.target_max, static_cast<int>(rest.size()));
    for (int target = hi; target >= lo; --target) {
      int dsize = static_cast<int>(rest.size()) - target;
      std::vector<int> d;
      if (!emit_deletion_sets(contracted, rest, dsize, 0, d)) return false;
    }
    return true;
  }

  bool emit_deletion_sets(const BinaryMatroid& contracted,
                          const std::vector<int>& rest, int dsize, int from,
                          std::vector<int>& d) {
    if (static_cast<int>(d.size()) == dsize) {
      BinaryMatroid minor = contracted;
      for (int e : d) minor = minor.deleted(e);
      if (cfg.target_rank && minor.rank() != *cfg.target_rank) return true;
      return visit(MinorSpec{contract, d}, minor);
    }
    for (int i = from; i < static_cast<int>(rest.size()); ++i) {
      d.push_back(rest[i]);
      if (!emit_deletion_sets(contracted, rest, dsize, i + 1, d)) return false;
      d.pop_back();
    }
    return true;
  }

  // Extends the independent contract set; elements in label order.
  bool grow(const BinaryMatroid& contracted, int from) {
    if (!emit_with_deletions(contracted)) return false;
    if (static_cast<int>(contract.size()) == source.rank()) return true;
    const std::vector<int>& labels = contracted.labels();
    for (int i = from; i < static_cast<int>(labels.size()); ++i) {
      int e = labels[i];
      if (contracted.is_loop(e)) continue;  // loops contract as deletions
      // Position of the next candidate in the child's label list: one less
      // than here because e is removed.
      contract.push_back(e);
      if (!grow(contracted.contracted(e), i)) return false;
      contract.pop_back();
    }
    return true;
  }
};

}  // namespace

void enumerate_minors(
    const BinaryMatroid& source, const SearchConfig& cfg,
    const std::function<bool(const MinorSpec&, const BinaryMatroid&)>& visit) {
  check_config(source, cfg);
  int n = source.size();

  if (cfg.mode == SearchConfig::Mode::kExhaustive) {
    ExhaustiveWalk walk{source, cfg, visit, n, {}};
    walk.grow(source, 0);
    return;
  }

  std::mt19937_64 rng(cfg.seed);
  int lo = std::max(cfg.target_min, 0);
  int hi = std::min(cfg.target_max, n);
  if (lo > hi) return;

  for (long long s = 0; s < cfg.samples; ++s) {
    int target = lo + static_cast<int>(rand_below(rng, hi - lo + 1));
    int removals = n - target;
    int cmax = std::min(source.rank(), removals);
    int csize = static_cast<int>(rand_below(rng, cmax + 1));

    // Draw candidate contract sets until one is independent. A fresh size is
    // drawn on failure so sources with few independent sets of a given size
    // cannot stall the loop.
    std::vector<int> contract;
    for (int attempt = 0;; ++attempt) {
      contract = sample_subset(rng, source.labels(), csize);
      if (source.rank_of_subset(contract) ==
          static_cast<int>(contract.size())) {
        break;
      }
      if (attempt >= 16) {
        csize = static_cast<int>(rand_below(rng, cmax + 1));
        attempt = 0;
      }
    }

    std::vector<int> rest;
    for (int e : source.labels()) {
      if (std::find(contract.begin(), contract.end(), e) == contract.end()) {
        rest.push_back(e);
      }
    }
    std::vector<int> remove = sample_subset(rng, rest, removals - csize);

    BinaryMatroid minor = source.minor(contract, remove);
    if (cfg.target_rank && minor.rank() != *cfg.target_rank) continue;
    if (!visit(MinorSpec{std::move(contract), std::move(remove)}, minor)) {
      return;
    }
  }
}

SearchOutcome search_counterexamples(const BinaryMatroid& source,
                                     const SearchConfig& cfg) {
  check_config(source, cfg);

  // Specs are generated sequentially, analyzed in parallel, and reduced in
  // generation order, so the outcome does not depend on the worker count.
  std::vector<MinorSpec> specs;
  std::vector<BinaryMatroid> minors;
  enumerate_minors(source, cfg,
                   [&](const MinorSpec& spec, const BinaryMatroid& m) {
                     specs.push_back(spec);
                     minors.push_back(m);
                     return true;
                   });

  struct Analysis {
    bool budget_out = false;
    bool violating = false;
    std::string census_key;
    uint64_t fingerprint = 0;
    int rank = 0, size = 0;
    ConjectureReport report;
  };
  std::vector<Analysis> analyses(specs.size());

  CensusOptions copt;
  copt.workers = 1;
  copt.node_budget = cfg.census_budget;

  auto analyze = [&](size_t i) {
    Analysis& a = analyses[i];
    a.rank = minors[i].rank();
    a.size = minors[i].size();
    try {
      RankNullityCensus c = census(minors[i], copt);
      a.census_key = c.key();
      a.fingerprint = c.fingerprint();
      a.report = check_conjecture_with_census(c, cfg.z_range);
      a.violating = !a.report.holds();
    } catch (const BudgetExhaustedError&) {
      a.budget_out = true;
    }
  };

  int workers = cfg.workers >= 1 ? cfg.workers : 1;
  if (workers == 1 || specs.size() < 2) {
    for (size_t i = 0; i < specs.size(); ++i) analyze(i);
  } else {
    std::atomic<size_t> next{0};
    auto work = [&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= specs.size()) break;
        analyze(i);
      }
    };
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work);
    for (auto& th : threads) th.join();
  }

  SearchOutcome out;
  out.minors_checked = static_cast<long long>(specs.size());
  std::unordered_set<std::string> seen;
  for (size_t i = 0; i < specs.size(); ++i) {
    const Analysis& a = analyses[i];
    if (a.budget_out) {
      ++out.budget_exhausted;
      if (out.budget_exhausted_specs.size() < 32) {
        out.budget_exhausted_specs.push_back(specs[i]);
      }
      continue;
    }
    if (!a.violating) continue;
    ++out.violating_minors;
    if (cfg.dedup && !seen.insert(a.census_key).second) continue;
    out.results.push_back(SearchResult{specs[i], a.rank, a.size, a.fingerprint,
                                       analyses[i].report});
  }

  std::sort(out.results.begin(), out.results.end(),
            [](const SearchResult& x, const SearchResult& y) {
              return std::make_tuple(x.spec.contract.size(), x.spec.contract,
                                     x.spec.remove) <
                     std::make_tuple(y.spec.contract.size(), y.spec.contract,
                                     y.spec.remove);
            });
  return out;
}

ScanOutcome small_scan(int max_n, ZRange z_range, int workers) {
  if (max_n < 0 || max_n > 10) {
    throw SizeGuardError("small_scan is limited to max_n <= 10");
  }

  // Collect distinct censuses first; the conjecture is then checked once per
  // distinct census. Violations keep the first representation that produced
  // their census.
  ScanOutcome out;
  std::unordered_set<std::string> seen;
  struct Distinct {
    RankNullityCensus census;
    int r, n;
    GF2Matrix reduced;
  };
  std::vector<Distinct> distinct;

  for (int n = 0; n <= max_n; ++n) {
    for (int r = 0; r <= n; ++r) {
      int bits = r * (n - r);
      uint64_t patterns = uint64_t{1} << bits;
      for (uint64_t pat = 0; pat < patterns; ++pat) {
        GF2Matrix d(r, n - r);
        for (int i = 0; i < r; ++i) {
          uint64_t row = (pat >> (i * (n - r)));
          d.set_row_word(i, row);
        }
        BinaryMatroid m = BinaryMatroid::from_reduced(d);
        RankNullityCensus c = census(m);
        ++out.representations_checked;
        if (seen.insert(c.key()).second) {
          distinct.push_back(Distinct{std::move(c), r, n, std::move(d)});
        }
      }
    }
  }
  out.distinct_censuses = static_cast<long long>(distinct.size());

  std::vector<ConjectureReport> reports(distinct.size());
  auto analyze = [&](size_t i) {
    reports[i] = check_conjecture_with_census(distinct[i].census, z_range);
  };
  if (workers <= 1 || distinct.size() < 2) {
    for (size_t i = 0; i < distinct.size(); ++i) analyze(i);
  } else {
    std::atomic<size_t> next{0};
    auto work = [&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= distinct.size()) break;
        analyze(i);
      }
    };
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work);
    for (auto& th : threads) th.join();
  }

  for (size_t i = 0; i < distinct.size(); ++i) {
    if (!reports[i].integer_coefficients) {
      out.all_integer_coefficients = false;
    }
    if (!reports[i].holds()) {
      ++out.violations;
      if (out.violating.size() < 32) {
        out.violating.push_back(ScanViolation{distinct[i].r, distinct[i].n,
                                              distinct[i].reduced,
                                              std::move(reports[i])});
      }
    }
  }
  return out;
}

}  // namespace tutteforge
