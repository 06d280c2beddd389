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

#include <random>
#include <set>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "errors.hpp"
#include "search.hpp"
#include "test_util.hpp"
#include "tutte.hpp"

using namespace tutteforge;
using tutteforge::testing::random_matroid;

namespace {

std::set<std::string> census_keys_of_minors(const BinaryMatroid& m,
                                            const SearchConfig& cfg) {
  std::set<std::string> keys;
  enumerate_minors(m, cfg, [&](const MinorSpec&, const BinaryMatroid& minor) {
    keys.insert(census(minor).key());
    return true;
  });
  return keys;
}

SearchConfig exhaustive_all() {
  SearchConfig cfg;
  cfg.mode = SearchConfig::Mode::kExhaustive;
  return cfg;
}

}  // namespace

TEST_CASE("two-element minors of a 3-circuit") {
  SearchConfig cfg = exhaustive_all();
  cfg.target_min = cfg.target_max = 2;
  std::set<std::string> keys =
      census_keys_of_minors(elementary("circuit3"), cfg);

  // Deleting one element frees the other two; contracting one leaves a
  // parallel pair (the 2-circuit).
  BinaryMatroid free2 = BinaryMatroid::from_full(GF2Matrix::identity(2));
  BinaryMatroid circuit2 =
      BinaryMatroid::from_full(GF2Matrix::from_strings({"11"}));
  CHECK(keys == std::set<std::string>{census(free2).key(),
                                      census(circuit2).key()});
}

TEST_CASE("the identity minor is the matroid itself") {
  BinaryMatroid k4 = graphic_complete(4);
  SearchConfig cfg = exhaustive_all();
  cfg.target_min = cfg.target_max = k4.size();
  int count = 0;
  enumerate_minors(k4, cfg, [&](const MinorSpec& spec, const BinaryMatroid& m) {
    CHECK(spec.contract.empty());
    CHECK(spec.remove.empty());
    CHECK(m == k4);
    ++count;
    return true;
  });
  CHECK(count == 1);
}

TEST_CASE("normalized enumeration loses no census class") {
  std::mt19937_64 rng(211);
  for (int trial = 0; trial < 8; ++trial) {
    BinaryMatroid m = random_matroid(rng, 7);
    int n = m.size();

    SearchConfig cfg = exhaustive_all();
    std::set<std::string> normalized = census_keys_of_minors(m, cfg);

    // Unnormalized brute force: every assignment of elements into
    // keep / contract / delete, dependent contract sets included.
    std::set<std::string> all;
    std::vector<int> labels = m.labels();
    long long assignments = 1;
    for (int i = 0; i < n; ++i) assignments *= 3;
    for (long long code = 0; code < assignments; ++code) {
      long long c = code;
      std::vector<int> contract, remove;
      for (int i = 0; i < n; ++i) {
        switch (c % 3) {
          case 1: contract.push_back(labels[i]); break;
          case 2: remove.push_back(labels[i]); break;
          default: break;
        }
        c /= 3;
      }
      all.insert(census(m.minor(contract, remove)).key());
    }
    CHECK(normalized == all);
  }
}

TEST_CASE("small sources hold everywhere") {
  SearchConfig cfg = exhaustive_all();
  SearchOutcome out = search_counterexamples(elementary("circuit5"), cfg);
  CHECK(out.results.empty());
  CHECK(out.violating_minors == 0);
  CHECK(out.minors_checked > 1);
}

TEST_CASE("the 18-element fixture reports itself") {
  BinaryMatroid n = minor_n();
  SearchConfig cfg;  // sampled is the default mode
  cfg.target_min = cfg.target_max = 18;
  cfg.samples = 5;
  cfg.z_range = ZRange{-8, 8};
  SearchOutcome out = search_counterexamples(n, cfg);
  REQUIRE(out.results.size() == 1);
  CHECK(out.results[0].spec.contract.empty());
  CHECK(out.results[0].spec.remove.empty());
  CHECK(out.results[0].rank == 6);
  CHECK_FALSE(out.results[0].report.holds());
}

TEST_CASE("exhaustive mode is guarded on large sources") {
  SearchConfig cfg = exhaustive_all();
  CHECK_THROWS_AS(search_counterexamples(minor_n(), cfg), SizeGuardError);
}

TEST_CASE("census budget exhaustion is recorded per minor") {
  BinaryMatroid n = minor_n();
  SearchConfig cfg;
  cfg.target_min = cfg.target_max = 18;
  cfg.samples = 3;
  cfg.census_budget = 100;  // far below the 2^19 - 1 a full census needs
  SearchOutcome out = search_counterexamples(n, cfg);
  CHECK(out.results.empty());
  CHECK(out.budget_exhausted == 3);
  CHECK(out.budget_exhausted_specs.size() == 3);
}

TEST_CASE("replay determinism") {
  BinaryMatroid n = minor_n();
  SearchConfig cfg;
  cfg.target_min = 14;
  cfg.target_max = 16;
  cfg.samples = 60;
  cfg.seed = 5;
  cfg.z_range = ZRange{-6, 6};
  SearchOutcome out = search_counterexamples(n, cfg);
  for (const SearchResult& res : out.results) {
    BinaryMatroid minor = n.minor(res.spec.contract, res.spec.remove);
    RankNullityCensus c = census(minor);
    CHECK(c.fingerprint() == res.fingerprint);
    ConjectureReport replay =
        check_conjecture_with_census(c, cfg.z_range);
    CHECK(replay.violations.size() == res.report.violations.size());
    for (size_t i = 0; i < replay.violations.size(); ++i) {
      CHECK(replay.violations[i].first == res.report.violations[i].first);
      CHECK(replay.violations[i].second.value ==
            res.report.violations[i].second.value);
    }
    CHECK(replay.q.poly == res.report.q.poly);
  }
}

TEST_CASE("worker count does not change the outcome") {
  BinaryMatroid n = minor_n();
  SearchConfig cfg;
  cfg.target_min = 15;
  cfg.target_max = 17;
  cfg.samples = 40;
  cfg.seed = 9;
  SearchOutcome base = search_counterexamples(n, cfg);
  for (int workers : {2, 5}) {
    SearchConfig parallel = cfg;
    parallel.workers = workers;
    SearchOutcome out = search_counterexamples(n, parallel);
    REQUIRE(out.results.size() == base.results.size());
    CHECK(out.minors_checked == base.minors_checked);
    CHECK(out.violating_minors == base.violating_minors);
    for (size_t i = 0; i < out.results.size(); ++i) {
      CHECK(out.results[i].spec == base.results[i].spec);
      CHECK(out.results[i].fingerprint == base.results[i].fingerprint);
    }
  }
}

TEST_CASE("dedup only suppresses repeats") {
  BinaryMatroid n = minor_n();
  SearchConfig cfg;
  cfg.target_min = cfg.target_max = 17;
  cfg.samples = 30;
  cfg.seed = 2;
  cfg.z_range = ZRange{-4, 4};

  SearchConfig raw = cfg;
  SearchOutcome deduped = search_counterexamples(n, cfg);
  raw.dedup = false;
  SearchOutcome full = search_counterexamples(n, raw);
  CHECK(full.violating_minors == deduped.violating_minors);
  CHECK(full.results.size() == full.violating_minors);
  CHECK(deduped.results.size() <= full.results.size());

  std::set<uint64_t> fps;
  for (const SearchResult& r : full.results) fps.insert(r.fingerprint);
  CHECK(fps.size() == deduped.results.size());
}

TEST_CASE("violating golay minors still satisfy the z=1 theorem") {
  BinaryMatroid g = golay24();
  SearchConfig cfg;
  cfg.target_min = cfg.target_max = 18;
  cfg.samples = 40;
  cfg.seed = 3;
  cfg.z_range = ZRange{-8, 8};
  cfg.workers = 4;
  SearchOutcome out = search_counterexamples(g, cfg);
  CHECK(out.violating_minors > 0);
  for (const SearchResult& res : out.results) {
    CHECK(res.size == 18);
    CHECK(parity_at(res.report.q, 1).cls == ParityClass::kOddInteger);
    CHECK(parity_at(res.report.q, 0).cls == ParityClass::kOddInteger);
  }
}

TEST_CASE("contracting six elements reaches rank-6 minors of golay24") {
  BinaryMatroid g = golay24();
  SearchConfig cfg;
  cfg.target_min = cfg.target_max = 18;
  cfg.target_rank = 6;
  cfg.samples = 200;
  cfg.seed = 4;
  int seen = 0;
  enumerate_minors(g, cfg, [&](const MinorSpec& spec, const BinaryMatroid& m) {
    CHECK(m.rank() == 6);
    CHECK(m.size() == 18);
    CHECK(spec.contract.size() == 6);
    CHECK(spec.remove.empty());
    ++seen;
    return true;
  });
  CHECK(seen > 0);
}

TEST_CASE("small scan counts tiny matroids") {
  ScanOutcome out = small_scan(3, ZRange{-16, 16});
  // n=0: 1 rep; n=1: r=0,1 -> 2; n=2: 1+2+1 = 4; n=3: 1+4+4+1 = 10.
  CHECK(out.representations_checked == 17);
  CHECK(out.violations == 0);
  CHECK(out.all_integer_coefficients);

  // The distinct censuses include the named tiny matroids.
  std::set<std::string> keys;
  keys.insert(census(elementary("loop")).key());
  keys.insert(census(elementary("coloop")).key());
  keys.insert(census(elementary("loop+coloop")).key());
  keys.insert(
      census(BinaryMatroid::from_full(GF2Matrix::from_strings({"11"}))).key());
  keys.insert(census(elementary("circuit3")).key());
  CHECK(out.distinct_censuses >= static_cast<long long>(keys.size()));
}

TEST_CASE("small scan is clean through n = 6") {
  ScanOutcome out = small_scan(6, ZRange{-16, 16}, /*workers=*/2);
  CHECK(out.violations == 0);
  CHECK(out.all_integer_coefficients);
  CHECK(out.representations_checked > 1000);
}

TEST_CASE("scan size guard") {
  CHECK_THROWS_AS(small_scan(11, ZRange{-4, 4}), SizeGuardError);
}
