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

#include <tutteforge/tutteforge.h>

#include <cstring>
#include <string>

extern "C" int tf_smoke_from_c(void);

namespace {

struct Handle {
  tf_matroid* m = nullptr;
  ~Handle() { tf_matroid_free(m); }
};

struct Text {
  char* s = nullptr;
  ~Text() { tf_free_text(s); }
};

bool contains(const char* haystack, const char* needle) {
  return haystack != nullptr && std::strstr(haystack, needle) != nullptr;
}

}  // namespace

TEST_CASE("header is usable from plain C") { CHECK(tf_smoke_from_c() == 0); }

TEST_CASE("fixture construction and queries") {
  Handle n;
  REQUIRE(tf_matroid_from_fixture("paper-n", 1, &n.m) == TF_OK);
  CHECK(tf_matroid_rank(n.m) == 6);
  CHECK(tf_matroid_size(n.m) == 18);
  CHECK(tf_matroid_is_identically_self_dual(n.m) == 0);

  Handle dual;
  REQUIRE(tf_matroid_dual(n.m, &dual.m) == TF_OK);
  CHECK(tf_matroid_rank(dual.m) == 12);
}

TEST_CASE("unknown fixture reports usage error") {
  tf_matroid* m = nullptr;
  CHECK(tf_matroid_from_fixture("banana", 0, &m) == TF_ERR_USAGE);
  CHECK(m == nullptr);
  CHECK(contains(tf_last_error(), "banana"));
}

TEST_CASE("matrix text parsing and dump round-trip") {
  Handle a;
  REQUIRE(tf_matroid_from_text("2 4 reduced\n11\n01\n", &a.m) == TF_OK);
  CHECK(tf_matroid_rank(a.m) == 2);
  CHECK(tf_matroid_size(a.m) == 4);

  Text dump;
  REQUIRE(tf_matroid_dump(a.m, &dump.s) == TF_OK);
  Handle b;
  REQUIRE(tf_matroid_from_text(dump.s, &b.m) == TF_OK);
  CHECK(tf_matroid_rank(b.m) == 2);
  CHECK(tf_matroid_size(b.m) == 4);

  tf_matroid* bad = nullptr;
  CHECK(tf_matroid_from_text("2 4 reduced\n11\n0x\n", &bad) == TF_ERR_PARSE);
  CHECK(contains(tf_last_error(), "line 3"));
}

TEST_CASE("minor and isomorphism calls") {
  Handle np;
  REQUIRE(tf_matroid_from_fixture("paper-nprime", 0, &np.m) == TF_OK);
  Handle dual;
  REQUIRE(tf_matroid_dual(np.m, &dual.m) == TF_OK);
  int iso = -1;
  REQUIRE(tf_matroid_is_isomorphic(np.m, dual.m, 0, &iso) == TF_OK);
  CHECK(iso == 1);

  int contract[] = {0, 1};
  int del[] = {17};
  Handle minor;
  REQUIRE(tf_matroid_minor(np.m, contract, 2, del, 1, &minor.m) == TF_OK);
  CHECK(tf_matroid_rank(minor.m) == 7);
  CHECK(tf_matroid_size(minor.m) == 15);

  int unknown[] = {99};
  tf_matroid* bad = nullptr;
  CHECK(tf_matroid_minor(np.m, unknown, 1, nullptr, 0, &bad) ==
        TF_ERR_UNKNOWN_ELEMENT);
}

TEST_CASE("tutte and lv reports through the shared interface") {
  Handle n;
  REQUIRE(tf_matroid_from_fixture("paper-n", 0, &n.m) == TF_OK);

  tf_report_options opt;
  tf_report_options_init(&opt);
  Text doc;
  REQUIRE(tf_report_tutte(n.m, "paper-n", &opt, &doc.s) == TF_OK);
  CHECK(contains(doc.s, "tutte_coeff 1 5 = 45\n"));
  CHECK(contains(doc.s, "tutte_coeff 3 0 = 247\n"));
  CHECK(contains(doc.s, "tutte_coeff 0 12 = 1\n"));

  opt.z_min = -8;
  opt.z_max = 8;
  Text lv;
  int64_t violations = 0;
  REQUIRE(tf_report_lv(n.m, "paper-n", &opt, &lv.s, &violations) == TF_OK);
  CHECK(violations == 8);
  CHECK(contains(lv.s, "verdict = counterexample\n"));

  opt.eval_x = "-1";
  opt.eval_y = nullptr;
  Text broken;
  CHECK(tf_report_tutte(n.m, "paper-n", &opt, &broken.s) == TF_ERR_USAGE);
}

TEST_CASE("eval through the options struct") {
  Handle n;
  REQUIRE(tf_matroid_from_fixture("paper-n", 0, &n.m) == TF_OK);
  tf_report_options opt;
  tf_report_options_init(&opt);
  opt.eval_x = "-1";
  opt.eval_y = "-1";
  Text doc;
  REQUIRE(tf_report_tutte(n.m, "paper-n", &opt, &doc.s) == TF_OK);
  CHECK(contains(doc.s, "eval -1 -1 = 64\n"));
}

TEST_CASE("search options and guards") {
  Handle n;
  REQUIRE(tf_matroid_from_fixture("paper-n", 0, &n.m) == TF_OK);

  tf_search_options opt;
  tf_search_options_init(&opt);
  opt.target_min = 18;
  opt.samples = 3;
  Text doc;
  int64_t results = 0;
  REQUIRE(tf_report_search(n.m, "paper-n", &opt, &doc.s, &results) == TF_OK);
  CHECK(results == 1);
  CHECK(contains(doc.s, "result 0 verdict = counterexample\n"));

  opt.mode = 1;  // exhaustive is guarded at 12 elements
  Text denied;
  CHECK(tf_report_search(n.m, "paper-n", &opt, &denied.s, nullptr) ==
        TF_ERR_SIZE_GUARD);
}

TEST_CASE("scan guard and success") {
  Text doc;
  int64_t violations = -1;
  REQUIRE(tf_report_scan(4, -8, 8, 1, &doc.s, &violations) == TF_OK);
  CHECK(violations == 0);
  CHECK(contains(doc.s, "verdict = holds\n"));

  Text denied;
  CHECK(tf_report_scan(11, -8, 8, 1, &denied.s, nullptr) ==
        TF_ERR_SIZE_GUARD);
}

TEST_CASE("status names") {
  CHECK(std::string(tf_status_name(TF_OK)) == "ok");
  CHECK(std::string(tf_status_name(TF_ERR_SIZE_GUARD)) == "size-guard");
  CHECK(std::string(tf_status_name(999)) == "unknown-status");
  CHECK(std::string(tf_version()) == "0.1.0");
}
