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

#include "catalog.hpp"

#include <bit>
#include <string>

#include "errors.hpp"
#include "lasvergnas.hpp"
#include "tutte.hpp"

namespace tutteforge {

namespace {

// Reduced representations embedded as data so the CLI reproduces its numbers
// with zero inputs.
const std::vector<std::string> kMinorN = {
    "110010001111", "101100011011", "010011111100",
    "101011101010", "011100101110", "011010110011",
};

const std::vector<std::string> kMinorNprime = {
    "000111111", "011100111", "001001011", "110010011", "111001110",
    "110101011", "101010111", "010011110", "101111010",
};

BinaryMatroid circuit(int c) {
  // [I_{c-1} | all-ones column]: every proper subset independent, the whole
  // set dependent.
  GF2Matrix d(c - 1, 1);
  for (int i = 0; i < c - 1; ++i) d.set(i, 0, true);
  return BinaryMatroid::from_reduced(d);
}

void golay_gates(const BinaryMatroid& g) {
  if (g.size() != 24) throw VerificationError("golay24 gate: length != 24");
  if (g.rank() != 12) throw VerificationError("golay24 gate: dimension != 12");
  if (!g.is_identically_self_dual()) {
    throw VerificationError("golay24 gate: code is not self-dual");
  }
  std::vector<long long> we = weight_enumerator(g.rep());
  for (int w = 1; w < 8; ++w) {
    if (we[w] != 0) {
      throw VerificationError("golay24 gate: minimum weight below 8");
    }
  }
  std::vector<long long> expect(25, 0);
  expect[0] = 1;
  expect[8] = 759;
  expect[12] = 2576;
  expect[16] = 759;
  expect[24] = 1;
  if (we != expect) {
    throw VerificationError("golay24 gate: wrong weight enumerator");
  }
}

}  // namespace

std::vector<long long> weight_enumerator(const GF2Matrix& m) {
  std::vector<long long> we(m.ncols() + 1, 0);
  for (uint64_t w : enumerate_row_space(m)) ++we[std::popcount(w)];
  return we;
}

BinaryMatroid minor_n() {
  return BinaryMatroid::from_reduced(GF2Matrix::from_strings(kMinorN));
}

BinaryMatroid minor_nprime() {
  return BinaryMatroid::from_reduced(GF2Matrix::from_strings(kMinorNprime));
}

BinaryMatroid golay24() {
  // B[s][t] = 1 iff (t - s) mod 11 is 0 or a quadratic residue, bordered by
  // ones with a zero corner.
  bool qr[11] = {};
  qr[0] = true;
  for (int i = 1; i < 11; ++i) qr[(i * i) % 11] = true;

  GF2Matrix b(12, 12);
  for (int s = 0; s < 11; ++s) {
    for (int t = 0; t < 11; ++t) b.set(s, t, qr[((t - s) % 11 + 11) % 11]);
    b.set(s, 11, true);
    b.set(11, s, true);
  }
  BinaryMatroid g = BinaryMatroid::from_reduced(b);
  golay_gates(g);
  return g;
}

BinaryMatroid graphic_complete(int k) {
  if (k < 2 || k > 8) {
    throw UsageError("graphic_complete supports 2 <= k <= 8, got " +
                     std::to_string(k));
  }
  int n = k * (k - 1) / 2;
  GF2Matrix incidence(k, n);
  int col = 0;
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) {
      incidence.set(u, col, true);
      incidence.set(v, col, true);
      ++col;
    }
  }
  return BinaryMatroid::from_full(incidence);
}

BinaryMatroid elementary(std::string_view name) {
  if (name == "loop") {
    return BinaryMatroid::from_full(GF2Matrix(1, 1));
  }
  if (name == "coloop") {
    return BinaryMatroid::from_full(GF2Matrix::identity(1));
  }
  if (name == "loop+coloop") {
    GF2Matrix m(1, 2);
    m.set(0, 0, true);
    return BinaryMatroid::from_full(m);
  }
  if (name.substr(0, 7) == "circuit" && name.size() == 8 && name[7] >= '3' &&
      name[7] <= '8') {
    return circuit(name[7] - '0');
  }
  throw UsageError("unknown elementary matroid '" + std::string(name) + "'");
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "paper-n",  "paper-nprime", "golay24",  "k2",       "k3",
      "k4",       "k5",           "k6",       "k7",       "k8",
      "loop",     "coloop",       "loop+coloop", "circuit3", "circuit4",
      "circuit5", "circuit6",     "circuit7", "circuit8",
  };
  return names;
}

std::optional<BinaryMatroid> fixture(std::string_view name, bool self_test) {
  std::optional<BinaryMatroid> m;
  if (name == "paper-n") {
    m = minor_n();
  } else if (name == "paper-nprime") {
    m = minor_nprime();
  } else if (name == "golay24") {
    m = golay24();
  } else if (name.size() == 2 && name[0] == 'k' && name[1] >= '2' &&
             name[1] <= '8') {
    m = graphic_complete(name[1] - '0');
  } else if (name == "loop" || name == "coloop" || name == "loop+coloop" ||
             (name.substr(0, 7) == "circuit" && name.size() == 8 &&
              name[7] >= '3' && name[7] <= '8')) {
    m = elementary(name);
  } else {
    return std::nullopt;
  }

  if (self_test) {
    RankNullityCensus c = census(*m);
    TuttePolynomial t = tutte_from_census(c);
    if (!check_rosenstiehl(*m, t)) {
      throw VerificationError("fixture '" + std::string(name) +
                              "' fails the Rosenstiehl identity");
    }
    if (!check_theorem33(*m, t)) {
      throw VerificationError("fixture '" + std::string(name) +
                              "' fails the odd-integer theorem at z=1");
    }
  }
  return m;
}

}  // namespace tutteforge
