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

#include "matroid.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>
#include <utility>

#include "errors.hpp"

namespace tutteforge {

namespace {

std::vector<int> default_labels(int n) {
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i;
  return labels;
}

void check_labels(const std::vector<int>& labels, int n) {
  if (static_cast<int>(labels.size()) != n) {
    throw UsageError("expected " + std::to_string(n) + " labels, got " +
                     std::to_string(labels.size()));
  }
  std::set<int> seen(labels.begin(), labels.end());
  if (static_cast<int>(seen.size()) != n) {
    throw UsageError("labels must be pairwise distinct");
  }
}

// Inserts v into an echelon basis keyed by top set bit. Returns the slot
// used, or -1 if v was already in the span.
int basis_insert(uint64_t basis[], uint64_t v) {
  while (v != 0) {
    int p = 63 - std::countl_zero(v);
    if (basis[p] == 0) {
      basis[p] = v;
      return p;
    }
    v ^= basis[p];
  }
  return -1;
}

// Drops bit `pos`, shifting the higher bits down by one.
uint64_t remove_bit(uint64_t w, int pos) {
  uint64_t low = w & ((uint64_t{1} << pos) - 1);
  uint64_t high = pos < 63 ? (w >> (pos + 1)) << pos : 0;
  return low | high;
}

}  // namespace

BinaryMatroid::BinaryMatroid(GF2Matrix rep, std::vector<int> labels)
    : rep_(std::move(rep)), labels_(std::move(labels)) {}

BinaryMatroid BinaryMatroid::from_reduced(const GF2Matrix& d,
                                          std::vector<int> labels) {
  int r = d.nrows();
  int n = r + d.ncols();
  if (n > GF2Vector::kMaxLength) {
    throw SizeGuardError("ground set larger than 64");
  }
  if (labels.empty()) labels = default_labels(n);
  check_labels(labels, n);
  GF2Matrix rep(r, n);
  for (int i = 0; i < r; ++i) {
    uint64_t w = uint64_t{1} << i;
    if (r < 64) w |= d.row_word(i) << r;
    rep.set_row_word(i, w);
  }
  return BinaryMatroid(std::move(rep), std::move(labels));
}

BinaryMatroid BinaryMatroid::from_full(const GF2Matrix& m,
                                       std::vector<int> labels) {
  if (labels.empty()) labels = default_labels(m.ncols());
  check_labels(labels, m.ncols());
  return BinaryMatroid(rref(m).matrix, std::move(labels));
}

int BinaryMatroid::column_of(int label) const {
  for (int j = 0; j < size(); ++j) {
    if (labels_[j] == label) return j;
  }
  throw UnknownElementError("element " + std::to_string(label) +
                            " is not in the ground set");
}

int BinaryMatroid::rank_of_subset(std::span<const int> labels) const {
  uint64_t basis[64] = {};
  int rk = 0;
  for (int label : labels) {
    uint64_t col = rep_.column_word(column_of(label));
    if (basis_insert(basis, col) >= 0) ++rk;
  }
  return rk;
}

bool BinaryMatroid::is_loop(int label) const {
  return rep_.column_is_zero(column_of(label));
}

bool BinaryMatroid::is_coloop(int label) const {
  // An element is a coloop iff no circuit contains it, i.e. its column in
  // every kernel vector is zero.
  int j = column_of(label);
  return kernel_basis(rep_).column_is_zero(j);
}

std::vector<int> BinaryMatroid::loops() const {
  std::vector<int> out;
  for (int j = 0; j < size(); ++j) {
    if (rep_.column_is_zero(j)) out.push_back(labels_[j]);
  }
  return out;
}

std::vector<int> BinaryMatroid::coloops() const {
  GF2Matrix ker = kernel_basis(rep_);
  std::vector<int> out;
  for (int j = 0; j < size(); ++j) {
    if (ker.column_is_zero(j)) out.push_back(labels_[j]);
  }
  return out;
}

BinaryMatroid BinaryMatroid::deleted(int label) const {
  int del = column_of(label);
  bool coloop = is_coloop(label);
  GF2Matrix rep(rank(), size() - 1);
  for (int i = 0; i < rank(); ++i) {
    rep.set_row_word(i, remove_bit(rep_.row_word(i), del));
  }
  std::vector<int> labels = labels_;
  labels.erase(labels.begin() + del);
  if (coloop) rep = rref(rep).matrix;  // rank dropped by one
  return BinaryMatroid(std::move(rep), std::move(labels));
}

BinaryMatroid BinaryMatroid::contracted(int label) const {
  int col = column_of(label);
  if (rep_.column_is_zero(col)) return deleted(label);

  GF2Matrix work = rep_;
  int pivot = -1;
  for (int i = 0; i < work.nrows(); ++i) {
    if (work.get(i, col)) {
      pivot = i;
      break;
    }
  }
  for (int i = 0; i < work.nrows(); ++i) {
    if (i != pivot && work.get(i, col)) work.xor_row(i, pivot);
  }
  GF2Matrix rep(rank() - 1, size() - 1);
  int k = 0;
  for (int i = 0; i < work.nrows(); ++i) {
    if (i == pivot) continue;
    rep.set_row_word(k++, remove_bit(work.row_word(i), col));
  }
  std::vector<int> labels = labels_;
  labels.erase(labels.begin() + col);
  return BinaryMatroid(std::move(rep), std::move(labels));
}

BinaryMatroid BinaryMatroid::minor(std::span<const int> contract,
                                   std::span<const int> remove) const {
  std::set<int> c(contract.begin(), contract.end());
  for (int e : remove) {
    if (c.count(e)) {
      throw UsageError("element " + std::to_string(e) +
                       " appears in both the contract and delete sets");
    }
  }
  BinaryMatroid m = *this;
  for (int e : contract) m = m.contracted(e);
  for (int e : remove) m = m.deleted(e);
  return m;
}

BinaryMatroid BinaryMatroid::dual() const {
  return BinaryMatroid(kernel_basis(rep_), labels_);
}

bool BinaryMatroid::is_identically_self_dual() const {
  return row_space_equal(rep_, kernel_basis(rep_));
}

BigInt count_bases_bruteforce(const BinaryMatroid& m) {
  if (m.size() > 24) {
    throw SizeGuardError("basis enumeration limited to 24 elements");
  }
  int n = m.size();
  int r = m.rank();
  std::vector<uint64_t> cols(n);
  for (int j = 0; j < n; ++j) cols[j] = m.rep().column_word(j);

  BigInt count = 0;
  // Chooses independent columns left to right; every maximal chain of
  // length r is a basis.
  struct Rec {
    const std::vector<uint64_t>& cols;
    int n, r;
    BigInt& count;
    uint64_t basis[64] = {};
    void go(int next, int chosen) {
      if (chosen == r) {
        count += 1;
        return;
      }
      if (n - next < r - chosen) return;
      for (int j = next; j < n; ++j) {
        int slot = basis_insert(basis, cols[j]);
        if (slot >= 0) {
          go(j + 1, chosen + 1);
          basis[slot] = 0;
        }
      }
    }
  } rec{cols, n, r, count};
  rec.go(0, 0);
  return count;
}

}  // namespace tutteforge
