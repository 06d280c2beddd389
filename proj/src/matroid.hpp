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

#ifndef TUTTEFORGE_MATROID_HPP_
#define TUTTEFORGE_MATROID_HPP_

#include <span>
#include <vector>

#include "bigint.hpp"
#include "gf2.hpp"

namespace tutteforge {

// A binary matroid given by a full-row-rank GF(2) representation whose
// columns are the ground set. Elements carry integer labels that survive
// minors, so a minor can always report which elements of the original
// matroid were contracted or deleted. Values are immutable.
class BinaryMatroid {
 public:
  // Representation [I_r | D] from the reduced matrix D. Labels default to
  // 0..n-1 in column order.
  static BinaryMatroid from_reduced(const GF2Matrix& d,
                                    std::vector<int> labels = {});
  // Stores rref(m): dependent rows are allowed and dropped; zero columns
  // (loops) are preserved as columns.
  static BinaryMatroid from_full(const GF2Matrix& m,
                                 std::vector<int> labels = {});

  int rank() const { return rep_.nrows(); }
  int size() const { return rep_.ncols(); }
  const GF2Matrix& rep() const { return rep_; }
  const std::vector<int>& labels() const { return labels_; }

  int column_of(int label) const;  // throws UnknownElementError
  int label_at(int column) const { return labels_[column]; }

  int rank_of_subset(std::span<const int> labels) const;

  bool is_loop(int label) const;
  bool is_coloop(int label) const;
  std::vector<int> loops() const;
  std::vector<int> coloops() const;

  BinaryMatroid deleted(int label) const;
  BinaryMatroid contracted(int label) const;
  // Contracts every element of `contract`, then deletes every element of
  // `remove`. The two sets must be disjoint subsets of the ground set.
  BinaryMatroid minor(std::span<const int> contract,
                      std::span<const int> remove) const;

  // Same labels; representation is the standard kernel basis, which for a
  // representation row-reducing to [I_r | D] under a column permutation is
  // [D^T | I_{n-r}] carried back through the inverse permutation.
  BinaryMatroid dual() const;

  // True iff the row space of the representation equals its own kernel,
  // i.e. the cocircuit space and circuit space agree element-for-element.
  bool is_identically_self_dual() const;

  friend bool operator==(const BinaryMatroid&, const BinaryMatroid&) = default;

 private:
  BinaryMatroid(GF2Matrix rep, std::vector<int> labels);

  GF2Matrix rep_;
  std::vector<int> labels_;
};

// Number of r-subsets of the ground set with rank r, by direct enumeration.
// Guarded at n <= 24.
BigInt count_bases_bruteforce(const BinaryMatroid& m);

inline constexpr long long kDefaultIsoNodeBudget = 20'000'000;

// Matroid isomorphism as binary code equivalence: true iff some ground-set
// bijection carries the row space of one representation onto the other.
// Backtracks over column assignments, pruning with per-column and per-pair
// incidence counts of low-weight codewords. Throws BudgetExhaustedError when
// the search exceeds `node_budget` assignments.
bool is_isomorphic(const BinaryMatroid& a, const BinaryMatroid& b,
                   long long node_budget = kDefaultIsoNodeBudget);

}  // namespace tutteforge

#endif  // TUTTEFORGE_MATROID_HPP_
