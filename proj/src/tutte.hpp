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

#ifndef TUTTEFORGE_TUTTE_HPP_
#define TUTTEFORGE_TUTTE_HPP_

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "bigint.hpp"
#include "matroid.hpp"
#include "polynomial.hpp"

namespace tutteforge {

// Table N[rho][nu] counting subsets A of the ground set by corank
// rho = r(E) - r(A) and nullity nu = |A| - r(A). This is the compressed form
// of the Tutte polynomial: every evaluation and every coefficient comes out
// of this table by exact expansion.
class RankNullityCensus {
 public:
  RankNullityCensus(int rank, int size);

  int rank() const { return r_; }
  int size() const { return n_; }
  int nullity() const { return n_ - r_; }

  const BigInt& at(int rho, int nu) const;
  BigInt& at(int rho, int nu);

  BigInt total() const;  // must equal 2^n

  // Exact-equality key over (r, n, counts); used for deduplication.
  std::string key() const;
  // 64-bit FNV-1a of key(); the printable fingerprint.
  uint64_t fingerprint() const;

  friend bool operator==(const RankNullityCensus&,
                         const RankNullityCensus&) = default;

 private:
  int r_, n_;
  std::vector<BigInt> counts_;  // (r+1) x (n-r+1), row-major by rho
};

struct CensusOptions {
  // <= 0 reads TUTTE_FORGE_WORKERS, defaulting to 1.
  int workers = 1;
  // Maximum DFS nodes; < 0 means unlimited. A single-threaded census of n
  // elements costs exactly 2^(n+1) - 1 nodes.
  long long node_budget = -1;
  // Prefix depth for the parallel split; < 0 picks the smallest k with
  // 2^k >= 8 * workers. Ignored when workers == 1.
  int split_depth = -1;
};

struct CensusStats {
  long long nodes = 0;
};

// Depth-first include/exclude traversal over elements in column order,
// carrying an incremental GF(2) elimination state. Guarded at n <= 30.
// With workers > 1 the traversal splits on the first k decisions and the
// per-task censuses are summed in task order, so the result is identical to
// the single-threaded one.
RankNullityCensus census(const BinaryMatroid& m, const CensusOptions& opt = {},
                         CensusStats* stats = nullptr);

// Dense grid of the coefficients of x^i y^j, 0 <= i <= r, 0 <= j <= n-r.
class TuttePolynomial {
 public:
  TuttePolynomial(int xdeg, int ydeg);

  int xdeg() const { return xdeg_; }
  int ydeg() const { return ydeg_; }
  const BigInt& coeff(int i, int j) const;  // zero outside the grid
  BigInt& at(int i, int j);

  BigRat evaluate(const BigRat& x, const BigRat& y) const;
  BigInt evaluate(const BigInt& x, const BigInt& y) const;

  TuttePolynomial transposed() const;  // swaps x and y

  // Nonzero terms (i, j, c) sorted by (i, j).
  std::vector<std::tuple<int, int, BigInt>> terms() const;

  // Content equality: same nonzero terms.
  friend bool operator==(const TuttePolynomial& a, const TuttePolynomial& b) {
    return a.terms() == b.terms();
  }

 private:
  int xdeg_, ydeg_;
  std::vector<BigInt> c_;
};

// Binomial expansion of sum_{rho,nu} N[rho][nu] (x-1)^rho (y-1)^nu.
TuttePolynomial tutte_from_census(const RankNullityCensus& c);

struct DelconOptions {
  long long node_budget = 1 << 24;
};

// Independent correctness oracle: the deletion-contraction recurrence with a
// cache keyed on the RREF of the representation's row space (zero columns
// included), i.e. exact-equality caching only. The cache lives per call;
// never shared across threads.
TuttePolynomial tutte_delcon(const BinaryMatroid& m,
                             const DelconOptions& opt = {});

// With C_k = sum_{rho+nu=k} N[rho][nu], expands
//   sum_k C_k (offset + scale z)^k
// in z. Its value at z=0 is T(offset+1, offset+1).
IntegerPolynomial diagonal_poly(const RankNullityCensus& c,
                                const BigInt& offset, const BigInt& scale);

}  // namespace tutteforge

#endif  // TUTTEFORGE_TUTTE_HPP_
