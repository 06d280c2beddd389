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

#ifndef TUTTEFORGE_GF2_HPP_
#define TUTTEFORGE_GF2_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace tutteforge {

// Vector over GF(2), bit-packed into a single machine word. Bit j is
// coordinate j; bits beyond the length are kept at zero.
class GF2Vector {
 public:
  static constexpr int kMaxLength = 64;

  explicit GF2Vector(int length, uint64_t bits = 0);

  int length() const { return length_; }
  uint64_t word() const { return bits_; }
  bool get(int i) const;
  void set(int i, bool value);
  int popcount() const;
  bool is_zero() const { return bits_ == 0; }

  GF2Vector& operator^=(const GF2Vector& other);

  // Coordinate 0 first, e.g. "1101".
  std::string to_string() const;

  friend bool operator==(const GF2Vector&, const GF2Vector&) = default;

 private:
  uint64_t bits_;
  int length_;
};

// Row-major bit matrix over GF(2). Rows may be linearly dependent; nothing at
// this layer assumes full row rank. At most 64 columns.
class GF2Matrix {
 public:
  GF2Matrix() : ncols_(0) {}
  GF2Matrix(int nrows, int ncols);

  static GF2Matrix identity(int n);
  // One string per row, e.g. {"110", "011"}; column 0 is the first character.
  static GF2Matrix from_strings(const std::vector<std::string>& rows);

  int nrows() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return ncols_; }

  bool get(int i, int j) const;
  void set(int i, int j, bool value);
  uint64_t row_word(int i) const;
  void set_row_word(int i, uint64_t w);
  void xor_row(int dst, int src);  // rows[dst] ^= rows[src]
  void append_row(uint64_t w);
  GF2Vector row(int i) const;

  // Bit i of the result is entry (i, j). Requires nrows <= 64.
  uint64_t column_word(int j) const;
  bool column_is_zero(int j) const { return column_word(j) == 0; }

  std::vector<std::string> to_strings() const;

  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

 private:
  std::vector<uint64_t> rows_;
  int ncols_;
};

struct RrefResult {
  // Reduced row-echelon form with zero rows dropped; the unique canonical
  // basis of the input's row space.
  GF2Matrix matrix;
  // Pivot column indices, strictly increasing; one per row of `matrix`.
  std::vector<int> pivots;
};

int rank(const GF2Matrix& m);
RrefResult rref(const GF2Matrix& m);

// Rows form a basis of {v : m v^T = 0}. Row count is ncols - rank(m). The
// basis is the standard one read off the RREF: one row per non-pivot column,
// with a 1 in that column, taken in increasing column order.
GF2Matrix kernel_basis(const GF2Matrix& m);

GF2Matrix transpose(const GF2Matrix& m);

// rank of the vertical stack of u and w, i.e. dim(U + W).
int sum_dim(const GF2Matrix& u, const GF2Matrix& w);

bool row_space_equal(const GF2Matrix& a, const GF2Matrix& b);

// All 2^rank words of the row space. Guarded at rank <= 26.
std::vector<uint64_t> enumerate_row_space(const GF2Matrix& m);

}  // namespace tutteforge

#endif  // TUTTEFORGE_GF2_HPP_
