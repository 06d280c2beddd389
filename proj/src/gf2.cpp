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

#include "gf2.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

#include "errors.hpp"

namespace tutteforge {

namespace {

void check_index(int i, int limit, const char* what) {
  if (i < 0 || i >= limit) {
    throw std::out_of_range(std::string(what) + " index " + std::to_string(i) +
                            " out of range [0, " + std::to_string(limit) + ")");
  }
}

}  // namespace

GF2Vector::GF2Vector(int length, uint64_t bits) : bits_(bits), length_(length) {
  if (length < 0 || length > kMaxLength) {
    throw UsageError("GF2Vector length must be in [0, 64], got " +
                     std::to_string(length));
  }
  if (length < 64) bits_ &= (uint64_t{1} << length) - 1;
}

bool GF2Vector::get(int i) const {
  check_index(i, length_, "bit");
  return (bits_ >> i) & 1;
}

void GF2Vector::set(int i, bool value) {
  check_index(i, length_, "bit");
  if (value)
    bits_ |= uint64_t{1} << i;
  else
    bits_ &= ~(uint64_t{1} << i);
}

int GF2Vector::popcount() const { return std::popcount(bits_); }

GF2Vector& GF2Vector::operator^=(const GF2Vector& other) {
  if (other.length_ != length_) {
    throw DimensionMismatchError("xor of GF2Vectors of lengths " +
                                 std::to_string(length_) + " and " +
                                 std::to_string(other.length_));
  }
  bits_ ^= other.bits_;
  return *this;
}

std::string GF2Vector::to_string() const {
  std::string s(length_, '0');
  for (int i = 0; i < length_; ++i)
    if ((bits_ >> i) & 1) s[i] = '1';
  return s;
}

GF2Matrix::GF2Matrix(int nrows, int ncols) : rows_(nrows, 0), ncols_(ncols) {
  if (nrows < 0 || ncols < 0 || ncols > GF2Vector::kMaxLength) {
    throw UsageError("GF2Matrix dimensions out of range: " +
                     std::to_string(nrows) + " x " + std::to_string(ncols));
  }
}

GF2Matrix GF2Matrix::identity(int n) {
  GF2Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.rows_[i] = uint64_t{1} << i;
  return m;
}

GF2Matrix GF2Matrix::from_strings(const std::vector<std::string>& rows) {
  int ncols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  GF2Matrix m(static_cast<int>(rows.size()), ncols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != ncols) {
      throw DimensionMismatchError("rows of unequal length");
    }
    uint64_t w = 0;
    for (int j = 0; j < ncols; ++j) {
      char c = rows[i][j];
      if (c == '1')
        w |= uint64_t{1} << j;
      else if (c != '0')
        throw UsageError(std::string("bad matrix character '") + c + "'");
    }
    m.rows_[i] = w;
  }
  return m;
}

bool GF2Matrix::get(int i, int j) const {
  check_index(i, nrows(), "row");
  check_index(j, ncols_, "column");
  return (rows_[i] >> j) & 1;
}

void GF2Matrix::set(int i, int j, bool value) {
  check_index(i, nrows(), "row");
  check_index(j, ncols_, "column");
  if (value)
    rows_[i] |= uint64_t{1} << j;
  else
    rows_[i] &= ~(uint64_t{1} << j);
}

uint64_t GF2Matrix::row_word(int i) const {
  check_index(i, nrows(), "row");
  return rows_[i];
}

void GF2Matrix::set_row_word(int i, uint64_t w) {
  check_index(i, nrows(), "row");
  if (ncols_ < 64) w &= (uint64_t{1} << ncols_) - 1;
  rows_[i] = w;
}

void GF2Matrix::xor_row(int dst, int src) {
  check_index(dst, nrows(), "row");
  check_index(src, nrows(), "row");
  rows_[dst] ^= rows_[src];
}

void GF2Matrix::append_row(uint64_t w) {
  if (ncols_ < 64) w &= (uint64_t{1} << ncols_) - 1;
  rows_.push_back(w);
}

GF2Vector GF2Matrix::row(int i) const {
  check_index(i, nrows(), "row");
  return GF2Vector(ncols_, rows_[i]);
}

uint64_t GF2Matrix::column_word(int j) const {
  check_index(j, ncols_, "column");
  if (nrows() > 64) throw SizeGuardError("column_word limited to 64 rows");
  uint64_t w = 0;
  for (int i = 0; i < nrows(); ++i) {
    w |= ((rows_[i] >> j) & 1) << i;
  }
  return w;
}

std::vector<std::string> GF2Matrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows_.size());
  for (int i = 0; i < nrows(); ++i) out.push_back(row(i).to_string());
  return out;
}

int rank(const GF2Matrix& m) { return rref(m).matrix.nrows(); }

RrefResult rref(const GF2Matrix& m) {
  std::vector<uint64_t> rows;
  rows.reserve(m.nrows());
  for (int i = 0; i < m.nrows(); ++i) rows.push_back(m.row_word(i));

  std::vector<int> pivots;
  int lead = 0;
  for (int col = 0; col < m.ncols() && lead < static_cast<int>(rows.size());
       ++col) {
    uint64_t bit = uint64_t{1} << col;
    int found = -1;
    for (int i = lead; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i] & bit) {
        found = i;
        break;
      }
    }
    if (found < 0) continue;
    std::swap(rows[lead], rows[found]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i != lead && (rows[i] & bit)) rows[i] ^= rows[lead];
    }
    pivots.push_back(col);
    ++lead;
  }

  GF2Matrix out(lead, m.ncols());
  for (int i = 0; i < lead; ++i) out.set_row_word(i, rows[i]);
  return {std::move(out), std::move(pivots)};
}

GF2Matrix kernel_basis(const GF2Matrix& m) {
  RrefResult rr = rref(m);
  int n = m.ncols();
  int r = rr.matrix.nrows();

  std::vector<bool> is_pivot(n, false);
  for (int p : rr.pivots) is_pivot[p] = true;

  GF2Matrix basis(n - r, n);
  int k = 0;
  for (int col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    uint64_t v = uint64_t{1} << col;
    for (int i = 0; i < r; ++i) {
      if (rr.matrix.get(i, col)) v |= uint64_t{1} << rr.pivots[i];
    }
    basis.set_row_word(k++, v);
  }
  return basis;
}

GF2Matrix transpose(const GF2Matrix& m) {
  if (m.nrows() > 64) throw SizeGuardError("transpose limited to 64 rows");
  GF2Matrix t(m.ncols(), m.nrows());
  for (int j = 0; j < m.ncols(); ++j) t.set_row_word(j, m.column_word(j));
  return t;
}

int sum_dim(const GF2Matrix& u, const GF2Matrix& w) {
  if (u.ncols() != w.ncols()) {
    throw DimensionMismatchError("sum_dim of matrices with " +
                                 std::to_string(u.ncols()) + " and " +
                                 std::to_string(w.ncols()) + " columns");
  }
  GF2Matrix stacked(0, u.ncols());
  for (int i = 0; i < u.nrows(); ++i) stacked.append_row(u.row_word(i));
  for (int i = 0; i < w.nrows(); ++i) stacked.append_row(w.row_word(i));
  return rank(stacked);
}

bool row_space_equal(const GF2Matrix& a, const GF2Matrix& b) {
  if (a.ncols() != b.ncols()) {
    throw DimensionMismatchError("row_space_equal of matrices with " +
                                 std::to_string(a.ncols()) + " and " +
                                 std::to_string(b.ncols()) + " columns");
  }
  return rref(a).matrix == rref(b).matrix;
}

std::vector<uint64_t> enumerate_row_space(const GF2Matrix& m) {
  GF2Matrix basis = rref(m).matrix;
  int r = basis.nrows();
  if (r > 26) throw SizeGuardError("row space enumeration limited to rank 26");
  std::vector<uint64_t> words(size_t{1} << r, 0);
  for (int i = 0; i < r; ++i) {
    size_t step = size_t{1} << i;
    uint64_t row = basis.row_word(i);
    for (size_t t = 0; t < step; ++t) words[step + t] = words[t] ^ row;
  }
  return words;
}

}  // namespace tutteforge
