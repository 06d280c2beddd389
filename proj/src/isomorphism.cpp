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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "matroid.hpp"

namespace tutteforge {

namespace {

// Column data of one code prepared for the equivalence search.
struct CodeView {
  int length = 0;                // columns (loops removed)
  std::vector<uint64_t> words;   // all 2^dim codewords
  std::vector<int> weight_enum;  // weight_enum[w] = #codewords of weight w
  int min_weight = 0;            // minimum nonzero weight
  std::vector<uint64_t> short_words;  // nonzero words of weight <= minw + 2
  std::vector<int> short_weight;      // parallel weight array
  // Pruning invariants. A permutation carrying code A onto code B maps
  // codewords bijectively preserving weight and support membership, so
  // column signatures and pair counts must match under any assignment.
  std::vector<uint64_t> col_sig;                // packed per-weight counts
  std::vector<std::vector<uint64_t>> pair_sig;  // packed per-weight counts
  std::vector<std::vector<int>> words_through;  // short-word ids per column
  std::unordered_set<uint64_t> short_set;       // (weight << 32) | mask
  GF2Matrix basis{0, 0};
};

GF2Matrix strip_columns(const GF2Matrix& m, const std::vector<int>& keep) {
  GF2Matrix out(m.nrows(), static_cast<int>(keep.size()));
  for (int i = 0; i < m.nrows(); ++i) {
    uint64_t w = 0;
    for (size_t j = 0; j < keep.size(); ++j) {
      if (m.get(i, keep[j])) w |= uint64_t{1} << j;
    }
    out.set_row_word(i, w);
  }
  return out;
}

uint64_t tag(int weight, uint64_t mask) {
  return (static_cast<uint64_t>(weight) << 32) | mask;
}

CodeView build_view(const GF2Matrix& code_basis) {
  CodeView v;
  v.length = code_basis.ncols();
  v.basis = rref(code_basis).matrix;
  v.words = enumerate_row_space(v.basis);

  v.weight_enum.assign(v.length + 1, 0);
  for (uint64_t w : v.words) ++v.weight_enum[std::popcount(w)];

  v.min_weight = v.length + 1;
  for (int w = 1; w <= v.length; ++w) {
    if (v.weight_enum[w] > 0) {
      v.min_weight = w;
      break;
    }
  }
  int w0 = v.min_weight + 2;
  for (uint64_t cw : v.words) {
    int wt = std::popcount(cw);
    if (wt >= 1 && wt <= w0) {
      v.short_words.push_back(cw);
      v.short_weight.push_back(wt);
      v.short_set.insert(tag(wt, cw));
    }
  }

  // Pack the three weight classes minw, minw+1, minw+2 into 16-bit lanes;
  // the counts are bounded by the codeword count, far below 2^16.
  v.col_sig.assign(v.length, 0);
  v.pair_sig.assign(v.length, std::vector<uint64_t>(v.length, 0));
  v.words_through.assign(v.length, {});
  for (size_t k = 0; k < v.short_words.size(); ++k) {
    uint64_t cw = v.short_words[k];
    int lane = (v.short_weight[k] - v.min_weight) * 16;
    uint64_t m = cw;
    while (m) {
      int i = std::countr_zero(m);
      m &= m - 1;
      v.col_sig[i] += uint64_t{1} << lane;
      v.words_through[i].push_back(static_cast<int>(k));
      uint64_t m2 = m;  // pairs (i, j) with j > i
      while (m2) {
        int j = std::countr_zero(m2);
        m2 &= m2 - 1;
        v.pair_sig[i][j] += uint64_t{1} << lane;
        v.pair_sig[j][i] += uint64_t{1} << lane;
      }
    }
  }
  return v;
}

struct Backtracker {
  const CodeView& a;
  const CodeView& b;
  long long budget;
  long long nodes = 0;
  std::vector<int> assign{};     // a-column -> b-column, -1 unassigned
  std::vector<bool> used{};      // b-column taken
  std::vector<int> order{};      // a-columns in assignment order
  std::vector<int> remaining{};  // unassigned support per short word of A

  bool candidate_ok(int i, int j) const {
    if (used[j]) return false;
    if (a.col_sig[i] != b.col_sig[j]) return false;
    for (int i2 : order) {
      if (a.pair_sig[i][i2] != b.pair_sig[j][assign[i2]]) return false;
    }
    return true;
  }

  // Every short word of A whose support just became fully assigned must map
  // onto a short word of B of the same weight.
  bool completed_words_ok(int i) const {
    for (int idx : a.words_through[i]) {
      if (remaining[idx] != 0) continue;
      uint64_t mask = a.short_words[idx];
      uint64_t image = 0;
      while (mask) {
        int c = std::countr_zero(mask);
        mask &= mask - 1;
        image |= uint64_t{1} << assign[c];
      }
      if (!b.short_set.count(tag(a.short_weight[idx], image))) return false;
    }
    return true;
  }

  bool take(int i, int j) {
    assign[i] = j;
    used[j] = true;
    order.push_back(i);
    for (int idx : a.words_through[i]) --remaining[idx];
    if (completed_words_ok(i)) return true;
    drop(i, j);
    return false;
  }

  void drop(int i, int j) {
    for (int idx : a.words_through[i]) ++remaining[idx];
    order.pop_back();
    used[j] = false;
    assign[i] = -1;
  }

  // Membership of each permuted basis row of A in the row space of B. The
  // rows of b.basis are in RREF, so each row's lowest set bit is its pivot.
  bool verify() const {
    for (int i = 0; i < a.basis.nrows(); ++i) {
      uint64_t v = 0;
      for (int c = 0; c < a.length; ++c) {
        if (a.basis.get(i, c)) v |= uint64_t{1} << assign[c];
      }
      for (int k = 0; k < b.basis.nrows(); ++k) {
        uint64_t row = b.basis.row_word(k);
        if (v & (uint64_t{1} << std::countr_zero(row))) v ^= row;
      }
      if (v != 0) return false;
    }
    return true;
  }

  bool search(int depth) {
    if (++nodes > budget) {
      throw BudgetExhaustedError(
          "isomorphism search exceeded its node budget of " +
          std::to_string(budget));
    }
    if (depth == a.length) return verify();

    // Most-constrained unassigned column first.
    int best = -1;
    int best_count = a.length + 1;
    std::vector<int> best_cands;
    for (int i = 0; i < a.length; ++i) {
      if (assign[i] >= 0) continue;
      std::vector<int> cands;
      for (int j = 0; j < b.length; ++j) {
        if (candidate_ok(i, j)) cands.push_back(j);
      }
      if (static_cast<int>(cands.size()) < best_count) {
        best = i;
        best_count = static_cast<int>(cands.size());
        best_cands = std::move(cands);
        if (best_count == 0) return false;
      }
    }
    for (int j : best_cands) {
      if (!take(best, j)) continue;
      if (search(depth + 1)) return true;
      drop(best, j);
    }
    return false;
  }
};

}  // namespace

bool is_isomorphic(const BinaryMatroid& a, const BinaryMatroid& b,
                   long long node_budget) {
  if (a.size() != b.size() || a.rank() != b.rank()) return false;

  std::vector<int> keep_a, keep_b;
  for (int j = 0; j < a.size(); ++j) {
    if (!a.rep().column_is_zero(j)) keep_a.push_back(j);
  }
  for (int j = 0; j < b.size(); ++j) {
    if (!b.rep().column_is_zero(j)) keep_b.push_back(j);
  }
  if (keep_a.size() != keep_b.size()) return false;  // loop counts differ
  if (keep_a.empty()) return true;                   // loops only

  GF2Matrix code_a = strip_columns(a.rep(), keep_a);
  GF2Matrix code_b = strip_columns(b.rep(), keep_b);

  // Equal codes need no search: the identity assignment works.
  if (row_space_equal(code_a, code_b)) return true;

  // A permutation carries a code onto another iff it carries the dual onto
  // the dual, so enumerate whichever side is smaller.
  int nl = static_cast<int>(keep_a.size());
  if (2 * a.rank() > nl) {
    code_a = kernel_basis(code_a);
    code_b = kernel_basis(code_b);
  }

  CodeView va = build_view(code_a);
  CodeView vb = build_view(code_b);
  if (va.weight_enum != vb.weight_enum) return false;

  // Signature multisets must agree before any search is worth starting.
  {
    std::vector<uint64_t> sa = va.col_sig, sb = vb.col_sig;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  Backtracker bt{va, vb, node_budget};
  bt.assign.assign(va.length, -1);
  bt.used.assign(vb.length, false);
  bt.remaining.resize(va.short_words.size());
  for (size_t k = 0; k < va.short_words.size(); ++k) {
    bt.remaining[k] = va.short_weight[k];
  }
  return bt.search(0);
}

}  // namespace tutteforge
