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

#include "tutte.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <utility>

#include "errors.hpp"

namespace tutteforge {

namespace {

int env_workers() {
  const char* v = std::getenv("TUTTE_FORGE_WORKERS");
  if (v == nullptr) return 1;
  int w = std::atoi(v);
  return w >= 1 ? w : 1;
}

int effective_workers(int requested) {
  int w = requested <= 0 ? env_workers() : requested;
  return w > 256 ? 256 : w;
}

// One include/exclude decision tree walker. The elimination state is an
// echelon basis of the included columns keyed by top set bit; an include
// step touches at most one basis slot, so backtracking is a single store.
struct CensusDfs {
  const uint32_t* cols;
  int n;
  int r;
  BigInt* cells;
  int width;  // nullity + 1
  long long budget;
  long long nodes = 0;
  uint32_t basis[32] = {};
  int rk = 0;

  void insert(uint32_t v, int& slot) {
    slot = -1;
    while (v != 0) {
      int p = 31 - std::countl_zero(v);
      if (basis[p] == 0) {
        basis[p] = v;
        slot = p;
        ++rk;
        return;
      }
      v ^= basis[p];
    }
  }

  void run(int idx, int included) {
    ++nodes;
    if (budget >= 0 && nodes > budget) {
      throw BudgetExhaustedError("census exceeded its node budget of " +
                                 std::to_string(budget));
    }
    if (idx == n) {
      cells[(r - rk) * width + (included - rk)] += 1;
      return;
    }
    run(idx + 1, included);
    int slot;
    insert(cols[idx], slot);
    run(idx + 1, included + 1);
    if (slot >= 0) {
      basis[slot] = 0;
      --rk;
    }
  }
};

}  // namespace

RankNullityCensus::RankNullityCensus(int rank, int size)
    : r_(rank), n_(size), counts_((rank + 1) * (size - rank + 1)) {
  if (rank < 0 || size < rank) {
    throw UsageError("bad census dimensions r=" + std::to_string(rank) +
                     " n=" + std::to_string(size));
  }
}

const BigInt& RankNullityCensus::at(int rho, int nu) const {
  return counts_.at(rho * (n_ - r_ + 1) + nu);
}

BigInt& RankNullityCensus::at(int rho, int nu) {
  return counts_.at(rho * (n_ - r_ + 1) + nu);
}

BigInt RankNullityCensus::total() const {
  BigInt t = 0;
  for (const BigInt& c : counts_) t += c;
  return t;
}

std::string RankNullityCensus::key() const {
  std::ostringstream os;
  os << r_ << "," << n_ << ":";
  for (const BigInt& c : counts_) os << c.get_str() << ",";
  return os.str();
}

uint64_t RankNullityCensus::fingerprint() const {
  uint64_t h = 14695981039346656037ull;
  for (char ch : key()) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  return h;
}

RankNullityCensus census(const BinaryMatroid& m, const CensusOptions& opt,
                         CensusStats* stats) {
  int n = m.size();
  int r = m.rank();
  if (n > 30) throw SizeGuardError("census limited to 30 elements");

  std::vector<uint32_t> cols(n);
  for (int j = 0; j < n; ++j) {
    cols[j] = static_cast<uint32_t>(m.rep().column_word(j));
  }

  RankNullityCensus out(r, n);
  int width = n - r + 1;
  int workers = effective_workers(opt.workers);

  if (workers <= 1 || n < 4) {
    CensusDfs dfs{cols.data(), n, r, &out.at(0, 0), width, opt.node_budget};
    dfs.run(0, 0);
    if (stats != nullptr) stats->nodes = dfs.nodes;
    return out;
  }

  int k = opt.split_depth;
  if (k < 0) {
    k = 3;
    while ((1 << k) < 8 * workers) ++k;
  }
  if (k > n - 1) k = n - 1;

  // Every depth-k prefix owns an identically sized subtree of
  // 2^(n-k+1) - 1 nodes, so an even split of the budget is exact.
  long long task_budget = -1;
  if (opt.node_budget >= 0) {
    long long prefix_nodes = (2ll << k) - 1;
    long long rest = opt.node_budget - prefix_nodes;
    if (rest < 0) rest = 0;
    task_budget = rest >> k;
  }

  size_t ntasks = size_t{1} << k;
  std::vector<RankNullityCensus> parts(ntasks, RankNullityCensus(r, n));
  std::atomic<size_t> next{0};
  std::atomic<long long> total_nodes{0};
  std::vector<std::exception_ptr> errors(workers);

  auto work = [&](int wi) {
    try {
      for (;;) {
        size_t t = next.fetch_add(1);
        if (t >= ntasks) break;
        CensusDfs dfs{cols.data(),          n, r, &parts[t].at(0, 0),
                      width, task_budget};
        // Replay the prefix decisions: bit i of t set means element i is
        // included.
        int included = 0;
        for (int i = 0; i < k; ++i) {
          if ((t >> i) & 1) {
            int slot;
            dfs.insert(cols[i], slot);
            ++included;
          }
        }
        dfs.nodes = 0;
        dfs.run(k, included);
        total_nodes.fetch_add(dfs.nodes);
      }
    } catch (...) {
      errors[wi] = std::current_exception();
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int wi = 0; wi < workers; ++wi) threads.emplace_back(work, wi);
  for (auto& th : threads) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  for (size_t t = 0; t < ntasks; ++t) {
    for (int rho = 0; rho <= r; ++rho) {
      for (int nu = 0; nu <= n - r; ++nu) {
        out.at(rho, nu) += parts[t].at(rho, nu);
      }
    }
  }
  if (stats != nullptr) stats->nodes = total_nodes.load();
  return out;
}

TuttePolynomial::TuttePolynomial(int xdeg, int ydeg)
    : xdeg_(xdeg), ydeg_(ydeg), c_((xdeg + 1) * (ydeg + 1)) {
  if (xdeg < 0 || ydeg < 0) throw UsageError("negative polynomial degree");
}

namespace {
const BigInt kZero = 0;
}

const BigInt& TuttePolynomial::coeff(int i, int j) const {
  if (i < 0 || i > xdeg_ || j < 0 || j > ydeg_) return kZero;
  return c_[i * (ydeg_ + 1) + j];
}

BigInt& TuttePolynomial::at(int i, int j) { return c_.at(i * (ydeg_ + 1) + j); }

BigRat TuttePolynomial::evaluate(const BigRat& x, const BigRat& y) const {
  BigRat acc = 0;
  for (int i = xdeg_; i >= 0; --i) {
    BigRat row = 0;
    for (int j = ydeg_; j >= 0; --j) row = row * y + BigRat(coeff(i, j));
    acc = acc * x + row;
  }
  return acc;
}

BigInt TuttePolynomial::evaluate(const BigInt& x, const BigInt& y) const {
  BigInt acc = 0;
  for (int i = xdeg_; i >= 0; --i) {
    BigInt row = 0;
    for (int j = ydeg_; j >= 0; --j) row = row * y + coeff(i, j);
    acc = acc * x + row;
  }
  return acc;
}

TuttePolynomial TuttePolynomial::transposed() const {
  TuttePolynomial t(ydeg_, xdeg_);
  for (int i = 0; i <= xdeg_; ++i) {
    for (int j = 0; j <= ydeg_; ++j) t.at(j, i) = coeff(i, j);
  }
  return t;
}

std::vector<std::tuple<int, int, BigInt>> TuttePolynomial::terms() const {
  std::vector<std::tuple<int, int, BigInt>> out;
  for (int i = 0; i <= xdeg_; ++i) {
    for (int j = 0; j <= ydeg_; ++j) {
      if (coeff(i, j) != 0) out.emplace_back(i, j, coeff(i, j));
    }
  }
  return out;
}

TuttePolynomial tutte_from_census(const RankNullityCensus& c) {
  int r = c.rank();
  int s = c.nullity();
  TuttePolynomial t(r, s);
  for (int rho = 0; rho <= r; ++rho) {
    for (int nu = 0; nu <= s; ++nu) {
      const BigInt& cnt = c.at(rho, nu);
      if (cnt == 0) continue;
      for (int i = 0; i <= rho; ++i) {
        BigInt bi = binomial(rho, i) * cnt;
        if ((rho - i) % 2 != 0) bi = -bi;
        for (int j = 0; j <= nu; ++j) {
          BigInt term = bi * binomial(nu, j);
          if ((nu - j) % 2 != 0) term = -term;
          t.at(i, j) += term;
        }
      }
    }
  }
  return t;
}

namespace {

std::string delcon_key(const BinaryMatroid& m) {
  RrefResult rr = rref(m.rep());
  std::ostringstream os;
  os << rr.matrix.ncols() << ":";
  for (int i = 0; i < rr.matrix.nrows(); ++i) os << rr.matrix.row_word(i) << ",";
  return os.str();
}

struct DelconCtx {
  std::unordered_map<std::string, TuttePolynomial> memo;
  long long budget;
  long long nodes = 0;

  TuttePolynomial go(const BinaryMatroid& m) {
    if (++nodes > budget) {
      throw BudgetExhaustedError(
          "deletion-contraction exceeded its node budget of " +
          std::to_string(budget));
    }
    std::string key = delcon_key(m);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    TuttePolynomial result(0, 0);
    GF2Matrix ker = kernel_basis(m.rep());
    int pick = -1;
    int nloops = 0;
    for (int j = 0; j < m.size(); ++j) {
      bool loop = m.rep().column_is_zero(j);
      bool coloop = ker.column_is_zero(j);
      if (loop) ++nloops;
      if (!loop && !coloop && pick < 0) pick = m.label_at(j);
    }
    if (pick < 0) {
      // Loops and coloops only: x^(#coloops) y^(#loops).
      int ncoloops = m.size() - nloops;
      TuttePolynomial t(ncoloops, nloops);
      t.at(ncoloops, nloops) = 1;
      result = std::move(t);
    } else {
      TuttePolynomial td = go(m.deleted(pick));
      TuttePolynomial tc = go(m.contracted(pick));
      TuttePolynomial sum(std::max(td.xdeg(), tc.xdeg()),
                          std::max(td.ydeg(), tc.ydeg()));
      for (int i = 0; i <= sum.xdeg(); ++i) {
        for (int j = 0; j <= sum.ydeg(); ++j) {
          sum.at(i, j) = td.coeff(i, j) + tc.coeff(i, j);
        }
      }
      result = std::move(sum);
    }
    memo.emplace(std::move(key), result);
    return result;
  }
};

}  // namespace

TuttePolynomial tutte_delcon(const BinaryMatroid& m, const DelconOptions& opt) {
  DelconCtx ctx;
  ctx.budget = opt.node_budget;
  return ctx.go(m);
}

IntegerPolynomial diagonal_poly(const RankNullityCensus& c,
                                const BigInt& offset, const BigInt& scale) {
  int maxk = c.rank() + c.nullity();
  std::vector<BigInt> diag(maxk + 1);
  for (int rho = 0; rho <= c.rank(); ++rho) {
    for (int nu = 0; nu <= c.nullity(); ++nu) {
      diag[rho + nu] += c.at(rho, nu);
    }
  }
  std::vector<BigInt> out(maxk + 1);
  // power = (offset + scale z)^k, updated incrementally.
  std::vector<BigInt> power{1};
  for (int k = 0; k <= maxk; ++k) {
    if (diag[k] != 0) {
      for (size_t j = 0; j < power.size(); ++j) out[j] += diag[k] * power[j];
    }
    if (k < maxk) {
      std::vector<BigInt> next(power.size() + 1);
      for (size_t j = 0; j < power.size(); ++j) {
        next[j] += power[j] * offset;
        next[j + 1] += power[j] * scale;
      }
      power = std::move(next);
    }
  }
  return IntegerPolynomial(std::move(out));
}

}  // namespace tutteforge
