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

#ifndef TUTTEFORGE_BIGINT_HPP_
#define TUTTEFORGE_BIGINT_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "errors.hpp"

namespace tutteforge {

// Exact arithmetic everywhere: GMP integers and canonical rationals. No
// floating point appears anywhere in this project.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ZeroDivisorError("rational with zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

inline BigInt pow_int(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

inline bool is_integer(const BigRat& q) {
  return mpz_cmp_ui(q.get_den().get_mpz_t(), 1) == 0;
}

inline bool is_odd(const BigInt& z) { return mpz_odd_p(z.get_mpz_t()) != 0; }

// "p" when the denominator is 1, "p/q" otherwise.
inline std::string rat_to_string(const BigRat& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts an optionally signed integer "p" or a fraction "p/q". Decimal
// notation is rejected on purpose: inputs stay exact.
BigRat parse_rational(std::string_view text);

}  // namespace tutteforge

#endif  // TUTTEFORGE_BIGINT_HPP_
