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

#include "polynomial.hpp"

#include <cstddef>
#include <string>
#include <utility>

namespace tutteforge {

namespace {
const BigInt kZeroInt = 0;
const BigRat kZeroRat = 0;
}  // namespace

IntegerPolynomial::IntegerPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntegerPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZeroInt;
  return coeffs_[k];
}

BigInt IntegerPolynomial::evaluate(const BigInt& z) const {
  BigInt acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i];
  return acc;
}

BigRat IntegerPolynomial::evaluate(const BigRat& z) const {
  BigRat acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + BigRat(coeffs_[i]);
  return acc;
}

RationalPolynomial::RationalPolynomial(std::vector<BigRat> coeffs)
    : coeffs_(std::move(coeffs)) {
  for (BigRat& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigRat& RationalPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZeroRat;
  return coeffs_[k];
}

bool RationalPolynomial::integer_coefficients() const {
  for (const BigRat& c : coeffs_) {
    if (!is_integer(c)) return false;
  }
  return true;
}

BigRat RationalPolynomial::evaluate(const BigRat& z) const {
  BigRat acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i];
  return acc;
}

BigRat parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) -> BigInt {
    if (s.empty()) throw UsageError("empty number");
    size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (start == s.size()) throw UsageError("sign without digits");
    for (size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw UsageError("bad rational '" + std::string(s) +
                         "': expected p or p/q in decimal digits");
      }
    }
    return BigInt(std::string(s), 10);
  };
  size_t slash = text.find('/');
  if (slash == std::string_view::npos) return BigRat(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  return make_rat(num, den);
}

}  // namespace tutteforge
