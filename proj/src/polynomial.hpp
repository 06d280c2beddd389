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

#ifndef TUTTEFORGE_POLYNOMIAL_HPP_
#define TUTTEFORGE_POLYNOMIAL_HPP_

#include <vector>

#include "bigint.hpp"

namespace tutteforge {

// Dense univariate polynomial with exact integer coefficients, stored by
// ascending degree with no zero leading coefficient.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;  // the zero polynomial
  explicit IntegerPolynomial(std::vector<BigInt> coeffs);

  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& coeff(int k) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt evaluate(const BigInt& z) const;
  BigRat evaluate(const BigRat& z) const;

  friend bool operator==(const IntegerPolynomial&,
                         const IntegerPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

// Dense univariate polynomial with exact rational coefficients in lowest
// terms (positive denominators), no zero leading coefficient.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<BigRat> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigRat& coeff(int k) const;
  const std::vector<BigRat>& coeffs() const { return coeffs_; }

  bool integer_coefficients() const;
  BigRat evaluate(const BigRat& z) const;

  friend bool operator==(const RationalPolynomial&,
                         const RationalPolynomial&) = default;

 private:
  std::vector<BigRat> coeffs_;
};

}  // namespace tutteforge

#endif  // TUTTEFORGE_POLYNOMIAL_HPP_
