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

#ifndef TUTTEFORGE_LASVERGNAS_HPP_
#define TUTTEFORGE_LASVERGNAS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "matroid.hpp"
#include "polynomial.hpp"
#include "tutte.hpp"

namespace tutteforge {

// dim(row space of the representation intersected with its kernel), the
// common part of the cocircuit and circuit spaces.
int bicycle_dimension(const BinaryMatroid& m);

// T(-1,-1) = (-1)^n (-2)^b where b is the bicycle dimension. Holds for every
// binary matroid; returning false signals an implementation bug.
bool check_rosenstiehl(const BinaryMatroid& m, const TuttePolynomial& t);

// The quotient Q(z) = T(-1+4z, -1+4z) / T(-1,-1) with exact rational
// coefficients. Q(0) = 1 by construction.
struct QPolynomial {
  RationalPolynomial poly;
  BigInt t_minus1;  // the divisor T(-1,-1)
};

QPolynomial q_polynomial(const BinaryMatroid& m, const RankNullityCensus& c);
QPolynomial q_from_census(const RankNullityCensus& c);

enum class ParityClass { kOddInteger, kEvenInteger, kNonInteger };

struct ParityVerdict {
  ParityClass cls;
  BigRat value;
};

const char* parity_class_name(ParityClass c);

ParityVerdict parity_at(const QPolynomial& q, const BigInt& z);

// T(3,3)/T(-1,-1) is an odd integer for every binary matroid; false here
// signals an implementation bug.
bool check_theorem33(const BinaryMatroid& m, const TuttePolynomial& t);

struct ZRange {
  long long lo = -16;
  long long hi = 16;
};

// Verdict of the odd-integer conjecture for one matroid. When Q has integer
// coefficients, Q(z) mod 2 depends only on z mod 2, so the parities at z=0
// and z=1 settle every integer at once (shortcut_used = true and the scanned
// range is irrelevant). Otherwise every integer in the scanned range is
// evaluated exactly and the non-odd-integer values are collected.
struct ConjectureReport {
  std::string matroid_id;
  QPolynomial q;
  bool integer_coefficients = false;
  bool shortcut_used = false;
  ZRange scanned;
  std::vector<std::pair<long long, ParityVerdict>> violations;  // z ascending

  bool holds() const { return violations.empty(); }
};

ConjectureReport check_conjecture(const BinaryMatroid& m, ZRange z_range,
                                  const CensusOptions& copt = {},
                                  const std::string& id = "");

ConjectureReport check_conjecture_with_census(const RankNullityCensus& c,
                                              ZRange z_range,
                                              const std::string& id = "");

}  // namespace tutteforge

#endif  // TUTTEFORGE_LASVERGNAS_HPP_
