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

#include "lasvergnas.hpp"

#include <utility>

#include "errors.hpp"
#include "gf2.hpp"

namespace tutteforge {

int bicycle_dimension(const BinaryMatroid& m) {
  GF2Matrix ker = kernel_basis(m.rep());
  int r = m.rank();
  int corank = m.size() - r;
  return r + corank - sum_dim(m.rep(), ker);
}

bool check_rosenstiehl(const BinaryMatroid& m, const TuttePolynomial& t) {
  BigInt lhs = t.evaluate(BigInt(-1), BigInt(-1));
  BigInt rhs = pow_int(-2, bicycle_dimension(m));
  if (m.size() % 2 != 0) rhs = -rhs;
  return lhs == rhs;
}

QPolynomial q_from_census(const RankNullityCensus& c) {
  IntegerPolynomial p = diagonal_poly(c, -2, 4);
  BigInt divisor = p.coeff(0);  // T(-1,-1)
  if (divisor == 0) {
    throw ZeroDivisorError("T(-1,-1) = 0; not a binary matroid census");
  }
  std::vector<BigRat> coeffs;
  coeffs.reserve(p.degree() + 1);
  for (int k = 0; k <= p.degree(); ++k) {
    coeffs.push_back(make_rat(p.coeff(k), divisor));
  }
  QPolynomial q{RationalPolynomial(std::move(coeffs)), divisor};
  if (q.poly.evaluate(BigRat(0)) != 1) {
    throw VerificationError("Q(0) != 1");
  }
  return q;
}

QPolynomial q_polynomial(const BinaryMatroid& m, const RankNullityCensus& c) {
  if (c.rank() != m.rank() || c.size() != m.size()) {
    throw DimensionMismatchError("census does not match the matroid");
  }
  return q_from_census(c);
}

const char* parity_class_name(ParityClass c) {
  switch (c) {
    case ParityClass::kOddInteger:
      return "odd-integer";
    case ParityClass::kEvenInteger:
      return "even-integer";
    case ParityClass::kNonInteger:
      return "non-integer";
  }
  return "?";
}

ParityVerdict parity_at(const QPolynomial& q, const BigInt& z) {
  BigRat value = q.poly.evaluate(BigRat(z));
  ParityClass cls;
  if (!is_integer(value)) {
    cls = ParityClass::kNonInteger;
  } else if (is_odd(value.get_num())) {
    cls = ParityClass::kOddInteger;
  } else {
    cls = ParityClass::kEvenInteger;
  }
  return {cls, std::move(value)};
}

bool check_theorem33(const BinaryMatroid&, const TuttePolynomial& t) {
  BigRat at33(t.evaluate(BigInt(3), BigInt(3)));
  BigRat at11(t.evaluate(BigInt(-1), BigInt(-1)));
  if (at11 == 0) throw ZeroDivisorError("T(-1,-1) = 0");
  BigRat v = at33 / at11;
  v.canonicalize();
  return is_integer(v) && is_odd(v.get_num());
}

ConjectureReport check_conjecture_with_census(const RankNullityCensus& c,
                                              ZRange z_range,
                                              const std::string& id) {
  if (z_range.lo > z_range.hi) {
    throw UsageError("empty z range [" + std::to_string(z_range.lo) + ", " +
                     std::to_string(z_range.hi) + "]");
  }
  ConjectureReport report;
  report.matroid_id = id;
  report.q = q_from_census(c);
  report.scanned = z_range;
  report.integer_coefficients = report.q.poly.integer_coefficients();

  if (report.integer_coefficients) {
    // Q(z) mod 2 depends only on z mod 2, so two evaluations settle every
    // integer. Q(0) = 1 is odd by construction; only z = 1 can fail.
    report.shortcut_used = true;
    ParityVerdict at1 = parity_at(report.q, 1);
    if (at1.cls != ParityClass::kOddInteger) {
      report.violations.emplace_back(1, std::move(at1));
    }
    return report;
  }

  for (long long z = z_range.lo; z <= z_range.hi; ++z) {
    ParityVerdict v = parity_at(report.q, BigInt(static_cast<long>(z)));
    if (v.cls != ParityClass::kOddInteger) {
      report.violations.emplace_back(z, std::move(v));
    }
  }
  return report;
}

ConjectureReport check_conjecture(const BinaryMatroid& m, ZRange z_range,
                                  const CensusOptions& copt,
                                  const std::string& id) {
  RankNullityCensus c = census(m, copt);
  return check_conjecture_with_census(c, z_range, id);
}

}  // namespace tutteforge
