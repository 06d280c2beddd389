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

#ifndef TUTTEFORGE_CATALOG_HPP_
#define TUTTEFORGE_CATALOG_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matroid.hpp"

namespace tutteforge {

// Built-in matroids, addressable from the CLI by the names returned from
// fixture_names(). All are served with labels 0..n-1 in column order.

// Rank-6 matroid on 18 elements: an extended-Golay minor whose quotient
// Q(z) fails the odd-integer conjecture. CLI name "paper-n".
BinaryMatroid minor_n();

// Rank-9, 18-element extended-Golay minor, self-dual but not identically
// self-dual; also a counterexample. CLI name "paper-nprime".
BinaryMatroid minor_nprime();

// The extended binary Golay code matroid: rank 12, 24 elements, built as
// [I | B] with B the bordered circulant over the quadratic residues mod 11.
// Construction gates run before the value is returned: length 24, dimension
// 12, minimum weight 8, identically self-dual, and weight enumerator
// (1, 759, 2576, 759, 1) at weights (0, 8, 12, 16, 24). A gate failure
// throws VerificationError.
BinaryMatroid golay24();

// Graphic matroid of the complete graph on k vertices, 2 <= k <= 8, from the
// GF(2) vertex-edge incidence matrix reduced to full row rank.
BinaryMatroid graphic_complete(int k);

// name in {"loop", "coloop", "loop+coloop", "circuit3".."circuit8"}.
BinaryMatroid elementary(std::string_view name);

// Resolves a CLI fixture name; nullopt when unknown. With self_test set,
// additionally verifies the Rosenstiehl identity and the odd-integer theorem
// at z=1 on the fixture (census-sized work, so usable for every fixture but
// cheap only for the small ones).
std::optional<BinaryMatroid> fixture(std::string_view name,
                                     bool self_test = false);

const std::vector<std::string>& fixture_names();

// weight_enumerator[w] = number of row-space words of weight w.
std::vector<long long> weight_enumerator(const GF2Matrix& m);

}  // namespace tutteforge

#endif  // TUTTEFORGE_CATALOG_HPP_
