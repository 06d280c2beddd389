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

#ifndef TUTTEFORGE_MATRIX_IO_HPP_
#define TUTTEFORGE_MATRIX_IO_HPP_

#include <string>
#include <string_view>

#include "matroid.hpp"

namespace tutteforge {

// Text format for matrices:
//
//   # comment lines start with '#'
//   r n reduced|full
//   <r lines of contiguous 0/1 characters>
//
// For "reduced" the body is the r x (n-r) matrix D of [I_r | D]; for "full"
// it is the whole r x n representation. Trailing whitespace is ignored.
// Parse failures throw ParseError with the offending 1-based line number.
BinaryMatroid parse_matrix_text(std::string_view text);

// Reads the file and parses it. Missing/unreadable files throw UsageError.
BinaryMatroid load_matrix_file(const std::string& path);

// Serializes as a "full" matrix document; re-reading yields a matroid with
// the same census.
std::string write_matrix_text(const BinaryMatroid& m,
                              const std::string& comment = "");

}  // namespace tutteforge

#endif  // TUTTEFORGE_MATRIX_IO_HPP_
