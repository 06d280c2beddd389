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

#include "matrix_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "errors.hpp"

namespace tutteforge {

namespace {

struct Line {
  int number;
  std::string text;
};

// Content lines: comments, blank lines, and trailing whitespace removed.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view raw = (eol == std::string_view::npos)
                               ? text.substr(pos)
                               : text.substr(pos, eol - pos);
    ++number;
    while (!raw.empty() && (raw.back() == ' ' || raw.back() == '\t' ||
                            raw.back() == '\r')) {
      raw.remove_suffix(1);
    }
    size_t first = raw.find_first_not_of(" \t");
    if (first != std::string_view::npos && raw[first] != '#') {
      out.push_back(Line{number, std::string(raw)});
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return out;
}

}  // namespace

BinaryMatroid parse_matrix_text(std::string_view text) {
  std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header line");

  std::istringstream header(lines[0].text);
  long r = -1, n = -1;
  std::string kind, extra;
  if (!(header >> r >> n >> kind) || (header >> extra)) {
    throw ParseError(lines[0].number,
                     "header must be 'r n reduced|full', got '" +
                         lines[0].text + "'");
  }
  if (kind != "reduced" && kind != "full") {
    throw ParseError(lines[0].number,
                     "matrix kind must be 'reduced' or 'full', got '" + kind +
                         "'");
  }
  if (r < 0 || n < 0 || r > n) {
    throw ParseError(lines[0].number, "need 0 <= r <= n");
  }
  if (n > GF2Vector::kMaxLength) {
    throw ParseError(lines[0].number, "at most 64 elements supported");
  }
  bool reduced = kind == "reduced";
  int body_cols = reduced ? static_cast<int>(n - r) : static_cast<int>(n);

  if (static_cast<long>(lines.size()) - 1 < r) {
    throw ParseError(lines.empty() ? 1 : lines.back().number,
                     "expected " + std::to_string(r) + " matrix rows, got " +
                         std::to_string(lines.size() - 1));
  }
  if (static_cast<long>(lines.size()) - 1 > r) {
    throw ParseError(lines[r + 1].number, "unexpected extra line");
  }

  GF2Matrix body(static_cast<int>(r), body_cols);
  for (long i = 0; i < r; ++i) {
    const Line& line = lines[i + 1];
    if (static_cast<int>(line.text.size()) != body_cols) {
      throw ParseError(line.number,
                       "expected " + std::to_string(body_cols) +
                           " characters, got " +
                           std::to_string(line.text.size()));
    }
    for (int j = 0; j < body_cols; ++j) {
      char c = line.text[j];
      if (c == '1') {
        body.set(static_cast<int>(i), j, true);
      } else if (c != '0') {
        throw ParseError(line.number,
                         std::string("bad character '") + c +
                             "'; rows are contiguous 0/1 strings");
      }
    }
  }

  return reduced ? BinaryMatroid::from_reduced(body)
                 : BinaryMatroid::from_full(body);
}

BinaryMatroid load_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open matrix file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_text(buf.str());
}

std::string write_matrix_text(const BinaryMatroid& m,
                              const std::string& comment) {
  std::ostringstream os;
  if (!comment.empty()) os << "# " << comment << "\n";
  os << m.rank() << " " << m.size() << " full\n";
  for (const std::string& row : m.rep().to_strings()) os << row << "\n";
  return os.str();
}

}  // namespace tutteforge
