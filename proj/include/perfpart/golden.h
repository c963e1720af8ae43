// Copyright 2026 The perfpart Authors
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

// Printed reference tables, embedded at build time from data/golden/.
//
// File format: one part per line, cells separated by '&' and written in
// cycle notation. '#' starts a comment line. A line
//   @erratum ROW: PRINTED => CORRECTED
// replaces the text PRINTED by CORRECTED in data row ROW (1-based); the
// verbatim rows are kept so the correction itself can be checked.

#ifndef PERFPART_GOLDEN_H_
#define PERFPART_GOLDEN_H_

#include <string>
#include <string_view>
#include <vector>

#include "perfpart/permutation.h"

namespace perfpart::golden {

using Part = std::vector<Permutation>;

struct Erratum {
  int row = 0;
  std::string printed;
  std::string corrected;
};

struct Table {
  std::string name;
  int n = 0;
  std::vector<std::string> rows;  // as printed
  std::vector<Erratum> errata;

  // Rows parsed as written, and with the errata applied. Each part is
  // sorted; the row order is kept.
  std::vector<Part> PrintedParts() const;
  std::vector<Part> Parts() const;
};

// Throws std::invalid_argument on a malformed table.
Table Parse(std::string_view name, std::string_view text);

// Names of the embedded tables: t1, zone2 ... zone6, t3, t4, l41.
std::vector<std::string> TableNames();
// Throws std::invalid_argument for an unknown name.
Table Load(std::string_view name);

// Set difference of two lists of parts, each part compared as a set.
struct Diff {
  std::vector<Part> missing;     // expected but not built
  std::vector<Part> unexpected;  // built but not expected
  bool empty() const { return missing.empty() && unexpected.empty(); }
  std::string ToString() const;
};
Diff Compare(const std::vector<Part>& built, const std::vector<Part>& expected);

}  // namespace perfpart::golden

#endif  // PERFPART_GOLDEN_H_
