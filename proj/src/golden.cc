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

#include "perfpart/golden.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "golden_data.h"

namespace perfpart::golden {
namespace {

std::string Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

Part ParseRow(const std::string& row, int n) {
  Part part;
  std::size_t start = 0;
  while (start <= row.size()) {
    const auto amp = row.find('&', start);
    const std::string cell =
        Trim(std::string_view(row).substr(start, amp == std::string::npos
                                                     ? std::string::npos
                                                     : amp - start));
    if (!cell.empty()) part.push_back(ParseCycles(cell, n));
    if (amp == std::string::npos) break;
    start = amp + 1;
  }
  std::sort(part.begin(), part.end());
  return part;
}

std::set<Part> AsSet(const std::vector<Part>& parts) {
  std::set<Part> out;
  for (Part p : parts) {
    std::sort(p.begin(), p.end());
    out.insert(std::move(p));
  }
  return out;
}

}  // namespace

std::vector<Part> Table::PrintedParts() const {
  std::vector<Part> out;
  for (const auto& row : rows) out.push_back(ParseRow(row, n));
  return out;
}

std::vector<Part> Table::Parts() const {
  std::vector<std::string> fixed = rows;
  for (const auto& e : errata) {
    std::string& row = fixed.at(e.row - 1);
    const auto at = row.find(e.printed);
    if (at == std::string::npos) {
      throw std::invalid_argument(name + ": erratum text not found in row " +
                                  std::to_string(e.row));
    }
    row.replace(at, e.printed.size(), e.corrected);
  }
  std::vector<Part> out;
  for (const auto& row : fixed) out.push_back(ParseRow(row, n));
  return out;
}

Table Parse(std::string_view name, std::string_view text) {
  Table table;
  table.name = std::string(name);
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    line = Trim(line);
    if (line.empty()) continue;
    if (line.rfind("# n ", 0) == 0) {
      table.n = std::stoi(line.substr(4));
    } else if (line[0] == '#') {
      continue;
    } else if (line.rfind("@erratum ", 0) == 0) {
      const auto colon = line.find(':');
      const auto arrow = line.find("=>");
      if (colon == std::string::npos || arrow == std::string::npos ||
          arrow < colon) {
        throw std::invalid_argument(table.name + ": bad erratum line");
      }
      table.errata.push_back(
          {std::stoi(line.substr(9, colon - 9)),
           Trim(std::string_view(line).substr(colon + 1, arrow - colon - 1)),
           Trim(std::string_view(line).substr(arrow + 2))});
    } else {
      table.rows.push_back(line);
    }
  }
  if (table.n <= 0) throw std::invalid_argument(table.name + ": missing '# n'");
  for (const auto& e : table.errata) {
    if (e.row < 1 || e.row > static_cast<int>(table.rows.size())) {
      throw std::invalid_argument(table.name + ": erratum row out of range");
    }
  }
  table.PrintedParts();
  table.Parts();
  return table;
}

std::vector<std::string> TableNames() {
  return {"t1", "zone2", "zone3", "zone4", "zone5", "zone6", "t3", "t4", "l41"};
}

Table Load(std::string_view name) {
  const auto& tables = internal::EmbeddedTables();
  const auto it = tables.find(name);
  if (it == tables.end()) {
    throw std::invalid_argument("no golden table \"" + std::string(name) + "\"");
  }
  return Parse(name, it->second);
}

std::string Diff::ToString() const {
  std::string out;
  auto dump = [&out](char sign, const std::vector<Part>& parts) {
    for (const auto& part : parts) {
      out += sign;
      for (const auto& p : part) out += " " + ToCycleString(p);
      out += "\n";
    }
  };
  dump('-', missing);
  dump('+', unexpected);
  return out;
}

Diff Compare(const std::vector<Part>& built, const std::vector<Part>& expected) {
  const std::set<Part> b = AsSet(built), e = AsSet(expected);
  Diff diff;
  std::set_difference(e.begin(), e.end(), b.begin(), b.end(),
                      std::back_inserter(diff.missing));
  std::set_difference(b.begin(), b.end(), e.begin(), e.end(),
                      std::back_inserter(diff.unexpected));
  return diff;
}

}  // namespace perfpart::golden
