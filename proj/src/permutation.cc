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

#include "perfpart/permutation.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace perfpart {
namespace {

void CheckBijection(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1 || n > kMaxDegree) {
    throw std::invalid_argument("permutation degree must be in 1.." +
                                std::to_string(kMaxDegree));
  }
  std::vector<bool> seen(n + 1, false);
  for (int v : images) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("image " + std::to_string(v) +
                                  " outside 1.." + std::to_string(n));
    }
    if (seen[v]) {
      throw std::invalid_argument("image " + std::to_string(v) +
                                  " appears twice");
    }
    seen[v] = true;
  }
}

}  // namespace

Permutation Permutation::Identity(int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  return Permutation(images);
}

Permutation::Permutation(std::span<const int> images) {
  CheckBijection(images);
  images_.assign(images.begin(), images.end());
}

Permutation::Permutation(std::initializer_list<int> images)
    : Permutation(std::span<const int>(images.begin(), images.size())) {}

std::vector<int> Permutation::images() const {
  return {images_.begin(), images_.end()};
}

bool Permutation::IsIdentity() const { return FixedPoints() == degree(); }

int Permutation::FixedPoints() const {
  int fixed = 0;
  for (int i = 0; i < degree(); ++i) fixed += images_[i] == i + 1;
  return fixed;
}

std::uint64_t Permutation::Key() const {
  std::uint64_t key = 0;
  for (int i = degree() - 1; i >= 0; --i) {
    key = (key << 4) | static_cast<std::uint64_t>(images_[i] - 1);
  }
  return key;
}

std::string CycleForm::ToString() const {
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& cycle : cycles) {
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(cycle[k]);
    }
    out += ')';
  }
  return out;
}

Permutation ParseCycles(std::string_view text, int n) {
  if (n < 1 || n > kMaxDegree) {
    throw std::invalid_argument("degree out of range");
  }
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  std::vector<bool> used(n + 1, false);

  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse \"" + std::string(text) +
                                "\": " + why);
  };

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };

  while (true) {
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<int> cycle;
    bool closed = false;
    while (pos < text.size()) {
      const char c = text[pos];
      if (c == ')') {
        ++pos;
        closed = true;
        break;
      }
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        fail(std::string("unexpected character '") + c + "'");
      }
      int value = 0;
      if (n < 10) {
        value = c - '0';
        ++pos;
      } else {
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos]))) {
          value = value * 10 + (text[pos] - '0');
          if (value > kMaxDegree) fail("point too large");
          ++pos;
        }
      }
      if (value < 1 || value > n) {
        fail("point " + std::to_string(value) + " outside 1.." +
             std::to_string(n));
      }
      if (used[value]) fail("point " + std::to_string(value) + " repeated");
      used[value] = true;
      cycle.push_back(value);
    }
    if (!closed) fail("unbalanced parentheses");
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(images);
}

CycleForm ToCycles(const Permutation& p) {
  CycleForm form;
  const int n = p.degree();
  std::vector<bool> seen(n + 1, false);
  // Scanning starts in ascending order, so each cycle is discovered from its
  // minimum and cycles come out sorted.
  for (int start = 1; start <= n; ++start) {
    if (seen[start] || p(start) == start) continue;
    std::vector<int> cycle;
    for (int i = start; !seen[i]; i = p(i)) {
      seen[i] = true;
      cycle.push_back(i);
    }
    form.cycles.push_back(std::move(cycle));
  }
  return form;
}

std::string ToCycleString(const Permutation& p) {
  return ToCycles(p).ToString();
}

Permutation Compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("compose: degree mismatch");
  }
  std::vector<int> images(a.degree());
  for (int i = 1; i <= a.degree(); ++i) images[i - 1] = a(b(i));
  return Permutation(images);
}

Permutation Inverse(const Permutation& p) {
  std::vector<int> images(p.degree());
  for (int i = 1; i <= p.degree(); ++i) images[p(i) - 1] = i;
  return Permutation(images);
}

CycleType CycleTypeOf(const Permutation& p) {
  CycleType type;
  std::vector<bool> seen(p.degree() + 1, false);
  for (int start = 1; start <= p.degree(); ++start) {
    if (seen[start]) continue;
    int length = 0;
    for (int i = start; !seen[i]; i = p(i)) {
      seen[i] = true;
      ++length;
    }
    type.push_back(length);
  }
  std::sort(type.begin(), type.end());
  return type;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << ToCycleString(p);
}

void Canonicalize(std::vector<Permutation>& perms) {
  std::sort(perms.begin(), perms.end());
  perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
}

}  // namespace perfpart

std::size_t std::hash<perfpart::Permutation>::operator()(
    const perfpart::Permutation& p) const noexcept {
  std::size_t h = static_cast<std::size_t>(p.degree());
  for (int i = 1; i <= p.degree(); ++i) {
    h = h * 1099511628211ULL ^ static_cast<std::size_t>(p(i));
  }
  return h;
}
