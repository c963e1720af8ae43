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

#include "perfpart/construct_group.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace perfpart {

Permutation LongCycle(int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = (i + 1) % n + 1;
  return Permutation(images);
}

std::vector<std::vector<Permutation>> CyclicCosets(int n) {
  if (n < 1 || n > 10) {
    throw std::invalid_argument("cyclic cosets need 1 <= n <= 10");
  }
  const Permutation c = LongCycle(n);
  std::vector<Permutation> powers{Permutation::Identity(n)};
  for (int t = 1; t < n; ++t) powers.push_back(Compose(powers.back(), c));

  // Walking S_n in lexicographic order, the first unseen member of each
  // coset is its least element.
  std::vector<std::vector<Permutation>> cosets;
  std::set<Permutation> seen;
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  do {
    Permutation g(images);
    if (seen.contains(g)) continue;
    auto& coset = cosets.emplace_back();
    for (const auto& ct : powers) {
      coset.push_back(Compose(g, ct));
      seen.insert(coset.back());
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return cosets;
}

PartitionCertificate KnnPartition(int n) {
  PartitionCertificate cert{Graph::Complete(n), true, CyclicCosets(n)};
  cert.Canonicalize();
  return cert;
}

PartitionCertificate L2nnPartition(int n) {
  const auto cosets = CyclicCosets(n);
  PartitionCertificate cert{Graph::L(n, 2), true, {}};
  for (const auto& g : cosets) {
    for (const auto& h : cosets) {
      for (int d = 0; d < n; ++d) {
        auto& part = cert.parts.emplace_back();
        for (int t = 0; t < n; ++t) {
          const Permutation& alpha = g[t];
          const Permutation& beta = h[(t + d) % n];
          std::vector<int> images(2 * n);
          for (int i = 1; i <= n; ++i) {
            images[i - 1] = alpha(i) + n;
            images[n + i - 1] = beta(i);
          }
          part.emplace_back(images);
        }
      }
    }
  }
  cert.Canonicalize();
  return cert;
}

}  // namespace perfpart
