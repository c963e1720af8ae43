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

#ifndef PERFPART_CONSTRUCT_GROUP_H_
#define PERFPART_CONSTRUCT_GROUP_H_

#include <vector>

#include "perfpart/permutation.h"
#include "perfpart/verifier.h"

namespace perfpart {

// The n-cycle (1 2 ... n).
Permutation LongCycle(int n);

// Left cosets g<c> of the cyclic group generated by c = (1 2 ... n), one
// per lexicographically least representative, in ascending order of the
// representative. Each coset is listed as g c^0, g c^1, ..., g c^{n-1}.
std::vector<std::vector<Permutation>> CyclicCosets(int n);

// Perfect partition of K_{n,n}: the (n-1)! left cosets of <c>.
PartitionCertificate KnnPartition(int n);

// Perfect partition of L_{2n,n}. A matching is a pair (alpha, beta) of
// bijections, rows 1..n to columns n+1..2n and rows n+1..2n to columns 1..n.
// Parts are {(g c^t, h c^{t+d}) : t = 0..n-1} over coset representatives
// g, h of <c> and offsets d = 0..n-1.
PartitionCertificate L2nnPartition(int n);

}  // namespace perfpart

#endif  // PERFPART_CONSTRUCT_GROUP_H_
