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

#ifndef PERFPART_PARALLEL_H_
#define PERFPART_PARALLEL_H_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace perfpart {

// Worker count from PERFPART_THREADS, else the hardware concurrency.
int WorkerCount();

// Splits [0, total) into WorkerCount() contiguous chunks and runs
// fn(chunk_index, begin, end) for each, one thread per chunk. Returns the
// number of chunks so callers can size per-chunk result slots up front
// (use ChunkCount). Results combined in chunk order are deterministic.
int ChunkCount(std::uint64_t total);
void ParallelChunks(
    std::uint64_t total,
    const std::function<void(int, std::uint64_t, std::uint64_t)>& fn);

}  // namespace perfpart

#endif  // PERFPART_PARALLEL_H_
