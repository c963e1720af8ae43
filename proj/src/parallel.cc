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

#include "perfpart/parallel.h"

#include <cstdlib>
#include <string>

namespace perfpart {

int WorkerCount() {
  if (const char* env = std::getenv("PERFPART_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return std::min(n, 256);
    } catch (...) {
      // fall through to the hardware default
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

int ChunkCount(std::uint64_t total) {
  if (total == 0) return 0;
  return static_cast<int>(
      std::min<std::uint64_t>(total, static_cast<std::uint64_t>(WorkerCount())));
}

void ParallelChunks(
    std::uint64_t total,
    const std::function<void(int, std::uint64_t, std::uint64_t)>& fn) {
  const int chunks = ChunkCount(total);
  if (chunks == 0) return;
  const std::uint64_t step = total / chunks, extra = total % chunks;
  auto bounds = [&](int c) {
    const std::uint64_t begin = c * step + std::min<std::uint64_t>(c, extra);
    return std::pair{begin, begin + step + (static_cast<std::uint64_t>(c) < extra)};
  };
  if (chunks == 1) {
    fn(0, 0, total);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(chunks);
  for (int c = 0; c < chunks; ++c) {
    auto [begin, end] = bounds(c);
    threads.emplace_back([&fn, c, begin, end] { fn(c, begin, end); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace perfpart
