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

#include "perfpart/counting.h"

#include <bit>
#include <stdexcept>

#include "perfpart/parallel.h"

namespace perfpart {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
  if (coeffs_.empty() || other.coeffs_.empty()) return {};
  std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::Pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  IntPolynomial result({1});
  IntPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

BigInt Factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

BigInt Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

IntPolynomial RookBlock(int r) {
  if (r < 0) throw std::invalid_argument("negative block size");
  std::vector<BigInt> coeffs(r + 1);
  for (int k = 0; k <= r; ++k) {
    const BigInt c = Binomial(r, k);
    coeffs[k] = Factorial(k) * c * c;
  }
  return IntPolynomial(std::move(coeffs));
}

BigInt CountMatchings(const LParams& params) {
  if (params.r < 0 || params.m < 1) {
    throw std::invalid_argument("need r >= 0 and m >= 1");
  }
  const int n = params.r == 0 ? params.n : params.r * params.m;
  if (n < 0) throw std::invalid_argument("negative size");
  const IntPolynomial rooks = RookBlock(params.r).Pow(params.m);
  // Alternating sum, split by sign so BigInt stays nonnegative throughout.
  BigInt positive = 0, negative = 0;
  for (int k = 0; k <= n; ++k) {
    const BigInt term = rooks.coefficient(k) * Factorial(n - k);
    (k % 2 == 0 ? positive : negative) += term;
  }
  return positive - negative;
}

BigInt CountMatchings(int r, int m) {
  return CountMatchings(r == 0 ? LParams{0, 1, m} : LParams{r, m, 0});
}

namespace {

// Signed Ryser sum over Gray-code indices [begin, end). Row sums for the
// subset gray(begin) are built directly, then updated one column per step.
template <typename Acc>
Acc RyserRange(const Graph& graph, std::uint64_t begin, std::uint64_t end) {
  const int n = graph.n();
  std::vector<std::uint64_t> cols(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (graph.edge(i + 1, j + 1)) cols[j] |= std::uint64_t{1} << i;
    }
  }
  std::vector<int> row_sums(n, 0);
  std::uint64_t subset = begin ^ (begin >> 1);
  for (int j = 0; j < n; ++j) {
    if ((subset >> j) & 1U) {
      for (int i = 0; i < n; ++i) row_sums[i] += (cols[j] >> i) & 1U;
    }
  }
  Acc total = 0;
  for (std::uint64_t k = begin; k < end; ++k) {
    if (k != begin) {
      const int j = std::countr_zero(k);
      const int delta = ((subset >> j) & 1U) ? -1 : 1;
      subset ^= std::uint64_t{1} << j;
      for (std::uint64_t bits = cols[j]; bits; bits &= bits - 1) {
        row_sums[std::countr_zero(bits)] += delta;
      }
    }
    if (subset == 0) continue;
    Acc product = 1;
    for (int i = 0; i < n && product != 0; ++i) product *= row_sums[i];
    if (product == 0) continue;
    const bool negative = ((n - std::popcount(subset)) & 1) != 0;
    if (negative) {
      total -= product;
    } else {
      total += product;
    }
  }
  return total;
}

BigInt ToBig(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                            : static_cast<unsigned __int128>(v);
  BigInt b = static_cast<std::uint64_t>(u >> 64);
  b <<= 64;
  b += static_cast<std::uint64_t>(u);
  return neg ? BigInt(-b) : b;
}

}  // namespace

BigInt RyserPermanent(const Graph& graph) {
  const int n = graph.n();
  if (n > kRyserMaxN) {
    throw std::length_error("Ryser oracle supports n <= " +
                            std::to_string(kRyserMaxN));
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  const int chunks = ChunkCount(total);
  // n^n * 2^n stays below 2^127 up to n = 22.
  if (n <= 22) {
    std::vector<__int128> partial(chunks, 0);
    ParallelChunks(total, [&](int c, std::uint64_t b, std::uint64_t e) {
      partial[c] = RyserRange<__int128>(graph, b, e);
    });
    BigInt sum = 0;
    for (auto p : partial) sum += ToBig(p);
    return sum;
  }
  std::vector<BigInt> partial(chunks, 0);
  ParallelChunks(total, [&](int c, std::uint64_t b, std::uint64_t e) {
    partial[c] = RyserRange<BigInt>(graph, b, e);
  });
  BigInt sum = 0;
  for (const auto& p : partial) sum += p;
  return sum;
}

const BigInt& CountReport::count() const {
  return rook_count ? *rook_count : *oracle_count;
}

std::optional<BigInt> CountReport::parts() const {
  if (!divisible || degree == 0) return std::nullopt;
  return count() / degree;
}

CountReport NecessaryCondition(const Graph& graph, bool with_oracle) {
  CountReport report;
  report.n = graph.n();
  report.degree = graph.Degree();
  if (const auto& params = graph.l_params()) {
    report.r = params->r;
    report.m = params->m;
    report.rook_count = CountMatchings(*params);
    if (with_oracle) report.oracle_count = RyserPermanent(graph);
  } else {
    report.oracle_count = RyserPermanent(graph);
  }
  report.divisible =
      report.degree != 0 && report.count() % report.degree == 0;
  return report;
}

std::string ToString(const BigInt& value) { return value.str(); }

}  // namespace perfpart
