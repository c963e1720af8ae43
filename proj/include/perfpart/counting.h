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

#ifndef PERFPART_COUNTING_H_
#define PERFPART_COUNTING_H_

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "perfpart/graph.h"

namespace perfpart {

using BigInt = boost::multiprecision::cpp_int;

// Polynomial with nonnegative integer coefficients; coefficient k is the
// coefficient of x^k. Trailing zeros are trimmed, the zero polynomial has no
// coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coefficient(int k) const;

  IntPolynomial operator*(const IntPolynomial& other) const;
  IntPolynomial Pow(int exponent) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

BigInt Factorial(int n);
BigInt Binomial(int n, int k);

// Rook polynomial of the full r x r board: sum_k k! C(r,k)^2 x^k.
IntPolynomial RookBlock(int r);

// Number of perfect matchings of L_{rm,r} by inclusion-exclusion over the
// forbidden diagonal blocks:
//   sum_{k=0..n} (-1)^k a_k (n-k)!,  sum_k a_k x^k = RookBlock(r)^m.
// r == 0 (K_{n,n}) reads n from `params.n`.
BigInt CountMatchings(const LParams& params);
// r == 0 counts K_{m,m}.
BigInt CountMatchings(int r, int m);

// Exact permanent by Ryser's formula with Gray-code column updates.
// Throws std::length_error when n > kRyserMaxN.
inline constexpr int kRyserMaxN = 30;
BigInt RyserPermanent(const Graph& graph);

struct CountReport {
  int n = 0;
  int r = 0;  // 0 with m == 0 for explicit matrices
  int m = 0;
  std::optional<BigInt> rook_count;
  std::optional<BigInt> oracle_count;
  int degree = 0;
  bool divisible = false;

  // Rook count when available, else the oracle count.
  const BigInt& count() const;
  // count / degree when divisible.
  std::optional<BigInt> parts() const;
};

// Compares the matching count against the regularity degree, the trivial
// necessary condition for a perfect partition. L graphs use the rook formula
// (plus Ryser when `with_oracle`); explicit matrices always use Ryser.
// Throws std::domain_error("not regular") for irregular graphs.
CountReport NecessaryCondition(const Graph& graph, bool with_oracle = false);

std::string ToString(const BigInt& value);

}  // namespace perfpart

#endif  // PERFPART_COUNTING_H_
