// Copyright 2026 The fockpath Authors
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

#include "fockpath/combinatorics.hpp"

#include <array>
#include <string>

#include "fockpath/error.hpp"

namespace fockpath {

namespace {

constexpr int kMaxFactorial = 170;

constexpr std::array<double, kMaxFactorial + 1> make_factorials() {
  std::array<double, kMaxFactorial + 1> table{};
  table[0] = 1.0;
  for (int i = 1; i <= kMaxFactorial; ++i) table[i] = table[i - 1] * i;
  return table;
}

constexpr auto kFactorials = make_factorials();

using PascalRow = std::array<std::uint64_t, kMaxBinomialRow + 1>;

constexpr std::array<PascalRow, kMaxBinomialRow + 1> make_pascal() {
  std::array<PascalRow, kMaxBinomialRow + 1> rows{};
  for (int n = 0; n <= kMaxBinomialRow; ++n) {
    rows[n][0] = 1;
    for (int k = 1; k <= n; ++k) rows[n][k] = rows[n - 1][k - 1] + (k < n ? rows[n - 1][k] : 0);
  }
  return rows;
}

constexpr auto kPascal = make_pascal();

}  // namespace

double factorial(int n) {
  if (n < 0 || n > kMaxFactorial) {
    throw Error(ErrorCode::kPhotonBudget, "factorial argument " + std::to_string(n) + " out of range");
  }
  return kFactorials[n];
}

std::uint64_t binomial(int n, int k) {
  if (n < 0 || n > kMaxBinomialRow) {
    throw Error(ErrorCode::kPhotonBudget, "binomial row " + std::to_string(n) + " out of range");
  }
  if (k < 0 || k > n) return 0;
  return kPascal[n][k];
}

}  // namespace fockpath
