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

#include "fockpath/special.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "test_helpers.hpp"

TEST(Bessel, MatchesAHighPrecisionSeriesAtTwentyPoints) {
  // Twenty points across the series range and past the switch to the
  // asymptotic expansion.
  for (int i = 0; i < 20; ++i) {
    const double x = 0.37 + 1.53 * i;
    EXPECT_NEAR(fockpath::bessel_j0(x), oracle::bessel_series_mp(0, x), 1e-11) << x;
    EXPECT_NEAR(fockpath::bessel_j1(x), oracle::bessel_series_mp(1, x), 1e-11) << x;
  }
}

TEST(Bessel, MatchesBoostOnAFineGrid) {
  double worst = 0.0;
  for (double x = 0.0; x <= 80.0; x += 0.01) {
    worst = std::max(worst, std::abs(fockpath::bessel_j0(x) - oracle::bessel_j0(x)));
    worst = std::max(worst, std::abs(fockpath::bessel_j1(x) - oracle::bessel_j1(x)));
  }
  EXPECT_LT(worst, 1e-10);
}

TEST(Bessel, ParityAndSmallArguments) {
  EXPECT_EQ(fockpath::bessel_j0(0.0), 1.0);
  EXPECT_EQ(fockpath::bessel_j1(0.0), 0.0);
  EXPECT_NEAR(fockpath::bessel_j1(-2.5), -fockpath::bessel_j1(2.5), 1e-16);
  EXPECT_NEAR(fockpath::bessel_j0(-2.5), fockpath::bessel_j0(2.5), 1e-16);
  EXPECT_NEAR(fockpath::bessel_j1(1e-6), 5e-7, 1e-18);
}

TEST(Bessel, FirstZeroOfJ1) {
  EXPECT_LT(std::abs(fockpath::bessel_j1(3.8317059702075123)), 1e-12);
}

TEST(GaussLegendre, IntegratesPolynomialsUpToDegreeTwoNMinusOneExactly) {
  for (int n : {1, 2, 5, 16, 64}) {
    const auto rule = fockpath::gauss_legendre(n);
    ASSERT_EQ(static_cast<int>(rule.nodes.size()), n);
    for (int k = 0; k <= 2 * n - 1 && k <= 40; ++k) {
      double sum = 0.0;
      for (int i = 0; i < n; ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], k);
      const double exact = k % 2 == 1 ? 0.0 : 2.0 / (k + 1);
      EXPECT_NEAR(sum, exact, 1e-14) << "n " << n << " k " << k;
    }
  }
}

TEST(GaussLegendre, NodesAreSortedAndSymmetric) {
  const auto rule = fockpath::gauss_legendre(257);
  for (std::size_t i = 0; i + 1 < rule.nodes.size(); ++i) EXPECT_LT(rule.nodes[i], rule.nodes[i + 1]);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    EXPECT_NEAR(rule.nodes[i], -rule.nodes[rule.nodes.size() - 1 - i], 1e-15);
    EXPECT_GT(rule.weights[i], 0.0);
  }
}

TEST(GaussLegendre, RejectsEmptyRules) {
  EXPECT_FOCKPATH_ERROR(fockpath::gauss_legendre(0), fockpath::ErrorCode::kInvalidArgument);
}
