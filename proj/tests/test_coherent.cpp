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

#include "fockpath/coherent.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fockpath/circuit.hpp"
#include "fockpath/elements.hpp"
#include "fockpath/paths.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using fockpath::Amplitude;
using fockpath::Axis;
using fockpath::ErrorCode;
using fockpath::ModeId;
using testing_helpers::expect_complex_near;

TEST(PoissonTail, MatchesTheIncompleteGammaFunction) {
  for (double mean : {0.01, 0.5, 1.21, 5.0, 20.0}) {
    for (int n : {0, 1, 3, 10, 25, 40, 60}) {
      const double expected = oracle::poisson_tail(mean, n);
      const double actual = fockpath::poisson_tail(mean, n);
      if (expected < 1e-300) {
        EXPECT_LT(actual, 1e-290);
      } else {
        EXPECT_NEAR(actual / expected, 1.0, 1e-9) << "mean " << mean << " n " << n;
      }
    }
  }
  EXPECT_EQ(fockpath::poisson_tail(0.0, 0), 0.0);
}

TEST(DefaultTruncation, IsTheSmallestAdequateCutoff) {
  for (Amplitude g : {Amplitude(0.3, 0.2), Amplitude(1.1, 0.0), Amplitude(0.4, 0.3), Amplitude(0.0, 2.5)}) {
    const int n = fockpath::default_truncation(g, 200);
    EXPECT_LT(oracle::poisson_tail(std::norm(g), n), fockpath::kCoherentTailTolerance);
    if (n > 0) {
      EXPECT_GE(oracle::poisson_tail(std::norm(g), n - 1), fockpath::kCoherentTailTolerance);
    }
  }
  EXPECT_FOCKPATH_ERROR(fockpath::default_truncation(Amplitude(3.0, 0.0), 5), ErrorCode::kTruncationTooSmall);
}

TEST(CoherentCoefficients, FollowThePoissonAmplitudes) {
  const Amplitude g(0.7, -0.4);
  const auto c = fockpath::coherent_fock_coefficients({g, 30});
  Amplitude expected = std::exp(-std::norm(g) / 2);
  for (int n = 0; n <= 30; ++n) {
    expect_complex_near(c[n], expected, 1e-15);
    expected *= g / std::sqrt(n + 1.0);
  }
  EXPECT_FOCKPATH_ERROR(fockpath::coherent_fock_coefficients({g, 2}), ErrorCode::kTruncationTooSmall);
}

TEST(CoherentState, HasPoissonPhotonStatistics) {
  const Amplitude g(1.1, 0.0);
  const auto s = fockpath::coherent_state({g, 40}, ModeId("a", Axis::kX));
  const auto d = fockpath::number_distribution(s, {"a"});
  const double mean = std::norm(g);
  for (int n = 0; n <= 10; ++n) {
    const double pmf = std::exp(-mean) * std::pow(mean, n) / oracle::fact(n);
    EXPECT_NEAR(d.at({n}), pmf, 1e-14);
  }
  EXPECT_NEAR(fockpath::expected_photon_number(s, "a"), mean, 1e-12);
}

TEST(RbsCoherentOutput, IsLinearInTheInputAmplitudes) {
  const Amplitude r = 1.0 / std::numbers::sqrt2;
  const Amplitude t(0.0, 1.0 / std::numbers::sqrt2);
  const auto [a, b] = fockpath::rbs_coherent_output(1.1, Amplitude(0.4, 0.3), r, t);
  expect_complex_near(a, r * 1.1 + t * Amplitude(0.4, 0.3), 1e-15);
  expect_complex_near(b, t * 1.1 + r * Amplitude(0.4, 0.3), 1e-15);
}

TEST(RbsCoherentOutput, TruncatedStateThroughTheEngineMatchesTheProduct) {
  const Amplitude g1(1.1, 0.0);
  const Amplitude g2(0.4, 0.3);
  const double r = 1.0 / std::numbers::sqrt2;
  const auto in = fockpath::tensor(fockpath::coherent_state({g1, 25}, ModeId("1", Axis::kX)),
                                   fockpath::coherent_state({g2, 25}, ModeId("2", Axis::kX)));
  const auto out = fockpath::paths::apply_transform(in, fockpath::make_rbs(r, Amplitude(0, r)), 50);
  const auto [b3, b4] = fockpath::rbs_coherent_output(g1, g2, r, Amplitude(0, r));
  const double f = fockpath::coherent_fidelity(out, {{ModeId("3", Axis::kX), b3}, {ModeId("4", Axis::kX), b4}});
  EXPECT_GT(f, 1.0 - 1e-8);
}

TEST(CoherentFidelity, AgreesWithTheSingleModeOverlapOracle) {
  const Amplitude g(0.6, 0.2);
  const Amplitude beta(0.5, 0.1);
  const auto c = fockpath::coherent_fock_coefficients({g, 30});
  const auto s = fockpath::coherent_state({g, 30}, ModeId("a", Axis::kX));
  const double expected = std::norm(oracle::coherent_overlap(beta, c));
  EXPECT_NEAR(fockpath::coherent_fidelity(s, {{ModeId("a", Axis::kX), beta}}), expected, 1e-12);
  // Closed form |<beta|gamma>|^2 = exp(-|beta - gamma|^2).
  EXPECT_NEAR(expected, std::exp(-std::norm(beta - g)), 1e-12);
}

TEST(WaveplateCoherentOutput, AppliesThePhase) {
  expect_complex_near(fockpath::waveplate_coherent_output(Amplitude(0.5, 0.0), std::numbers::pi / 2),
                      Amplitude(0.0, 0.5), 1e-16);
}

TEST(CombinePolarizedCoherent, RecoversAmplitudeAngleAndPhase) {
  const Amplitude g1 = std::polar(0.6, 0.3);
  const Amplitude g2 = std::polar(0.8, 1.0);
  const auto p = fockpath::combine_polarized_coherent(g1, g2);
  EXPECT_NEAR(std::abs(p.gamma), 1.0, 1e-15);
  EXPECT_NEAR(std::arg(p.gamma), 0.3, 1e-15);
  EXPECT_NEAR(std::cos(p.theta), 0.6, 1e-15);
  EXPECT_NEAR(p.delta_phase, 0.7, 1e-15);
  // gamma (cos theta, e^{i delta} sin theta) reproduces (g1, g2).
  expect_complex_near(p.gamma * std::cos(p.theta), g1, 1e-15);
  expect_complex_near(p.gamma * std::polar(std::sin(p.theta), p.delta_phase), g2, 1e-15);
}

TEST(CombinePolarizedCoherent, HandlesAZeroComponent) {
  const auto p = fockpath::combine_polarized_coherent(0.0, Amplitude(0.0, 2.0));
  EXPECT_NEAR(p.theta, std::numbers::pi / 2, 1e-15);
  EXPECT_EQ(p.delta_phase, 0.0);
  expect_complex_near(p.gamma, Amplitude(0.0, 2.0), 1e-15);
  EXPECT_FOCKPATH_ERROR(fockpath::combine_polarized_coherent(0.0, 0.0), ErrorCode::kInvalidArgument);
}
