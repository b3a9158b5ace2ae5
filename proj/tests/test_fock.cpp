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

#include "fockpath/fock.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "test_helpers.hpp"

using fockpath::Axis;
using fockpath::ErrorCode;
using fockpath::FockBasisState;
using fockpath::ModeId;
using fockpath::Terms;

TEST(ModeId, LabelsNameThePortAxisAndBasis) {
  EXPECT_EQ(ModeId("a", Axis::kX).label(), "a.x");
  EXPECT_EQ(ModeId("o3", Axis::kY).label(), "o3.y");
  EXPECT_EQ(ModeId("a", Axis::kX, std::numbers::pi / 4).label(), "a.x@45");
}

TEST(ModeId, BasisAngleIsCanonical) {
  const double b = 0.3;
  EXPECT_EQ(ModeId("a", Axis::kX, b), ModeId("a", Axis::kX, b + 2 * std::numbers::pi));
  EXPECT_EQ(ModeId("a", Axis::kX, -0.0), ModeId("a", Axis::kX, 0.0));
  EXPECT_EQ(ModeId("a", Axis::kX, 1e-15), ModeId("a", Axis::kX, 0.0));
  EXPECT_FALSE(std::signbit(ModeId("a", Axis::kX, -0.0).basis()));
}

TEST(ModeId, OrdersByPortFirst) {
  EXPECT_LT(ModeId("a", Axis::kY), ModeId("b", Axis::kX));
  EXPECT_LT(ModeId("a", Axis::kX), ModeId("a", Axis::kY));
}

TEST(FockBasisState, ZeroCountsAreNotStored) {
  FockBasisState b{{ModeId("a", Axis::kX), 2}};
  b.set(ModeId("a", Axis::kX), 0);
  EXPECT_TRUE(b.empty());
  EXPECT_EQ(b, FockBasisState{});
  EXPECT_FOCKPATH_ERROR(b.set(ModeId("a", Axis::kX), -1), ErrorCode::kInvalidArgument);
}

TEST(FockBasisState, TotalsAndFactorials) {
  FockBasisState b{{ModeId("a", Axis::kX), 3}, {ModeId("b", Axis::kY), 2}};
  EXPECT_EQ(b.total(), 5);
  EXPECT_EQ(b.factorial_product(), 12.0);
  b.add(ModeId("b", Axis::kY), 1);
  EXPECT_EQ(b.count(ModeId("b", Axis::kY)), 3);
}

TEST(Normalize, ScalesToUnitNormAndPrunes) {
  const FockBasisState x{{ModeId("a", Axis::kX), 1}};
  const FockBasisState y{{ModeId("a", Axis::kY), 1}};
  const FockBasisState tiny{{ModeId("b", Axis::kX), 1}};
  const auto s = fockpath::normalize(Terms{{x, 3.0}, {y, {0.0, 4.0}}, {tiny, 1e-20}});
  EXPECT_NEAR(std::abs(s.amplitude(x) - 0.6), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude(y) - std::complex<double>(0, 0.8)), 0.0, 1e-15);
  EXPECT_EQ(s.terms().size(), 2u);
  EXPECT_TRUE(s.has_port("a"));
  EXPECT_TRUE(s.has_port("b"));  // ports named by pruned modes are kept
}

TEST(Normalize, RejectsNullAndNonFiniteStates) {
  const FockBasisState x{{ModeId("a", Axis::kX), 1}};
  EXPECT_FOCKPATH_ERROR(fockpath::normalize(Terms{}), ErrorCode::kNullState);
  EXPECT_FOCKPATH_ERROR(fockpath::normalize(Terms{{x, 0.0}}), ErrorCode::kNullState);
  EXPECT_FOCKPATH_ERROR(fockpath::normalize(Terms{{x, std::nan("")}}), ErrorCode::kInvalidArgument);
}

TEST(Tensor, MultipliesAmplitudesOverDisjointPorts) {
  const FockBasisState ax{{ModeId("a", Axis::kX), 1}};
  const FockBasisState ay{{ModeId("a", Axis::kY), 1}};
  const FockBasisState bx{{ModeId("b", Axis::kX), 2}};
  const auto a = fockpath::normalize(Terms{{ax, 1.0}, {ay, 1.0}});
  const auto b = fockpath::normalize(Terms{{bx, 1.0}});
  const auto ab = fockpath::tensor(a, b);
  FockBasisState joint = ax;
  joint.add(ModeId("b", Axis::kX), 2);
  EXPECT_NEAR(std::abs(ab.amplitude(joint) - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
  EXPECT_FOCKPATH_ERROR(fockpath::tensor(a, a), ErrorCode::kModeMismatch);
}

TEST(InnerProduct, IsConjugateLinearInTheFirstArgument) {
  const FockBasisState x{{ModeId("a", Axis::kX), 1}};
  const FockBasisState y{{ModeId("a", Axis::kY), 1}};
  const auto s = fockpath::normalize(Terms{{x, 1.0}, {y, {0.0, 1.0}}});
  const auto t = fockpath::normalize(Terms{{y, 1.0}});
  testing_helpers::expect_complex_near(fockpath::inner_product(t, s), {0.0, 1.0 / std::sqrt(2.0)}, 1e-15);
  testing_helpers::expect_complex_near(fockpath::inner_product(s, s), 1.0, 1e-15);
}

TEST(NumberDistribution, MarginalizesPolarizationAndOtherPorts) {
  const FockBasisState b1{{ModeId("a", Axis::kX), 1}, {ModeId("a", Axis::kY), 1}};
  const FockBasisState b2{{ModeId("b", Axis::kX), 2}};
  const auto s = fockpath::normalize(Terms{{b1, 1.0}, {b2, 1.0}});
  const auto d = fockpath::number_distribution(s, {"a"});
  EXPECT_NEAR(d.at({2}), 0.5, 1e-15);
  EXPECT_NEAR(d.at({0}), 0.5, 1e-15);
  EXPECT_NEAR(fockpath::expected_photon_number(s, "a"), 1.0, 1e-15);
  EXPECT_FOCKPATH_ERROR(fockpath::number_distribution(s, {"zz"}), ErrorCode::kUnknownPort);
}

TEST(RoundSignificant, KeepsTwelveDigitsAndDropsNegativeZero) {
  EXPECT_EQ(fockpath::round_significant(1.23456789012345), 1.23456789012);
  EXPECT_EQ(fockpath::round_significant(-1e-30 * 0.0), 0.0);
  EXPECT_FALSE(std::signbit(fockpath::round_significant(-0.0)));
  EXPECT_EQ(fockpath::round_significant(0.0), 0.0);
}

TEST(ToJson, ListsOccupanciesAndRoundedAmplitudes) {
  const FockBasisState b{{ModeId("o3", Axis::kX), 1}, {ModeId("o4", Axis::kX), 1}};
  const auto s = fockpath::normalize(Terms{{b, {0.0, 1.0}}});
  const auto j = fockpath::to_json(s);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["occupancy"]["o3.x"], 1);
  EXPECT_EQ(j[0]["im"], 1.0);
  EXPECT_EQ(j[0]["re"], 0.0);
}
