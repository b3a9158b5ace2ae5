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

#include "fockpath/diffraction.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "test_helpers.hpp"

using fockpath::ErrorCode;
using fockpath::MirrorGeometry;
using fockpath::Vec2;
using fockpath::Vec3;

namespace {

constexpr double kPi = std::numbers::pi;

// NA = 0.05, f = 20 cm, lambda = 0.5 um, source at 2f.
MirrorGeometry reference_mirror() { return MirrorGeometry::imaging(0.2, 0.01, 0.5e-6, 0.4); }

}  // namespace

TEST(ImageDistance, FollowsTheLensEquation) {
  EXPECT_NEAR(fockpath::image_distance(0.4, 0.2), 0.4, 1e-15);
  EXPECT_NEAR(fockpath::image_distance(0.5, 0.2), 1.0 / 3.0, 1e-15);
  EXPECT_EQ(fockpath::image_distance(std::numeric_limits<double>::infinity(), 0.2), 0.2);
  EXPECT_FOCKPATH_ERROR(fockpath::image_distance(0.2, 0.2), ErrorCode::kImageAtInfinity);
}

TEST(MirrorGeometry, DerivedImagePlaneSatisfiesTheLensEquation) {
  const auto g = MirrorGeometry::imaging(0.2, 0.01, 0.5e-6, 0.7);
  EXPECT_NEAR(1 / g.z1 + 1 / g.z2, 1 / g.focal, 1e-12);
  EXPECT_NEAR(g.numerical_aperture(), 0.05, 1e-15);
  EXPECT_NEAR(g.alpha(), 1.25, 1e-15);
  MirrorGeometry bad = g;
  bad.wavelength = -1.0;
  EXPECT_FOCKPATH_ERROR(bad.validate(), ErrorCode::kInvalidArgument);
}

TEST(GeometricImage, IsInvertedAndMagnified) {
  const Vec2 p = fockpath::geometric_image_point({0.001, -0.002}, 0.4, 0.4);
  EXPECT_EQ(p.x, -0.001);
  EXPECT_EQ(p.y, 0.002);
  const Vec2 q = fockpath::geometric_image_point({0.001, 0.0}, 0.5, 1.0 / 3.0);
  EXPECT_LT(q.x, 0.0);
}

TEST(ImageOffset, IsMeasuredFromTheGeometricImage) {
  auto g = reference_mirror();
  g.source = {0.001, 0.0005};
  const Vec2 image = fockpath::geometric_image_point(g.source, g.z1, g.z2);
  const Vec2 offset = fockpath::image_offset(image, g);
  EXPECT_EQ(offset.x, 0.0);
  EXPECT_EQ(offset.y, 0.0);
  // x~2 = x2 + (z2/z1) x1
  const Vec2 o = fockpath::image_offset({0.0, 0.0}, g);
  EXPECT_NEAR(o.x, (g.z2 / g.z1) * g.source.x, 1e-18);
}

TEST(ExactPathLength, VertexPathAndSymmetry) {
  const auto g = reference_mirror();
  EXPECT_EQ(fockpath::exact_path_length({0, 0, 0.4}, {0, 0}, {0, 0, 0.4}, g), 0.8);
  const Vec3 r1{0.001, 0.002, 0.4};
  const Vec3 r2{-0.003, 0.0005, 0.35};
  const Vec2 m{0.004, -0.006};
  EXPECT_EQ(fockpath::exact_path_length(r1, m, r2, g), fockpath::exact_path_length(r2, m, r1, g));
  EXPECT_FOCKPATH_ERROR(fockpath::exact_path_length(r1, {0.01, 0.001}, r2, g), ErrorCode::kOutsideAperture);
  EXPECT_FOCKPATH_ERROR(fockpath::paraxial_path_length(r1, {0.01, 0.001}, r2, g), ErrorCode::kOutsideAperture);
}

TEST(ParaxialPathLength, VertexGivesTheConstantPhaseTerms) {
  const auto g = reference_mirror();
  const Vec3 r1{0.001, 0.002, 0.4};
  const Vec3 r2{-0.003, 0.0005, 0.4};
  const double expected = 0.8 + (1e-6 + 4e-6) / 0.8 + (9e-6 + 0.25e-6) / 0.8;
  EXPECT_NEAR(fockpath::paraxial_path_length(r1, {0, 0}, r2, g), expected, 1e-15);
}

TEST(ParaxialPathLength, UnderImagingReducesToQuarticAndLinearTerms) {
  const auto g = MirrorGeometry::imaging(0.2, 0.01, 0.5e-6, 0.55);
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const Vec3 r1{0.002 * u(rng), 0.002 * u(rng), g.z1};
    const Vec3 r2{0.002 * u(rng), 0.002 * u(rng), g.z2};
    Vec2 m{g.aperture * u(rng), g.aperture * u(rng)};
    if (m.x * m.x + m.y * m.y > g.aperture * g.aperture) m = {m.x / 2, m.y / 2};
    const double rho2 = m.x * m.x + m.y * m.y;
    const double constant = g.z1 + g.z2 + (r1.x * r1.x + r1.y * r1.y) / (2 * g.z1) +
                            (r2.x * r2.x + r2.y * r2.y) / (2 * g.z2);
    const double reduced = constant + rho2 * rho2 / (32 * g.focal * g.focal * g.focal) -
                           ((r1.x / g.z1 + r2.x / g.z2) * m.x + (r1.y / g.z1 + r2.y / g.z2) * m.y);
    const double actual = fockpath::paraxial_path_length(r1, m, r2, g);
    EXPECT_NEAR(actual / reduced, 1.0, 1e-12);
  }
}

TEST(ParaxialPathLength, StaysWithinAHundredthOfAWavelengthAtTwoF) {
  for (double na : {0.01, 0.03, 0.05}) {
    const auto g = MirrorGeometry::imaging(0.2, na * 0.2, 0.5e-6, 0.4);
    const double airy = fockpath::airy_first_zero(g);
    double worst = 0.0;
    for (int i = 0; i <= 20; ++i) {
      for (int j = 0; j <= 20; ++j) {
        const Vec2 m{g.aperture * (i - 10) / 10.0, g.aperture * (j - 10) / 10.0};
        if (m.x * m.x + m.y * m.y > g.aperture * g.aperture) continue;
        for (double r : {0.0, airy, 3 * airy}) {
          const Vec3 r1{0, 0, g.z1};
          const Vec3 r2{r, 0.5 * r, g.z2};
          const double d = std::abs(fockpath::exact_path_length(r1, m, r2, g) -
                                    fockpath::paraxial_path_length(r1, m, r2, g));
          worst = std::max(worst, d);
        }
      }
    }
    EXPECT_LT(worst, g.wavelength / 100) << "NA " << na;
    EXPECT_LT(worst, 1e-6 * (g.z1 + g.z2));
  }
}

TEST(AberrationPhase, RimValueAndQuarticScaling) {
  const auto g = reference_mirror();
  EXPECT_EQ(fockpath::aberration_phase(0.0, g), 0.0);
  EXPECT_NEAR(fockpath::aberration_phase(g.aperture, g), fockpath::rim_aberration_phase(g), 1e-12);
  EXPECT_NEAR(fockpath::rim_aberration_phase(g), kPi / 16 * 4e5 * 6.25e-6, 1e-12);
  auto wide = g;
  wide.aperture *= 2;
  EXPECT_NEAR(fockpath::aberration_phase(wide.aperture, wide) / fockpath::aberration_phase(g.aperture, g), 16.0,
              1e-12);
  EXPECT_FOCKPATH_ERROR(fockpath::aberration_phase(0.011, g), ErrorCode::kOutsideAperture);
}

TEST(AiryClosedForm, OnAxisLimitAndFirstZero) {
  const auto g = reference_mirror();
  const double disc = kPi * g.aperture * g.aperture;
  EXPECT_EQ(fockpath::airy_amplitude_closed(0.0, g), disc);
  EXPECT_NEAR(fockpath::airy_amplitude_closed(1e-15, g) / disc, 1.0, 1e-12);
  const double zero = fockpath::airy_first_zero(g);
  EXPECT_NEAR(zero / (0.6098 * g.wavelength * g.z2 / g.aperture), 1.0, 1e-3);
  EXPECT_LT(std::abs(fockpath::airy_amplitude_closed(zero, g)) / disc, 1e-12);
}

TEST(AiryClosedForm, ValueAtUnitArgumentIsPiRSquaredTimesTwoJ1OfOne) {
  const auto g = reference_mirror();
  const double rho2 = g.wavelength * g.z2 / (2 * kPi * g.aperture);  // u = 1
  const double expected = kPi * g.aperture * g.aperture * 2 * oracle::bessel_j1(1.0);
  EXPECT_NEAR(fockpath::airy_amplitude_closed(rho2, g) / expected, 1.0, 1e-12);
  EXPECT_NEAR(2 * oracle::bessel_j1(1.0), 0.880101, 1e-6);
}

TEST(AiryClosedForm, AgreesWithDirectIntegrationOfTheDisc) {
  // Independent check: 2 pi int_0^R rho J0(k rho) d rho by Simpson's rule
  // with Boost's J0.
  const auto g = reference_mirror();
  for (double frac : {0.0, 0.3, 1.0, 1.7, 2.6}) {
    const double rho2 = frac * fockpath::airy_first_zero(g);
    const double k = 2 * kPi * rho2 / (g.wavelength * g.z2);
    const double ref = 2 * kPi * oracle::simpson([k](double r) { return r * oracle::bessel_j0(k * r); }, 0.0,
                                                 g.aperture, 2000);
    EXPECT_NEAR(fockpath::airy_amplitude_closed(rho2, g), ref, 1e-10 * kPi * g.aperture * g.aperture) << frac;
  }
}

TEST(FocalQuadrature, RadialAndDiscRulesMatchTheClosedForm) {
  const auto g = reference_mirror();
  const double disc = kPi * g.aperture * g.aperture;
  const double zero = fockpath::airy_first_zero(g);
  fockpath::QuadratureOptions radial;
  radial.method = fockpath::QuadratureMethod::kRadial;
  fockpath::QuadratureOptions polar;
  polar.method = fockpath::QuadratureMethod::kDisc;
  for (int i = 0; i <= 30; ++i) {
    const double r = 3.0 * zero * i / 30;
    const double closed = fockpath::airy_amplitude_closed(r, g);
    const auto a = fockpath::focal_amplitude_quadrature({r, 0.0}, g, false, radial);
    const auto b = fockpath::focal_amplitude_quadrature({0.6 * r, 0.8 * r}, g, false, polar);
    const double scale = std::max(std::abs(closed), 1e-6 * disc);
    EXPECT_LT(std::abs(a - closed) / scale, 1e-8) << r;
    EXPECT_LT(std::abs(b - closed) / scale, 1e-8) << r;
  }
}

TEST(FocalQuadrature, NodeDoublingIsConverged) {
  const auto g = reference_mirror();
  const double disc = kPi * g.aperture * g.aperture;
  for (int i = 0; i <= 10; ++i) {
    const double r = 3.0 * fockpath::airy_first_zero(g) * i / 10;
    fockpath::QuadratureOptions coarse;
    coarse.method = fockpath::QuadratureMethod::kRadial;
    fockpath::QuadratureOptions fine = coarse;
    fine.radial_nodes = 2 * coarse.radial_nodes;
    const auto a = fockpath::focal_amplitude_quadrature({r, 0}, g, false, coarse);
    const auto b = fockpath::focal_amplitude_quadrature({r, 0}, g, false, fine);
    EXPECT_LT(std::abs(a - b) / std::max(std::abs(b), 1e-6 * disc), 1e-9);
  }
}

TEST(FocalQuadrature, TooFewNodesIsReportedAsNonConvergent) {
  const auto g = reference_mirror();
  fockpath::QuadratureOptions opts;
  opts.method = fockpath::QuadratureMethod::kRadial;
  opts.radial_nodes = 2;
  EXPECT_FOCKPATH_ERROR(fockpath::focal_amplitude_quadrature({5 * fockpath::airy_first_zero(g), 0}, g, false, opts),
                        ErrorCode::kNonConvergent);
}

TEST(FocalQuadrature, AberrationBarelyChangesTheOnAxisAmplitude) {
  const auto g = reference_mirror();
  const double disc = kPi * g.aperture * g.aperture;
  const auto a = fockpath::focal_amplitude_quadrature({0, 0}, g, true);
  const double loss = 1.0 - std::abs(a) / disc;
  EXPECT_GT(loss, 0.0);
  EXPECT_LT(loss, 0.02);
  // On axis the disc integral is 2 pi int rho e^{i c rho^4} d rho; check
  // against Simpson's rule on the real and imaginary parts.
  const double c = 2 * kPi / (32 * g.wavelength * std::pow(g.focal, 3));
  const double re = oracle::simpson([c](double r) { return r * std::cos(c * std::pow(r, 4)); }, 0, g.aperture, 4000);
  const double im = oracle::simpson([c](double r) { return r * std::sin(c * std::pow(r, 4)); }, 0, g.aperture, 4000);
  EXPECT_NEAR(a.real(), 2 * kPi * re, 1e-9 * disc);
  EXPECT_NEAR(a.imag(), 2 * kPi * im, 1e-9 * disc);
}

TEST(AiryProfile, PeaksOnAxisAndFallsMonotonicallyToTheFirstZero) {
  const auto g = reference_mirror();
  const auto samples = fockpath::airy_profile(g, 101, fockpath::airy_first_zero(g), false);
  ASSERT_EQ(samples.size(), 101u);
  EXPECT_EQ(samples.front().position.x, 0.0);
  EXPECT_NEAR(samples.back().position.x, fockpath::airy_first_zero(g), 1e-18);
  for (std::size_t i = 1; i < samples.size(); ++i) {
    EXPECT_LT(samples[i].amplitude.real(), samples[i - 1].amplitude.real());
  }
  EXPECT_FOCKPATH_ERROR(fockpath::airy_profile(g, 0, 1e-5, false), ErrorCode::kInvalidArgument);
}

TEST(AiryProfile, IsSymmetricUnderReflection) {
  const auto g = reference_mirror();
  for (double r : {1e-6, 5e-6, 2e-5}) {
    const auto a = fockpath::focal_amplitude_quadrature({r, 0}, g, false);
    const auto b = fockpath::focal_amplitude_quadrature({-r, 0}, g, false);
    EXPECT_LT(std::abs(a - b), 1e-12 * std::abs(a) + 1e-18);
  }
}
