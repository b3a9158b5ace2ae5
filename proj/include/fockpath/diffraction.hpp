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

// Single-photon focusing by a paraboloidal mirror z = (x^2 + y^2) / 4f.
// Every point of the circular aperture is an indistinguishable path from the
// source to the observation point with amplitude exp(i 2 pi L / lambda); the
// focal-plane amplitude is the sum over the aperture. All lengths in meters.

#pragma once

#include <vector>

#include "fockpath/fock.hpp"

namespace fockpath {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

struct MirrorGeometry {
  double focal = 0.0;       // f
  double aperture = 0.0;    // R, aperture radius
  double wavelength = 0.0;  // vacuum wavelength
  double z1 = 0.0;          // source plane
  double z2 = 0.0;          // image plane
  Vec2 source;              // (x1, y1)

  /// Geometry with z2 from the imaging condition 1/z1 + 1/z2 = 1/f.
  static MirrorGeometry imaging(double focal, double aperture, double wavelength, double z1,
                                Vec2 source = {});

  double numerical_aperture() const { return aperture / focal; }
  double alpha() const { return 1.0 / (4.0 * focal); }

  /// Throws kInvalidArgument unless f, R, lambda, z1, z2 are positive and finite.
  void validate() const;
};

/// L1 + L2 through the mirror point (x, y, (x^2 + y^2)/4f), no approximation.
double exact_path_length(const Vec3& r1, const Vec2& mirror, const Vec3& r2, const MirrorGeometry& g);

/// First-order expansion of each square root about the z distances, with the
/// mirror sag z = alpha (x^2 + y^2) kept in the (x^2 + y^2 + z^2) and -2z terms.
double paraxial_path_length(const Vec3& r1, const Vec2& mirror, const Vec3& r2, const MirrorGeometry& g);

/// 1 / (1/f - 1/z1). z1 may be +infinity. Throws kImageAtInfinity for z1 = f.
double image_distance(double z1, double focal);

/// -(z2/z1) (x1, y1).
Vec2 geometric_image_point(const Vec2& source, double z1, double z2);

/// Image-plane point measured from the geometric image: x2 + (z2/z1) x1.
Vec2 image_offset(const Vec2& image_plane_point, const MirrorGeometry& g);

/// Spherical-aberration phase 2 pi rho^4 / (32 lambda f^3) left by the
/// paraxial expansion at aperture radius rho.
double aberration_phase(double rho, const MirrorGeometry& g);

/// (pi/16) (f/lambda) NA^4, the aberration phase at the rim.
double rim_aberration_phase(const MirrorGeometry& g);

/// R J1(2 pi R rho2 / (lambda z2)) / (rho2 / (lambda z2)); pi R^2 at rho2 = 0.
/// rho2 is measured from the geometric image point.
double airy_amplitude_closed(double rho2, const MirrorGeometry& g);

/// Radius of the first dark ring, j_{1,1} lambda z2 / (2 pi R).
double airy_first_zero(const MirrorGeometry& g);

enum class QuadratureMethod {
  kAuto,    // radial without aberration, disc with it
  kRadial,  // 2 pi int rho J0(k rho) e^{i phi(rho)} d rho
  kDisc,    // polar tensor-product rule over the full disc
};

struct QuadratureOptions {
  QuadratureMethod method = QuadratureMethod::kAuto;
  int radial_nodes = 256;
  int disc_nodes = 128;  // per dimension
  /// Result at n nodes must agree with 2n nodes to this relative tolerance
  /// (relative to max(|A|, 1e-6 pi R^2)); otherwise kNonConvergent.
  double convergence_tolerance = 1e-8;
};

/// Integral over the aperture of exp(-i 2 pi (x2 x + y2 y) / (lambda z2)),
/// times exp(i phi(rho)) when `aberration` is set. `offset` is relative to the
/// geometric image; the constant phase of the path length is dropped.
/// Unnormalized (units of area).
Amplitude focal_amplitude_quadrature(const Vec2& offset, const MirrorGeometry& g, bool aberration,
                                     const QuadratureOptions& options = {});

struct FieldSample {
  Vec2 position;
  Amplitude amplitude;
};

/// n_samples points uniformly on [0, r_max] along +x of the image plane.
/// Closed form without aberration, quadrature with it.
std::vector<FieldSample> airy_profile(const MirrorGeometry& g, int n_samples, double r_max, bool aberration);

}  // namespace fockpath
