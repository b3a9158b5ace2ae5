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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "fockpath/error.hpp"
#include "fockpath/special.hpp"

namespace fockpath {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFirstZeroJ1 = 3.8317059702075123156;

void check_in_aperture(const Vec2& p, const MirrorGeometry& g) {
  if (p.x * p.x + p.y * p.y > g.aperture * g.aperture) {
    std::ostringstream msg;
    msg << "mirror point (" << p.x << ", " << p.y << ") lies outside radius " << g.aperture;
    throw Error(ErrorCode::kOutsideAperture, msg.str());
  }
}

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

Amplitude radial_quadrature(double k, const MirrorGeometry& g, bool aberration, const GaussLegendreRule& rule) {
  const double half = g.aperture / 2.0;
  Amplitude sum{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double rho = half * (rule.nodes[i] + 1.0);
    Amplitude f = rho * bessel_j0(k * rho);
    if (aberration) f *= std::polar(1.0, aberration_phase(rho, g));
    sum += rule.weights[i] * f;
  }
  return 2.0 * kPi * half * sum;
}

Amplitude disc_quadrature(double kx, double ky, const MirrorGeometry& g, bool aberration,
                          const GaussLegendreRule& rule) {
  const double half = g.aperture / 2.0;
  Amplitude sum{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double rho = half * (rule.nodes[i] + 1.0);
    Amplitude ring{};
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      const double theta = kPi * (rule.nodes[j] + 1.0);
      ring += rule.weights[j] * std::polar(1.0, -rho * (kx * std::cos(theta) + ky * std::sin(theta)));
    }
    ring *= kPi * rho;
    if (aberration) ring *= std::polar(1.0, aberration_phase(rho, g));
    sum += rule.weights[i] * ring;
  }
  return half * sum;
}

}  // namespace

MirrorGeometry MirrorGeometry::imaging(double focal, double aperture, double wavelength, double z1, Vec2 source) {
  MirrorGeometry g{focal, aperture, wavelength, z1, image_distance(z1, focal), source};
  g.validate();
  return g;
}

void MirrorGeometry::validate() const {
  if (!positive_finite(focal) || !positive_finite(aperture) || !positive_finite(wavelength) ||
      !(z1 > 0.0) || !positive_finite(z2)) {
    throw Error(ErrorCode::kInvalidArgument,
                "focal length, aperture, wavelength, z1 and z2 must all be positive");
  }
}

double exact_path_length(const Vec3& r1, const Vec2& mirror, const Vec3& r2, const MirrorGeometry& g) {
  check_in_aperture(mirror, g);
  const double z = (mirror.x * mirror.x + mirror.y * mirror.y) / (4.0 * g.focal);
  const double l1 = std::sqrt((r1.x - mirror.x) * (r1.x - mirror.x) + (r1.y - mirror.y) * (r1.y - mirror.y) +
                              (r1.z - z) * (r1.z - z));
  const double l2 = std::sqrt((r2.x - mirror.x) * (r2.x - mirror.x) + (r2.y - mirror.y) * (r2.y - mirror.y) +
                              (r2.z - z) * (r2.z - z));
  return l1 + l2;
}

double paraxial_path_length(const Vec3& r1, const Vec2& mirror, const Vec3& r2, const MirrorGeometry& g) {
  check_in_aperture(mirror, g);
  const double x = mirror.x;
  const double y = mirror.y;
  const double z = g.alpha() * (x * x + y * y);
  return r1.z + r2.z + (r1.x * r1.x + r1.y * r1.y) / (2.0 * r1.z) + (r2.x * r2.x + r2.y * r2.y) / (2.0 * r2.z) -
         (r1.x / r1.z + r2.x / r2.z) * x - (r1.y / r1.z + r2.y / r2.z) * y +
         0.5 * (1.0 / r1.z + 1.0 / r2.z) * (x * x + y * y + z * z) - 2.0 * z;
}

double image_distance(double z1, double focal) {
  const double inv = 1.0 / focal - 1.0 / z1;
  if (inv == 0.0) throw Error(ErrorCode::kImageAtInfinity, "source in the focal plane images to infinity");
  return 1.0 / inv;
}

Vec2 geometric_image_point(const Vec2& source, double z1, double z2) {
  const double m = -z2 / z1;
  return {m * source.x, m * source.y};
}

Vec2 image_offset(const Vec2& image_plane_point, const MirrorGeometry& g) {
  const Vec2 image = geometric_image_point(g.source, g.z1, g.z2);
  return {image_plane_point.x - image.x, image_plane_point.y - image.y};
}

double aberration_phase(double rho, const MirrorGeometry& g) {
  if (rho < 0.0 || rho > g.aperture) {
    throw Error(ErrorCode::kOutsideAperture, "radial coordinate outside [0, R]");
  }
  const double r2 = rho * rho;
  return 2.0 * kPi * r2 * r2 / (32.0 * g.wavelength * g.focal * g.focal * g.focal);
}

double rim_aberration_phase(const MirrorGeometry& g) {
  const double na = g.numerical_aperture();
  return (kPi / 16.0) * (g.focal / g.wavelength) * na * na * na * na;
}

double airy_amplitude_closed(double rho2, const MirrorGeometry& g) {
  if (rho2 < 0.0) throw Error(ErrorCode::kInvalidArgument, "radial offset must be non-negative");
  const double disc = kPi * g.aperture * g.aperture;
  const double u = 2.0 * kPi * g.aperture * rho2 / (g.wavelength * g.z2);
  if (u < 1e-8) return disc;  // 2 J1(u)/u = 1 - u^2/8 + ...
  return g.aperture * bessel_j1(u) / (rho2 / (g.wavelength * g.z2));
}

double airy_first_zero(const MirrorGeometry& g) {
  return kFirstZeroJ1 * g.wavelength * g.z2 / (2.0 * kPi * g.aperture);
}

Amplitude focal_amplitude_quadrature(const Vec2& offset, const MirrorGeometry& g, bool aberration,
                                     const QuadratureOptions& options) {
  g.validate();
  QuadratureMethod method = options.method;
  if (method == QuadratureMethod::kAuto) method = aberration ? QuadratureMethod::kDisc : QuadratureMethod::kRadial;
  const double scale = 2.0 * kPi / (g.wavelength * g.z2);
  const double kx = scale * offset.x;
  const double ky = scale * offset.y;
  auto evaluate = [&](int nodes) {
    const auto rule = gauss_legendre(nodes);
    return method == QuadratureMethod::kRadial ? radial_quadrature(std::hypot(kx, ky), g, aberration, rule)
                                               : disc_quadrature(kx, ky, g, aberration, rule);
  };
  const int nodes = method == QuadratureMethod::kRadial ? options.radial_nodes : options.disc_nodes;
  const Amplitude coarse = evaluate(nodes);
  const Amplitude fine = evaluate(2 * nodes);
  const double floor = 1e-6 * kPi * g.aperture * g.aperture;
  const double change = std::abs(fine - coarse) / std::max(std::abs(fine), floor);
  if (!(change <= options.convergence_tolerance)) {
    std::ostringstream msg;
    msg << "doubling " << nodes << " nodes changed the amplitude by " << change << " (relative)";
    throw Error(ErrorCode::kNonConvergent, msg.str());
  }
  return coarse;
}

std::vector<FieldSample> airy_profile(const MirrorGeometry& g, int n_samples, double r_max, bool aberration) {
  g.validate();
  if (n_samples < 1) throw Error(ErrorCode::kInvalidArgument, "need at least one sample");
  if (!(r_max >= 0.0) || !std::isfinite(r_max)) throw Error(ErrorCode::kInvalidArgument, "r_max must be >= 0");
  std::vector<FieldSample> samples;
  samples.reserve(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    const double r = n_samples == 1 ? 0.0 : r_max * i / (n_samples - 1);
    const Vec2 pos{r, 0.0};
    const Amplitude a = aberration ? focal_amplitude_quadrature(pos, g, true) : Amplitude(airy_amplitude_closed(r, g));
    samples.push_back({pos, a});
  }
  return samples;
}

}  // namespace fockpath
