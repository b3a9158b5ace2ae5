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

#include "fockpath/elements.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fockpath/error.hpp"

namespace fockpath {

SmallMatrix::SmallMatrix(Amplitude a) : dim_(1) { m_[0] = a; }

SmallMatrix::SmallMatrix(Amplitude m00, Amplitude m01, Amplitude m10, Amplitude m11)
    : dim_(2), m_{m00, m01, m10, m11} {}

SmallMatrix SmallMatrix::identity(int dim) {
  return dim == 1 ? SmallMatrix(1.0) : SmallMatrix(1.0, 0.0, 0.0, 1.0);
}

SmallMatrix SmallMatrix::adjoint() const {
  if (dim_ == 1) return SmallMatrix(std::conj(m_[0]));
  return SmallMatrix(std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3]));
}

SmallMatrix operator*(const SmallMatrix& a, const SmallMatrix& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorCode::kInvalidArgument, "matrix dimension mismatch");
  if (a.dim_ == 1) return SmallMatrix(a.m_[0] * b.m_[0]);
  return SmallMatrix(a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
                     a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1));
}

double max_abs_difference(const SmallMatrix& a, const SmallMatrix& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorCode::kInvalidArgument, "matrix dimension mismatch");
  double worst = 0.0;
  for (int r = 0; r < a.dim_; ++r) {
    for (int c = 0; c < a.dim_; ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  }
  return worst;
}

double SmallMatrix::unitarity_defect() const {
  if (dim_ == 0) return 0.0;
  return max_abs_difference(adjoint() * *this, identity(dim_));
}

std::string_view element_kind_name(ElementKind kind) {
  switch (kind) {
    case ElementKind::kRbs: return "rbs";
    case ElementKind::kPbs: return "pbs";
    case ElementKind::kWaveplate: return "waveplate";
    case ElementKind::kRotation: return "rotpol";
    case ElementKind::kPhase: return "phase";
  }
  return "?";
}

void validate_transform(const ModeTransform& t) {
  const auto n = t.in_modes.size();
  if (n < 1 || n > 2 || t.out_modes.size() != n || t.matrix.dim() != static_cast<int>(n)) {
    throw Error(ErrorCode::kInvalidArgument, "transforms act on one or two modes with a matching square matrix");
  }
  if (n == 2 && (t.in_modes[0] == t.in_modes[1] || t.out_modes[0] == t.out_modes[1])) {
    throw Error(ErrorCode::kInvalidArgument, "repeated mode in transform");
  }
  const double defect = t.matrix.unitarity_defect();
  if (!(defect <= kUnitarityTolerance)) {
    std::ostringstream msg;
    msg << element_kind_name(t.kind) << " matrix deviates from unitarity by " << defect;
    throw Error(ErrorCode::kNotUnitary, msg.str());
  }
}

void check_applicable(const FockBasisState& basis, const ModeTransform& t) {
  auto is_input = [&](const ModeId& m) {
    return std::find(t.in_modes.begin(), t.in_modes.end(), m) != t.in_modes.end();
  };
  for (const auto& [mode, n] : basis.occupancy()) {
    for (const auto& in : t.in_modes) {
      if (mode.port() == in.port() && mode.basis() != in.basis()) {
        throw Error(ErrorCode::kModeMismatch,
                    mode.label() + " is populated but the element reads " + in.label());
      }
    }
  }
  for (const auto& out : t.out_modes) {
    if (is_input(out)) continue;
    for (const auto& [mode, n] : basis.occupancy()) {
      if (mode.port() != out.port() || is_input(mode)) continue;
      if (mode == out) throw Error(ErrorCode::kModeMismatch, "output mode " + out.label() + " is already occupied");
      if (mode.basis() != out.basis()) {
        throw Error(ErrorCode::kModeMismatch,
                    "port " + out.port() + " holds " + mode.label() + " but the element writes " + out.label());
      }
    }
  }
}

ModeTransform make_rbs(Amplitude rho, Amplitude tau, const RbsPorts& ports, Axis axis) {
  const double energy = std::norm(rho) + std::norm(tau);
  if (!(std::abs(energy - 1.0) <= kUnitarityTolerance)) {
    std::ostringstream msg;
    msg << "|rho|^2 + |tau|^2 = " << energy << ", expected 1";
    throw Error(ErrorCode::kEnergyViolation, msg.str());
  }
  constexpr double kZero = 1e-12;
  if (std::abs(rho) > kZero && std::abs(tau) > kZero) {
    const double diff = std::remainder(std::arg(tau) - std::arg(rho), 2.0 * std::numbers::pi);
    if (!(std::abs(std::abs(diff) - std::numbers::pi / 2) <= kUnitarityTolerance)) {
      std::ostringstream msg;
      msg << "arg(tau) - arg(rho) = " << diff * 180.0 / std::numbers::pi << " deg, expected +-90";
      throw Error(ErrorCode::kPhaseViolation, msg.str());
    }
  }
  ModeTransform t;
  t.in_modes = {ModeId(ports.in1, axis), ModeId(ports.in2, axis)};
  t.out_modes = {ModeId(ports.out1, axis), ModeId(ports.out2, axis)};
  t.matrix = SmallMatrix(rho, tau, tau, rho);
  t.kind = ElementKind::kRbs;
  t.params.rho = rho;
  t.params.tau = tau;
  validate_transform(t);
  return t;
}

ModeTransform make_pbs(double axis, const std::string& in, const std::string& transmitted,
                       const std::string& reflected) {
  if (transmitted == reflected) throw Error(ErrorCode::kInvalidArgument, "pbs output ports must differ");
  const double c = std::cos(axis);
  const double s = std::sin(axis);
  ModeTransform t;
  t.in_modes = {ModeId(in, Axis::kX), ModeId(in, Axis::kY)};
  t.out_modes = {ModeId(reflected, Axis::kY, axis), ModeId(transmitted, Axis::kX, axis)};
  t.matrix = SmallMatrix(-s, c, c, s);
  t.kind = ElementKind::kPbs;
  t.params.angle = axis;
  validate_transform(t);
  return t;
}

ModeTransform make_waveplate(double phase, double axis, const std::string& port) {
  const double c = std::cos(axis);
  const double s = std::sin(axis);
  const Amplitude e = std::polar(1.0, phase);
  ModeTransform t;
  t.in_modes = {ModeId(port, Axis::kX), ModeId(port, Axis::kY)};
  t.out_modes = t.in_modes;
  t.matrix = SmallMatrix(c * c + s * s * e, c * s * (1.0 - e), c * s * (1.0 - e), s * s + c * c * e);
  t.kind = ElementKind::kWaveplate;
  t.params.phase = phase;
  t.params.angle = axis;
  validate_transform(t);
  return t;
}

ModeTransform make_basis_change(const std::string& port, double from_basis, double to_basis) {
  const double angle = to_basis - from_basis;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  ModeTransform t;
  t.in_modes = {ModeId(port, Axis::kX, from_basis), ModeId(port, Axis::kY, from_basis)};
  t.out_modes = {ModeId(port, Axis::kX, to_basis), ModeId(port, Axis::kY, to_basis)};
  t.matrix = SmallMatrix(c, s, -s, c);
  t.kind = ElementKind::kRotation;
  t.params.angle = angle;
  validate_transform(t);
  return t;
}

ModeTransform make_polarization_rotation(double angle, const std::string& port, double from_basis) {
  return make_basis_change(port, from_basis, from_basis + angle);
}

ModeTransform make_phase_shifter(double phase, const ModeId& mode) {
  ModeTransform t;
  t.in_modes = {mode};
  t.out_modes = {mode};
  t.matrix = SmallMatrix(std::polar(1.0, phase));
  t.kind = ElementKind::kPhase;
  t.params.phase = phase;
  validate_transform(t);
  return t;
}

ThinSheet thin_sheet_coefficients(double phase_tau) {
  if (!(std::abs(phase_tau) < std::numbers::pi / 2)) {
    throw Error(ErrorCode::kInvalidArgument, "transmission phase must lie in (-90, 90) degrees");
  }
  const Amplitude tau = std::cos(phase_tau) * std::polar(1.0, phase_tau);
  const Amplitude rho = tau - 1.0;
  // Negative transmission phases put rho a quarter turn behind tau.
  const double phase_rho = phase_tau + (phase_tau < 0.0 ? -1.0 : 1.0) * std::numbers::pi / 2;
  return ThinSheet{rho, tau, phase_rho, phase_tau};
}

}  // namespace fockpath
