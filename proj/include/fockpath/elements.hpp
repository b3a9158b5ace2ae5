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

// Optical elements as unitary mode transforms.
//
// A ModeTransform maps each input creation operator onto a linear combination
// of output creation operators:  a_in^dagger -> sum_out M(out, in) a_out^dagger.
// Equivalently M maps single-photon amplitude vectors (Jones vectors).

#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "fockpath/fock.hpp"

namespace fockpath {

/// Complex square matrix of dimension 1 or 2.
class SmallMatrix {
 public:
  SmallMatrix() = default;
  explicit SmallMatrix(Amplitude a);
  SmallMatrix(Amplitude m00, Amplitude m01, Amplitude m10, Amplitude m11);

  static SmallMatrix identity(int dim);

  int dim() const noexcept { return dim_; }
  Amplitude operator()(int row, int col) const { return m_[row * 2 + col]; }

  SmallMatrix adjoint() const;
  friend SmallMatrix operator*(const SmallMatrix& a, const SmallMatrix& b);

  /// Largest entrywise |M^dagger M - I|.
  double unitarity_defect() const;
  /// Largest entrywise |a - b|; dimensions must match.
  friend double max_abs_difference(const SmallMatrix& a, const SmallMatrix& b);

 private:
  int dim_ = 0;
  std::array<Amplitude, 4> m_{};
};

double max_abs_difference(const SmallMatrix& a, const SmallMatrix& b);

enum class ElementKind { kRbs, kPbs, kWaveplate, kRotation, kPhase };

std::string_view element_kind_name(ElementKind kind);

struct ElementParams {
  Amplitude rho{};     // rbs reflection
  Amplitude tau{};     // rbs transmission
  double phase = 0.0;  // waveplate retardance / phase shift (rad)
  double angle = 0.0;  // axis or rotation angle (rad)
};

struct ModeTransform {
  std::vector<ModeId> in_modes;
  std::vector<ModeId> out_modes;
  SmallMatrix matrix;  // rows: out_modes, cols: in_modes
  ElementKind kind = ElementKind::kPhase;
  ElementParams params;
};

inline constexpr double kUnitarityTolerance = 1e-9;

/// Structural and unitarity checks shared by both engines.
void validate_transform(const ModeTransform& t);

/// Throws kModeMismatch when `basis` cannot be fed through `t`: a port the
/// transform reads is populated in a different polarization basis, or an
/// output mode that is not also an input already holds photons.
void check_applicable(const FockBasisState& basis, const ModeTransform& t);

struct RbsPorts {
  std::string in1 = "1";
  std::string in2 = "2";
  std::string out1 = "3";
  std::string out2 = "4";
};

/// Lossless symmetric beam splitter [[rho, tau], [tau, rho]] acting on one
/// polarization axis. Requires |rho|^2 + |tau|^2 = 1 and
/// arg(tau) - arg(rho) = +-pi/2 (each within 1e-9; a zero coefficient skips
/// the phase check).
ModeTransform make_rbs(Amplitude rho, Amplitude tau, const RbsPorts& ports = {},
                       Axis axis = Axis::kX);

/// Ideal polarizing beam splitter with transmission axis at `axis` rad. The
/// x' component leaves through `transmitted`, the y' component through
/// `reflected`, both labeled in the rotated basis and with zero relative
/// phase. Output order is (reflected, transmitted).
ModeTransform make_pbs(double axis, const std::string& in = "1",
                       const std::string& transmitted = "4",
                       const std::string& reflected = "3");

/// Retarder with fast axis at `axis`: R(-axis) diag(1, e^{i phase}) R(axis),
/// lab basis in and out.
ModeTransform make_waveplate(double phase, double axis, const std::string& port = "1");

/// Basis change on one port from a basis at `from_basis` to one rotated by a
/// further `angle`: x' = cos x + sin y, y' = -sin x + cos y.
ModeTransform make_polarization_rotation(double angle, const std::string& port = "1",
                                         double from_basis = 0.0);

/// Same as make_polarization_rotation but lands exactly on `to_basis`.
ModeTransform make_basis_change(const std::string& port, double from_basis, double to_basis);

/// Single-mode phase e^{i phase}.
ModeTransform make_phase_shifter(double phase, const ModeId& mode = ModeId("1", Axis::kX));

struct ThinSheet {
  Amplitude rho;
  Amplitude tau;
  double phase_rho;  // from the right-triangle construction; defined even when rho = 0
  double phase_tau;
};

/// Coefficients of a thin lossless dielectric sheet with transmission phase
/// `phase_tau` in (-pi/2, pi/2): tau = cos(phase_tau) e^{i phase_tau}, rho = tau - 1.
ThinSheet thin_sheet_coefficients(double phase_tau);

}  // namespace fockpath
