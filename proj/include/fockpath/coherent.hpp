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

// Coherent (Glauber) states: truncated Fock expansions and the closed-form
// outputs of beam splitters and wave plates.

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fockpath/fock.hpp"

namespace fockpath {

inline constexpr double kCoherentTailTolerance = 1e-10;

struct CoherentParams {
  Amplitude gamma;
  int truncation = 0;  // highest photon number kept
};

/// P(n > truncation) for a Poisson distribution with the given mean.
double poisson_tail(double mean, int truncation);

/// Probability left out by truncating |gamma> at p.truncation.
double neglected_tail(const CoherentParams& p);

/// Smallest N with neglected tail below `tolerance`. Throws
/// kTruncationTooSmall when that N exceeds `cap`.
int default_truncation(Amplitude gamma, int cap, double tolerance = kCoherentTailTolerance);

/// c_n = e^{-|gamma|^2/2} gamma^n / sqrt(n!) for n = 0..truncation. Throws
/// kTruncationTooSmall when the neglected tail exceeds `tolerance`.
std::vector<Amplitude> coherent_fock_coefficients(const CoherentParams& p,
                                                  double tolerance = kCoherentTailTolerance);

/// Truncated, renormalized |gamma> in one mode.
PhotonState coherent_state(const CoherentParams& p, const ModeId& mode,
                           double tolerance = kCoherentTailTolerance);

/// |g1>|g2> through a beam splitter [[rho, tau], [tau, rho]] leaves as
/// |rho g1 + tau g2>|tau g1 + rho g2>.
std::pair<Amplitude, Amplitude> rbs_coherent_output(Amplitude gamma1, Amplitude gamma2,
                                                    Amplitude rho, Amplitude tau);

Amplitude waveplate_coherent_output(Amplitude gamma, double phase);

/// |g1>_x |g2>_y as one elliptically polarized coherent beam.
struct PolarizedCoherent {
  Amplitude gamma;        // sqrt(|g1|^2 + |g2|^2) e^{i arg g1}
  double theta = 0.0;     // cos theta = |g1| / |gamma|
  double delta_phase = 0.0;  // arg g2 - arg g1
};

/// When g1 = 0 the result is theta = pi/2, delta_phase = 0, and gamma carries
/// the phase of g2. A zero phase is used for a zero component.
PolarizedCoherent combine_polarized_coherent(Amplitude gamma1, Amplitude gamma2);

/// |<target|state>|^2 where target is the product of untruncated coherent
/// states over the given modes (vacuum on every other mode).
double coherent_fidelity(const PhotonState& state, const std::map<ModeId, Amplitude>& target);

}  // namespace fockpath
