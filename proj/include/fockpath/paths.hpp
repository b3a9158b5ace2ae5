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

// Path-sum engine: output amplitudes from enumerating how the photons of each
// input mode are routed to the output modes. Amplitudes of indistinguishable
// routings add; each routing class is weighted by the number of photon
// permutations realizing it and by the Bose factor sqrt(prod m_out!) /
// sqrt(prod n_in!).

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "fockpath/elements.hpp"
#include "fockpath/fock.hpp"

namespace fockpath::paths {

/// (m_a, m_b) -> amplitude of |m_a>_a |m_b>_b.
using TwoModeAmplitudes = std::map<std::pair<int, int>, Amplitude>;

/// Scatters |n1>|n2> through a 2x2 unitary (M(out, in)).
TwoModeAmplitudes scatter_two_mode(int n1, int n2, const SmallMatrix& m,
                                   int max_photons = kDefaultMaxPhotons);

struct RoutingTrace {
  /// assignment[i][j]: photons routed from input mode i to output mode j.
  std::array<std::array<int, 2>, 2> assignment{};
  std::array<int, 2> output{};
  /// Product of single-photon amplitudes along one labeled routing.
  Amplitude amplitude;
  /// Number of labeled-photon routings in this class.
  std::uint64_t multiplicity = 0;
  double bose_factor = 0.0;

  Amplitude contribution() const {
    return amplitude * static_cast<double>(multiplicity) * bose_factor;
  }
};

/// Every routing class of |n1>|n2> through `m` with a non-zero amplitude,
/// ordered by output (m_a descending) and then by the number of input-1
/// photons sent to output a.
std::vector<RoutingTrace> trace_paths(int n1, int n2, const SmallMatrix& m,
                                      int max_photons = kDefaultMaxPhotons);

/// Applies a one- or two-mode transform to a multimode superposition. Modes
/// the transform does not touch are carried along unchanged.
PhotonState apply_transform(const PhotonState& state, const ModeTransform& t,
                            int max_photons = kDefaultMaxPhotons);

}  // namespace fockpath::paths
