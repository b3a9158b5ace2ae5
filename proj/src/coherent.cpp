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

#include <cmath>
#include <numbers>
#include <sstream>

#include "fockpath/combinatorics.hpp"
#include "fockpath/error.hpp"

namespace fockpath {

double poisson_tail(double mean, int truncation) {
  if (mean < 0.0 || truncation < 0) throw Error(ErrorCode::kInvalidArgument, "invalid Poisson tail arguments");
  if (mean == 0.0) return 0.0;
  // Sum the head when it is small, otherwise sum the tail terms directly so
  // small tails keep full relative precision.
  double term = std::exp(-mean);
  double head = term;
  for (int k = 1; k <= truncation; ++k) {
    term *= mean / k;
    head += term;
  }
  if (head < 0.5) return 1.0 - head;
  double tail = 0.0;
  for (int k = truncation + 1;; ++k) {
    term *= mean / k;
    tail += term;
    if (term == 0.0 || (k > mean && term < tail * 1e-17)) break;
  }
  return tail;
}

double neglected_tail(const CoherentParams& p) { return poisson_tail(std::norm(p.gamma), p.truncation); }

int default_truncation(Amplitude gamma, int cap, double tolerance) {
  const double mean = std::norm(gamma);
  for (int n = 0; n <= cap; ++n) {
    if (poisson_tail(mean, n) < tolerance) return n;
  }
  std::ostringstream msg;
  msg << "|gamma|^2 = " << mean << " needs more than " << cap << " photons for tail < " << tolerance;
  throw Error(ErrorCode::kTruncationTooSmall, msg.str());
}

std::vector<Amplitude> coherent_fock_coefficients(const CoherentParams& p, double tolerance) {
  if (p.truncation < 0) throw Error(ErrorCode::kInvalidArgument, "negative truncation");
  const double tail = neglected_tail(p);
  if (!(tail < tolerance)) {
    std::ostringstream msg;
    msg << "truncation " << p.truncation << " leaves tail " << tail << " >= " << tolerance;
    throw Error(ErrorCode::kTruncationTooSmall, msg.str());
  }
  std::vector<Amplitude> c(p.truncation + 1);
  c[0] = std::exp(-std::norm(p.gamma) / 2.0);
  for (int n = 1; n <= p.truncation; ++n) c[n] = c[n - 1] * p.gamma / std::sqrt(static_cast<double>(n));
  return c;
}

PhotonState coherent_state(const CoherentParams& p, const ModeId& mode, double tolerance) {
  const auto c = coherent_fock_coefficients(p, tolerance);
  Terms terms;
  for (int n = 0; n <= p.truncation; ++n) terms.emplace(FockBasisState{{mode, n}}, c[n]);
  return normalize(terms, {mode.port()});
}

std::pair<Amplitude, Amplitude> rbs_coherent_output(Amplitude gamma1, Amplitude gamma2, Amplitude rho,
                                                    Amplitude tau) {
  return {rho * gamma1 + tau * gamma2, tau * gamma1 + rho * gamma2};
}

Amplitude waveplate_coherent_output(Amplitude gamma, double phase) { return gamma * std::polar(1.0, phase); }

PolarizedCoherent combine_polarized_coherent(Amplitude gamma1, Amplitude gamma2) {
  const double a1 = std::abs(gamma1);
  const double a2 = std::abs(gamma2);
  if (a1 == 0.0 && a2 == 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "both coherent amplitudes are zero");
  }
  const double magnitude = std::hypot(a1, a2);
  if (a1 == 0.0) return {std::polar(magnitude, std::arg(gamma2)), std::numbers::pi / 2, 0.0};
  const double phase1 = std::arg(gamma1);
  const double phase2 = a2 == 0.0 ? phase1 : std::arg(gamma2);
  return {std::polar(magnitude, phase1), std::atan2(a2, a1), phase2 - phase1};
}

double coherent_fidelity(const PhotonState& state, const std::map<ModeId, Amplitude>& target) {
  double vacuum_weight = 0.0;
  for (const auto& [mode, g] : target) vacuum_weight += std::norm(g);
  const double prefactor = std::exp(-vacuum_weight / 2.0);
  Amplitude overlap{};
  for (const auto& [basis, amp] : state.terms()) {
    Amplitude t = prefactor;
    for (const auto& [mode, n] : basis.occupancy()) {
      auto it = target.find(mode);
      if (it == target.end()) {
        t = 0.0;
        break;
      }
      t *= std::pow(it->second, n) / std::sqrt(factorial(n));
    }
    overlap += std::conj(t) * amp;
  }
  return std::norm(overlap);
}

}  // namespace fockpath
