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

// Amplitudes, optical modes, Fock basis states and normalized superpositions.

#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace fockpath {

using Amplitude = std::complex<double>;

inline constexpr int kDefaultMaxPhotons = 8;
inline constexpr double kPruneThreshold = 1e-14;

/// Axis within a two-axis polarization basis: x' (0) or y' (1).
enum class Axis : std::uint8_t { kX = 0, kY = 1 };

/// One optical mode: a port and a polarization axis of a basis rotated by
/// `basis` radians about z. The lab basis is 0; x' = cos(b) x + sin(b) y.
class ModeId {
 public:
  ModeId(std::string port, Axis axis, double basis = 0.0);

  const std::string& port() const noexcept { return port_; }
  Axis axis() const noexcept { return axis_; }
  double basis() const noexcept { return basis_; }

  /// "port.x", "port.y", or "port.x@45" for a rotated basis (degrees).
  std::string label() const;

  friend bool operator==(const ModeId& a, const ModeId& b) = default;
  friend bool operator<(const ModeId& a, const ModeId& b);

 private:
  std::string port_;
  double basis_;
  Axis axis_;
};

/// Occupation numbers over modes. Only non-zero counts are stored.
class FockBasisState {
 public:
  FockBasisState() = default;
  FockBasisState(std::initializer_list<std::pair<const ModeId, int>> counts);

  int count(const ModeId& mode) const;
  void set(const ModeId& mode, int n);
  void add(const ModeId& mode, int n);
  int total() const;
  bool empty() const noexcept { return counts_.empty(); }

  /// Product of the factorials of all counts.
  double factorial_product() const;

  const std::map<ModeId, int>& occupancy() const noexcept { return counts_; }

  friend bool operator==(const FockBasisState& a, const FockBasisState& b) = default;
  friend bool operator<(const FockBasisState& a, const FockBasisState& b) {
    return a.counts_ < b.counts_;
  }

 private:
  std::map<ModeId, int> counts_;
};

using Terms = std::map<FockBasisState, Amplitude>;

double squared_norm(const Terms& terms);

/// A normalized superposition of Fock basis states, together with the set of
/// ports it is defined over (ports with no photons are vacuum).
class PhotonState {
 public:
  static PhotonState vacuum(std::set<std::string> ports = {});

  const Terms& terms() const noexcept { return terms_; }
  const std::set<std::string>& ports() const noexcept { return ports_; }

  Amplitude amplitude(const FockBasisState& basis) const;
  int max_total() const;
  bool has_port(const std::string& port) const { return ports_.count(port) != 0; }

 private:
  PhotonState() = default;
  friend PhotonState normalize(const Terms& terms, const std::set<std::string>& ports);

  Terms terms_;
  std::set<std::string> ports_;
};

/// Scales by one positive real factor so that the squared norm is 1, then
/// drops terms below kPruneThreshold. Ports named by any mode are added to
/// `ports`. Throws ErrorCode::kNullState for a zero-norm input.
PhotonState normalize(const Terms& terms, const std::set<std::string>& ports = {});

/// Product state over disjoint port sets.
PhotonState tensor(const PhotonState& a, const PhotonState& b);

/// <a|b>, conjugate-linear in a.
Amplitude inner_product(const PhotonState& a, const PhotonState& b);

/// Largest |a(m) - b(m)| over the union of supports.
double max_discrepancy(const PhotonState& a, const PhotonState& b);

using CountDistribution = std::map<std::vector<int>, double>;

/// Joint distribution of total photon counts on the listed ports (summed over
/// polarization), marginalized over all others.
CountDistribution number_distribution(const PhotonState& state,
                                      const std::vector<std::string>& ports);

double expected_photon_number(const PhotonState& state, const std::string& port);

/// Rounds to `digits` significant decimal digits; -0 becomes 0.
double round_significant(double value, int digits = 12);

/// [{"occupancy": {"port.pol": n}, "re": r, "im": i}, ...] in basis order.
nlohmann::json to_json(const PhotonState& state, int digits = 12);

}  // namespace fockpath
