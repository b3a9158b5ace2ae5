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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <string>

#include "fockpath/combinatorics.hpp"
#include "fockpath/error.hpp"

namespace fockpath {

namespace {

// Basis angles live on a 1e-12 rad grid in [-pi, pi) so that equal bases
// reached by different rotation sequences compare equal.
double canonical_basis(double angle) {
  double a = std::remainder(angle, 2.0 * std::numbers::pi);
  a = std::round(a * 1e12) / 1e12;
  if (a == 0.0) a = 0.0;  // drop the sign of -0
  return a;
}

std::string shortest(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

}  // namespace

ModeId::ModeId(std::string port, Axis axis, double basis)
    : port_(std::move(port)), basis_(canonical_basis(basis)), axis_(axis) {}

std::string ModeId::label() const {
  std::string out = port_ + (axis_ == Axis::kX ? ".x" : ".y");
  if (basis_ != 0.0) out += "@" + shortest(round_significant(basis_ * 180.0 / std::numbers::pi, 12));
  return out;
}

bool operator<(const ModeId& a, const ModeId& b) {
  if (a.port_ != b.port_) return a.port_ < b.port_;
  if (a.basis_ != b.basis_) return a.basis_ < b.basis_;
  return a.axis_ < b.axis_;
}

FockBasisState::FockBasisState(std::initializer_list<std::pair<const ModeId, int>> counts) {
  for (const auto& [mode, n] : counts) add(mode, n);
}

int FockBasisState::count(const ModeId& mode) const {
  auto it = counts_.find(mode);
  return it == counts_.end() ? 0 : it->second;
}

void FockBasisState::set(const ModeId& mode, int n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative photon count for " + mode.label());
  if (n == 0) {
    counts_.erase(mode);
  } else {
    counts_.insert_or_assign(mode, n);
  }
}

void FockBasisState::add(const ModeId& mode, int n) { set(mode, count(mode) + n); }

int FockBasisState::total() const {
  int sum = 0;
  for (const auto& [mode, n] : counts_) sum += n;
  return sum;
}

double FockBasisState::factorial_product() const {
  double p = 1.0;
  for (const auto& [mode, n] : counts_) p *= factorial(n);
  return p;
}

double squared_norm(const Terms& terms) {
  double sum = 0.0;
  for (const auto& [basis, amp] : terms) sum += std::norm(amp);
  return sum;
}

PhotonState PhotonState::vacuum(std::set<std::string> ports) {
  PhotonState s;
  s.terms_.emplace(FockBasisState{}, Amplitude{1.0, 0.0});
  s.ports_ = std::move(ports);
  return s;
}

Amplitude PhotonState::amplitude(const FockBasisState& basis) const {
  auto it = terms_.find(basis);
  return it == terms_.end() ? Amplitude{} : it->second;
}

int PhotonState::max_total() const {
  int m = 0;
  for (const auto& [basis, amp] : terms_) m = std::max(m, basis.total());
  return m;
}

PhotonState normalize(const Terms& terms, const std::set<std::string>& ports) {
  const double norm2 = squared_norm(terms);
  if (!std::isfinite(norm2)) throw Error(ErrorCode::kInvalidArgument, "non-finite amplitude");
  if (norm2 <= 0.0) throw Error(ErrorCode::kNullState, "cannot normalize a zero-norm state");
  const double scale = 1.0 / std::sqrt(norm2);
  PhotonState s;
  s.ports_ = ports;
  for (const auto& [basis, amp] : terms) {
    for (const auto& [mode, n] : basis.occupancy()) s.ports_.insert(mode.port());
    const Amplitude scaled = amp * scale;
    if (std::abs(scaled) >= kPruneThreshold) s.terms_.emplace(basis, scaled);
  }
  return s;
}

PhotonState tensor(const PhotonState& a, const PhotonState& b) {
  for (const auto& port : b.ports()) {
    if (a.has_port(port)) throw Error(ErrorCode::kModeMismatch, "port " + port + " appears in both factors");
  }
  Terms product;
  for (const auto& [ba, aa] : a.terms()) {
    for (const auto& [bb, ab] : b.terms()) {
      FockBasisState joint = ba;
      for (const auto& [mode, n] : bb.occupancy()) joint.add(mode, n);
      product[joint] += aa * ab;
    }
  }
  std::set<std::string> ports = a.ports();
  ports.insert(b.ports().begin(), b.ports().end());
  return normalize(product, ports);
}

Amplitude inner_product(const PhotonState& a, const PhotonState& b) {
  Amplitude sum{};
  for (const auto& [basis, amp] : a.terms()) sum += std::conj(amp) * b.amplitude(basis);
  return sum;
}

double max_discrepancy(const PhotonState& a, const PhotonState& b) {
  double worst = 0.0;
  for (const auto& [basis, amp] : a.terms()) worst = std::max(worst, std::abs(amp - b.amplitude(basis)));
  for (const auto& [basis, amp] : b.terms()) worst = std::max(worst, std::abs(amp - a.amplitude(basis)));
  return worst;
}

CountDistribution number_distribution(const PhotonState& state, const std::vector<std::string>& ports) {
  for (const auto& port : ports) {
    if (!state.has_port(port)) throw Error(ErrorCode::kUnknownPort, "port '" + port + "' is not part of the state");
  }
  CountDistribution dist;
  for (const auto& [basis, amp] : state.terms()) {
    std::vector<int> key(ports.size(), 0);
    for (const auto& [mode, n] : basis.occupancy()) {
      for (std::size_t i = 0; i < ports.size(); ++i) {
        if (mode.port() == ports[i]) key[i] += n;
      }
    }
    dist[key] += std::norm(amp);
  }
  return dist;
}

double expected_photon_number(const PhotonState& state, const std::string& port) {
  double mean = 0.0;
  for (const auto& [counts, p] : number_distribution(state, {port})) mean += counts[0] * p;
  return mean;
}

double round_significant(double value, int digits) {
  if (value == 0.0 || !std::isfinite(value)) return value == 0.0 ? 0.0 : value;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
  double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

nlohmann::json to_json(const PhotonState& state, int digits) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [basis, amp] : state.terms()) {
    nlohmann::json occ = nlohmann::json::object();
    for (const auto& [mode, n] : basis.occupancy()) occ[mode.label()] = n;
    out.push_back({{"occupancy", occ},
                   {"re", round_significant(amp.real(), digits)},
                   {"im", round_significant(amp.imag(), digits)}});
  }
  return out;
}

}  // namespace fockpath
