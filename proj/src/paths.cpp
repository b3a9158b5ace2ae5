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

#include "fockpath/paths.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fockpath/combinatorics.hpp"
#include "fockpath/error.hpp"

namespace fockpath::paths {

namespace {

void check_budget(int total, int max_photons) {
  if (total > max_photons) {
    throw Error(ErrorCode::kPhotonBudget, std::to_string(total) + " photons exceed the budget of " +
                                              std::to_string(max_photons));
  }
}

void check_two_mode(const SmallMatrix& m) {
  if (m.dim() != 2) throw Error(ErrorCode::kInvalidArgument, "two-mode scattering needs a 2x2 matrix");
  if (!(m.unitarity_defect() <= kUnitarityTolerance)) {
    throw Error(ErrorCode::kNotUnitary, "scattering matrix is not unitary");
  }
}

Amplitude ipow(Amplitude z, int n) {
  Amplitude r{1.0, 0.0};
  for (int i = 0; i < n; ++i) r *= z;
  return r;
}

// Routing classes for one output occupancy m_a: k photons of input 1 and
// m_a - k photons of input 2 go to output a.
template <typename Visit>
void for_each_routing(int n1, int n2, int ma, Visit&& visit) {
  const int k_lo = std::max(0, ma - n2);
  const int k_hi = std::min(n1, ma);
  for (int k = k_hi; k >= k_lo; --k) visit(k);
}

}  // namespace

TwoModeAmplitudes scatter_two_mode(int n1, int n2, const SmallMatrix& m, int max_photons) {
  if (n1 < 0 || n2 < 0) throw Error(ErrorCode::kInvalidArgument, "negative photon count");
  check_budget(n1 + n2, max_photons);
  check_two_mode(m);
  const int total = n1 + n2;
  const double in_fact = factorial(n1) * factorial(n2);
  TwoModeAmplitudes out;
  for (int ma = total; ma >= 0; --ma) {
    const int mb = total - ma;
    Amplitude sum{};
    for_each_routing(n1, n2, ma, [&](int k) {
      const double ways = static_cast<double>(binomial(n1, k)) * static_cast<double>(binomial(n2, ma - k));
      sum += ways * ipow(m(0, 0), k) * ipow(m(1, 0), n1 - k) * ipow(m(0, 1), ma - k) *
             ipow(m(1, 1), n2 - ma + k);
    });
    out[{ma, mb}] = std::sqrt(factorial(ma) * factorial(mb) / in_fact) * sum;
  }
  return out;
}

std::vector<RoutingTrace> trace_paths(int n1, int n2, const SmallMatrix& m, int max_photons) {
  if (n1 < 0 || n2 < 0) throw Error(ErrorCode::kInvalidArgument, "negative photon count");
  check_budget(n1 + n2, max_photons);
  check_two_mode(m);
  const int total = n1 + n2;
  const double in_fact = factorial(n1) * factorial(n2);
  std::vector<RoutingTrace> traces;
  for (int ma = total; ma >= 0; --ma) {
    const int mb = total - ma;
    const double bose = std::sqrt(factorial(ma) * factorial(mb) / in_fact);
    for_each_routing(n1, n2, ma, [&](int k) {
      RoutingTrace t;
      t.assignment = {{{k, n1 - k}, {ma - k, n2 - ma + k}}};
      t.output = {ma, mb};
      t.amplitude = ipow(m(0, 0), k) * ipow(m(1, 0), n1 - k) * ipow(m(0, 1), ma - k) *
                    ipow(m(1, 1), n2 - ma + k);
      // A routing through a zero matrix element is not a path.
      if (t.amplitude == Amplitude{}) return;
      t.multiplicity = binomial(n1, k) * binomial(n2, ma - k);
      t.bose_factor = bose;
      traces.push_back(t);
    });
  }
  return traces;
}

PhotonState apply_transform(const PhotonState& state, const ModeTransform& t, int max_photons) {
  validate_transform(t);
  for (const auto& in : t.in_modes) {
    if (!state.has_port(in.port())) {
      throw Error(ErrorCode::kModeMismatch, "port " + in.port() + " is not part of the state");
    }
  }
  const bool single = t.in_modes.size() == 1;
  std::map<std::pair<int, int>, TwoModeAmplitudes> cache;
  Terms out;
  for (const auto& [basis, amp] : state.terms()) {
    check_applicable(basis, t);
    check_budget(basis.total(), max_photons);
    FockBasisState rest = basis;
    const int n1 = rest.count(t.in_modes[0]);
    rest.set(t.in_modes[0], 0);
    if (single) {
      rest.set(t.out_modes[0], n1);
      out[rest] += amp * ipow(t.matrix(0, 0), n1);
      continue;
    }
    const int n2 = rest.count(t.in_modes[1]);
    rest.set(t.in_modes[1], 0);
    auto it = cache.find({n1, n2});
    if (it == cache.end()) it = cache.emplace(std::pair{n1, n2}, scatter_two_mode(n1, n2, t.matrix, max_photons)).first;
    for (const auto& [occ, a] : it->second) {
      FockBasisState next = rest;
      next.set(t.out_modes[0], occ.first);
      next.set(t.out_modes[1], occ.second);
      out[next] += amp * a;
    }
  }
  std::set<std::string> ports = state.ports();
  for (const auto& o : t.out_modes) ports.insert(o.port());
  return normalize(out, ports);
}

}  // namespace fockpath::paths
