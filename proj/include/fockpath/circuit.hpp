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

// Circuits: declared ports, photon sources and a feed-forward list of
// elements, run through either engine.

#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fockpath/elements.hpp"
#include "fockpath/fock.hpp"

namespace fockpath {

enum class SourceKind { kFock, kLinpol, kCircpol, kRcpLcpPair, kCoherent };

enum class Handedness { kRight, kLeft };

/// Angles are kept in degrees, exactly as written in circuit files.
struct SourceSpec {
  SourceKind kind = SourceKind::kFock;
  int n = 0;
  std::optional<Axis> pol;  // fock and coherent; x when absent
  double angle_deg = 0.0;   // linpol
  Handedness hand = Handedness::kRight;
  Amplitude gamma{};        // coherent
  int truncation = 0;       // coherent; 0 picks the smallest N meeting the tail tolerance

  friend bool operator==(const SourceSpec&, const SourceSpec&) = default;
};

/// Photons contributed to the budget: n for number-state sources, the
/// truncation for coherent ones (resolved with `truncation_cap`).
int source_photon_budget(const SourceSpec& spec, int truncation_cap);

/// Normalized state of one source on one port.
///   linpol:  (cos a a_x^dagger + sin a a_y^dagger)^n / sqrt(n!)
///   circpol: ((a_x^dagger +- i a_y^dagger) / sqrt 2)^n / sqrt(n!), + for rcp
///   rcp_lcp_pair: one photon of each handedness
PhotonState make_source(const SourceSpec& spec, const std::string& port,
                        int truncation_cap = kDefaultMaxPhotons);

struct SourceSpan {
  int line = 0;
  int column = 0;
};

struct SourceDecl {
  std::string port;
  SourceSpec spec;
  SourceSpan span;
};

struct ElementDecl {
  ElementKind kind = ElementKind::kPhase;
  bool split50 = false;  // rbs written as split=50
  Amplitude rho{};
  Amplitude tau{};
  double phase_deg = 0.0;  // waveplate retardance or phase shift
  double angle_deg = 0.0;  // pbs / waveplate axis, rotpol angle
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;  // rbs: out1 out2; pbs: transmitted reflected
  SourceSpan span;
};

struct Circuit {
  std::string name;
  std::vector<std::string> header_comments;  // verbatim, including '#'
  std::vector<std::string> ports;
  std::vector<SourceDecl> sources;
  std::vector<ElementDecl> elements;
};

/// Structural equality; spans are ignored.
bool operator==(const SourceDecl& a, const SourceDecl& b);
bool operator==(const ElementDecl& a, const ElementDecl& b);
bool operator==(const Circuit& a, const Circuit& b);

/// (rho, tau) of an rbs element; split=50 is rho = 1/sqrt2, tau = i/sqrt2.
std::pair<Amplitude, Amplitude> rbs_coefficients(const ElementDecl& e);

enum class Engine { kPaths, kOperators, kBoth };

std::string engine_name(Engine e);
std::optional<Engine> parse_engine(const std::string& name);

struct RunOptions {
  int max_photons = kDefaultMaxPhotons;
  double agreement_tolerance = 1e-9;
};

struct RunResult {
  Engine engine = Engine::kPaths;
  PhotonState state = PhotonState::vacuum();
  std::optional<double> discrepancy;  // set for Engine::kBoth
};

/// Vacuum on every declared port, times each source.
PhotonState initial_state(const Circuit& c, const RunOptions& options = {});

/// Applies the elements in order. Before each element every port it reads is
/// re-expressed in the polarization basis the element expects. With
/// Engine::kBoth the two engines run independently and a discrepancy above
/// the tolerance throws kEngineDisagreement. Over-budget circuits throw
/// kPhotonBudget before any work is done.
RunResult run_circuit(const Circuit& c, Engine engine, const RunOptions& options = {});

/// Largest amplitude difference between the two engines' outputs.
double cross_check(const Circuit& c, const RunOptions& options = {});

struct RandomCircuitOptions {
  int max_elements = 4;
  int max_photons = 4;
  int ports = 4;
};

/// A random well-formed circuit without coherent sources: 1 to max_photons
/// photons from random number, linear, circular or paired sources, followed by
/// 1 to max_elements random rbs, pbs, waveplate, rotpol and phase elements.
Circuit random_circuit(std::mt19937_64& rng, const RandomCircuitOptions& options = {});

}  // namespace fockpath
