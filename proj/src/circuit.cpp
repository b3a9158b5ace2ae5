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

#include "fockpath/circuit.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "fockpath/coherent.hpp"
#include "fockpath/combinatorics.hpp"
#include "fockpath/error.hpp"
#include "fockpath/operators.hpp"
#include "fockpath/paths.hpp"

namespace fockpath {

namespace {

constexpr double kPi = std::numbers::pi;

double radians(double deg) { return deg * kPi / 180.0; }

// Amplitudes of sum_k sqrt(C(n,k)) wx^k wy^(n-k) |k>_x |n-k>_y, the
// expansion of (wx a_x^dagger + wy a_y^dagger)^n / sqrt(n!).
Terms binomial_source(int n, Amplitude wx, Amplitude wy, const std::string& port) {
  if (n > kMaxBinomialRow) throw Error(ErrorCode::kPhotonBudget, "source photon number too large");
  Terms terms;
  for (int k = 0; k <= n; ++k) {
    FockBasisState b;
    b.set(ModeId(port, Axis::kX), k);
    b.set(ModeId(port, Axis::kY), n - k);
    const double weight = std::sqrt(static_cast<double>(binomial(n, k)));
    terms[b] += weight * std::pow(wx, k) * std::pow(wy, n - k);
  }
  return terms;
}

int coherent_truncation(const SourceSpec& spec, int cap) {
  return spec.truncation > 0 ? spec.truncation : default_truncation(spec.gamma, cap);
}

using Apply = std::function<PhotonState(const PhotonState&, const ModeTransform&)>;

std::optional<double> port_basis(const PhotonState& s, const std::string& port) {
  for (const auto& [basis, amp] : s.terms()) {
    for (const auto& [mode, n] : basis.occupancy()) {
      if (mode.port() == port) return mode.basis();
    }
  }
  return std::nullopt;
}

PhotonState align(const PhotonState& s, const std::string& port, double target, const Apply& apply) {
  const double canonical = ModeId(port, Axis::kX, target).basis();
  const auto current = port_basis(s, port);
  if (!current || *current == canonical) return s;
  return apply(s, make_basis_change(port, *current, canonical));
}

ModeTransform rebase(ModeTransform t, double basis) {
  for (auto& m : t.in_modes) m = ModeId(m.port(), m.axis(), basis);
  for (auto& m : t.out_modes) m = ModeId(m.port(), m.axis(), basis);
  return t;
}

PhotonState apply_element(PhotonState s, const ElementDecl& e, const Apply& apply) {
  switch (e.kind) {
    case ElementKind::kRbs: {
      // Polarization-blind: run it in whatever basis the first input is in.
      double basis = port_basis(s, e.inputs[0]).value_or(port_basis(s, e.inputs[1]).value_or(0.0));
      s = align(s, e.inputs[0], basis, apply);
      s = align(s, e.inputs[1], basis, apply);
      const auto [rho, tau] = rbs_coefficients(e);
      const RbsPorts ports{e.inputs[0], e.inputs[1], e.outputs[0], e.outputs[1]};
      for (Axis axis : {Axis::kX, Axis::kY}) s = apply(s, rebase(make_rbs(rho, tau, ports, axis), basis));
      return s;
    }
    case ElementKind::kPbs:
      s = align(s, e.inputs[0], 0.0, apply);
      return apply(s, make_pbs(radians(e.angle_deg), e.inputs[0], e.outputs[0], e.outputs[1]));
    case ElementKind::kWaveplate:
      s = align(s, e.inputs[0], 0.0, apply);
      return apply(s, make_waveplate(radians(e.phase_deg), radians(e.angle_deg), e.inputs[0]));
    case ElementKind::kRotation: {
      const double from = port_basis(s, e.inputs[0]).value_or(0.0);
      return apply(s, make_polarization_rotation(radians(e.angle_deg), e.inputs[0], from));
    }
    case ElementKind::kPhase: {
      const double basis = port_basis(s, e.inputs[0]).value_or(0.0);
      for (Axis axis : {Axis::kX, Axis::kY}) {
        s = apply(s, make_phase_shifter(radians(e.phase_deg), ModeId(e.inputs[0], axis, basis)));
      }
      return s;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown element kind");
}

PhotonState run_with(const Circuit& c, const RunOptions& options, const Apply& apply) {
  PhotonState s = initial_state(c, options);
  for (const auto& e : c.elements) s = apply_element(s, e, apply);
  return s;
}

Apply engine_apply(Engine e, int max_photons) {
  if (e == Engine::kOperators) {
    return [max_photons](const PhotonState& s, const ModeTransform& t) {
      return ops::apply_transform(s, t, max_photons);
    };
  }
  return [max_photons](const PhotonState& s, const ModeTransform& t) {
    return paths::apply_transform(s, t, max_photons);
  };
}

}  // namespace

int source_photon_budget(const SourceSpec& spec, int truncation_cap) {
  switch (spec.kind) {
    case SourceKind::kRcpLcpPair:
      return 2;
    case SourceKind::kCoherent:
      return coherent_truncation(spec, truncation_cap);
    default:
      return spec.n;
  }
}

PhotonState make_source(const SourceSpec& spec, const std::string& port, int truncation_cap) {
  if (spec.n < 0) throw Error(ErrorCode::kInvalidArgument, "photon number must be non-negative");
  const std::set<std::string> ports{port};
  const double r = 1.0 / std::numbers::sqrt2;
  switch (spec.kind) {
    case SourceKind::kFock: {
      FockBasisState b;
      b.set(ModeId(port, spec.pol.value_or(Axis::kX)), spec.n);
      return normalize(Terms{{b, 1.0}}, ports);
    }
    case SourceKind::kLinpol: {
      const double a = radians(spec.angle_deg);
      return normalize(binomial_source(spec.n, std::cos(a), std::sin(a), port), ports);
    }
    case SourceKind::kCircpol: {
      const Amplitude wy = spec.hand == Handedness::kRight ? Amplitude(0, r) : Amplitude(0, -r);
      return normalize(binomial_source(spec.n, r, wy, port), ports);
    }
    case SourceKind::kRcpLcpPair: {
      // (a_x + i a_y)(a_x - i a_y) / 2 = (a_x^2 + a_y^2) / 2
      const FockBasisState xx{{ModeId(port, Axis::kX), 2}};
      const FockBasisState yy{{ModeId(port, Axis::kY), 2}};
      return normalize(Terms{{xx, r}, {yy, r}}, ports);
    }
    case SourceKind::kCoherent: {
      const CoherentParams p{spec.gamma, coherent_truncation(spec, truncation_cap)};
      return coherent_state(p, ModeId(port, spec.pol.value_or(Axis::kX)));
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown source kind");
}

bool operator==(const SourceDecl& a, const SourceDecl& b) { return a.port == b.port && a.spec == b.spec; }

bool operator==(const ElementDecl& a, const ElementDecl& b) {
  return a.kind == b.kind && a.split50 == b.split50 && a.rho == b.rho && a.tau == b.tau &&
         a.phase_deg == b.phase_deg && a.angle_deg == b.angle_deg && a.inputs == b.inputs &&
         a.outputs == b.outputs;
}

bool operator==(const Circuit& a, const Circuit& b) {
  return a.header_comments == b.header_comments && a.ports == b.ports && a.sources == b.sources &&
         a.elements == b.elements;
}

std::pair<Amplitude, Amplitude> rbs_coefficients(const ElementDecl& e) {
  if (e.split50) return {Amplitude(1.0 / std::numbers::sqrt2, 0.0), Amplitude(0.0, 1.0 / std::numbers::sqrt2)};
  return {e.rho, e.tau};
}

std::string engine_name(Engine e) {
  switch (e) {
    case Engine::kPaths:
      return "paths";
    case Engine::kOperators:
      return "operators";
    case Engine::kBoth:
      return "both";
  }
  return "?";
}

std::optional<Engine> parse_engine(const std::string& name) {
  if (name == "paths") return Engine::kPaths;
  if (name == "operators") return Engine::kOperators;
  if (name == "both") return Engine::kBoth;
  return std::nullopt;
}

PhotonState initial_state(const Circuit& c, const RunOptions& options) {
  int budget = 0;
  for (const auto& s : c.sources) budget += source_photon_budget(s.spec, options.max_photons);
  if (budget > options.max_photons) {
    throw Error(ErrorCode::kPhotonBudget, "circuit needs " + std::to_string(budget) +
                                              " photons, budget is " + std::to_string(options.max_photons));
  }
  std::set<std::string> unsourced(c.ports.begin(), c.ports.end());
  for (const auto& s : c.sources) unsourced.erase(s.port);
  PhotonState state = PhotonState::vacuum(unsourced);
  for (const auto& s : c.sources) state = tensor(state, make_source(s.spec, s.port, options.max_photons));
  return state;
}

RunResult run_circuit(const Circuit& c, Engine engine, const RunOptions& options) {
  RunResult result;
  result.engine = engine;
  if (engine != Engine::kBoth) {
    result.state = run_with(c, options, engine_apply(engine, options.max_photons));
    return result;
  }
  result.state = run_with(c, options, engine_apply(Engine::kPaths, options.max_photons));
  const PhotonState other = run_with(c, options, engine_apply(Engine::kOperators, options.max_photons));
  const double d = max_discrepancy(result.state, other);
  result.discrepancy = d;
  if (!(d <= options.agreement_tolerance)) {
    throw Error(ErrorCode::kEngineDisagreement, "engines differ by " + std::to_string(d));
  }
  return result;
}

double cross_check(const Circuit& c, const RunOptions& options) {
  const PhotonState a = run_with(c, options, engine_apply(Engine::kPaths, options.max_photons));
  const PhotonState b = run_with(c, options, engine_apply(Engine::kOperators, options.max_photons));
  return max_discrepancy(a, b);
}

Circuit random_circuit(std::mt19937_64& rng, const RandomCircuitOptions& options) {
  auto uniform_int = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto uniform = [&rng](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };

  Circuit c;
  c.name = "random";
  const int nports = std::max(options.ports, 2);
  for (int i = 0; i < nports; ++i) c.ports.push_back("p" + std::to_string(i));

  // Sources on the first ports; the rest start empty so pbs has somewhere to
  // send its reflected beam.
  std::vector<bool> occupied(nports, false);
  int photons = uniform_int(1, std::max(options.max_photons, 1));
  for (int i = 0; i < nports && photons > 0; ++i) {
    const int n = uniform_int(1, photons);
    SourceDecl s;
    s.port = c.ports[i];
    switch (n == 2 ? uniform_int(0, 3) : uniform_int(0, 2)) {
      case 0:
        s.spec.kind = SourceKind::kFock;
        s.spec.n = n;
        if (uniform_int(0, 1) == 1) s.spec.pol = Axis::kY;
        break;
      case 1:
        s.spec.kind = SourceKind::kLinpol;
        s.spec.n = n;
        s.spec.angle_deg = uniform(-90.0, 90.0);
        break;
      case 2:
        s.spec.kind = SourceKind::kCircpol;
        s.spec.n = n;
        s.spec.hand = uniform_int(0, 1) == 0 ? Handedness::kRight : Handedness::kLeft;
        break;
      default:
        s.spec.kind = SourceKind::kRcpLcpPair;
        break;
    }
    c.sources.push_back(s);
    occupied[i] = true;
    photons -= n;
    if (uniform_int(0, 1) == 0) break;
  }

  const int nelements = uniform_int(1, std::max(options.max_elements, 1));
  for (int k = 0; k < nelements; ++k) {
    ElementDecl e;
    const int a = uniform_int(0, nports - 1);
    int free_port = -1;
    for (int i = 0; i < nports; ++i) {
      if (!occupied[i] && i != a) free_port = i;
    }
    int kind = uniform_int(0, 4);
    if (kind == 1 && free_port < 0) kind = 0;
    switch (kind) {
      case 0: {
        int b = uniform_int(0, nports - 2);
        if (b >= a) ++b;
        e.kind = ElementKind::kRbs;
        const double chi = uniform(0.0, kPi / 2);
        const double phi = uniform(-kPi, kPi);
        const double quarter = uniform_int(0, 1) == 0 ? kPi / 2 : -kPi / 2;
        e.rho = std::polar(std::cos(chi), phi);
        e.tau = std::polar(std::sin(chi), phi + quarter);
        e.inputs = {c.ports[a], c.ports[b]};
        e.outputs = uniform_int(0, 1) == 0 ? e.inputs : std::vector<std::string>{c.ports[b], c.ports[a]};
        occupied[a] = occupied[b] = true;
        break;
      }
      case 1:
        e.kind = ElementKind::kPbs;
        e.angle_deg = uniform(0.0, 180.0);
        e.inputs = {c.ports[a]};
        e.outputs = {c.ports[a], c.ports[free_port]};
        occupied[free_port] = true;
        break;
      case 2:
        e.kind = ElementKind::kWaveplate;
        e.phase_deg = uniform(0.0, 360.0);
        e.angle_deg = uniform(0.0, 180.0);
        e.inputs = {c.ports[a]};
        break;
      case 3:
        e.kind = ElementKind::kRotation;
        e.angle_deg = uniform(-180.0, 180.0);
        e.inputs = {c.ports[a]};
        break;
      default:
        e.kind = ElementKind::kPhase;
        e.phase_deg = uniform(0.0, 360.0);
        e.inputs = {c.ports[a]};
        break;
    }
    c.elements.push_back(e);
  }
  return c;
}

}  // namespace fockpath
