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

// fockpath command-line front end: run, trace, airy, check, demos.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fockpath/circuit.hpp"
#include "fockpath/demos.hpp"
#include "fockpath/diffraction.hpp"
#include "fockpath/error.hpp"
#include "fockpath/fock.hpp"
#include "fockpath/parser.hpp"
#include "fockpath/paths.hpp"
#include "json.hpp"

namespace {

using fockpath::Amplitude;
using nlohmann::json;

enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kDisagreement = 3, kBudget = 4 };

constexpr double kPi = std::numbers::pi;

double r12(double v) { return fockpath::round_significant(v, 12); }
std::string num(double v) { return fockpath::format_number(r12(v)); }

// Writes to a sibling temporary file and renames it into place, so a failed
// run never leaves a partial file behind.
void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw fockpath::Error(fockpath::ErrorCode::kInvalidArgument, "cannot write " + path);
    }
  }
  std::filesystem::rename(tmp, target);
}

int exit_code_for(const fockpath::Error& e) {
  switch (e.code()) {
    case fockpath::ErrorCode::kParse:
      return kParse;
    case fockpath::ErrorCode::kEngineDisagreement:
      return kDisagreement;
    case fockpath::ErrorCode::kPhotonBudget:
    case fockpath::ErrorCode::kTruncationTooSmall:
      return kBudget;
    default:
      return kUsage;
  }
}

// --max-photons, then FOCKPATH_MAX_PHOTONS, then the library default.
int photon_budget(std::optional<int> flag) {
  if (flag) {
    if (*flag < 1) throw fockpath::Error(fockpath::ErrorCode::kInvalidArgument, "--max-photons must be >= 1");
    return *flag;
  }
  if (const char* env = std::getenv("FOCKPATH_MAX_PHOTONS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 10000) {
      throw fockpath::Error(fockpath::ErrorCode::kInvalidArgument, "FOCKPATH_MAX_PHOTONS must be a positive integer");
    }
    return static_cast<int>(v);
  }
  return fockpath::kDefaultMaxPhotons;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fockpath::Error(fockpath::ErrorCode::kInvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---- run ------------------------------------------------------------------

struct RunConfig {
  std::string input;
  std::string demo;
  std::string engine = "both";
  std::optional<int> max_photons;
  std::string format = "json";
  std::string output;
};

std::string occupancy_label(const fockpath::FockBasisState& b) {
  std::string s;
  for (const auto& [mode, n] : b.occupancy()) {
    if (!s.empty()) s += ';';
    s += mode.label() + "=" + std::to_string(n);
  }
  return s.empty() ? "vacuum" : s;
}

json distributions(const fockpath::PhotonState& state) {
  std::vector<std::string> ports(state.ports().begin(), state.ports().end());
  json marginals = json::object();
  for (const auto& port : ports) {
    json probs = json::array();
    for (const auto& [counts, p] : fockpath::number_distribution(state, {port})) {
      while (static_cast<int>(probs.size()) < counts[0]) probs.push_back(0.0);
      probs.push_back(r12(p));
    }
    marginals[port] = probs;
  }
  json outcomes = json::array();
  for (const auto& [counts, p] : fockpath::number_distribution(state, ports)) {
    outcomes.push_back({{"counts", counts}, {"p", r12(p)}});
  }
  return {{"ports", marginals}, {"joint", {{"ports", ports}, {"outcomes", outcomes}}}};
}

int cmd_run(const RunConfig& cfg) {
  std::string text;
  std::string name;
  if (!cfg.demo.empty()) {
    const auto demo = fockpath::builtin_circuit(cfg.demo);
    if (!demo) {
      std::cerr << "unknown demo '" << cfg.demo << "'; see 'fockpath demos'\n";
      return kUsage;
    }
    text = std::string(*demo);
    name = cfg.demo;
  } else if (!cfg.input.empty()) {
    text = read_file(cfg.input);
    name = std::filesystem::path(cfg.input).stem().string();
  } else {
    std::cerr << "run: give a circuit file or --demo NAME\n";
    return kUsage;
  }
  const auto engine = fockpath::parse_engine(cfg.engine);
  if (!engine) {
    std::cerr << "unknown engine '" << cfg.engine << "'\n";
    return kUsage;
  }
  fockpath::RunOptions options;
  options.max_photons = photon_budget(cfg.max_photons);

  fockpath::Circuit circuit;
  try {
    circuit = fockpath::parse_circuit(text, name);
  } catch (const fockpath::ParseError& e) {
    std::cerr << (cfg.demo.empty() ? cfg.input : cfg.demo) << ":" << e.line() << ":" << e.column() << ": "
              << fockpath::parse_code_name(e.parse_code()) << " " << e.what() << "\n";
    return kParse;
  }
  const auto result = fockpath::run_circuit(circuit, *engine, options);

  std::string out;
  if (cfg.format == "csv") {
    out = "occupancy,re,im,probability\n";
    for (const auto& [basis, amp] : result.state.terms()) {
      out += occupancy_label(basis) + "," + num(amp.real()) + "," + num(amp.imag()) + "," + num(std::norm(amp)) + "\n";
    }
  } else {
    json j;
    j["engine"] = fockpath::engine_name(result.engine);
    j["circuit"] = name;
    j["state"] = fockpath::to_json(result.state, 12);
    j["distributions"] = distributions(result.state);
    j["discrepancy"] = result.discrepancy ? json(r12(*result.discrepancy)) : json(nullptr);
    out = j.dump(2) + "\n";
  }
  emit(out, cfg.output);
  return kOk;
}

// ---- trace ----------------------------------------------------------------

struct TraceConfig {
  int n1 = 1;
  int n2 = 1;
  std::string element = "rbs";
  std::string rho = "0.7071067811865476+0i";
  std::string tau = "0+0.7071067811865476i";
  double phase_deg = 180.0;
  double axis_deg = 45.0;
  std::optional<int> max_photons;
  std::string output;
};

json complex_json(Amplitude z) { return {{"re", r12(z.real())}, {"im", r12(z.imag())}}; }

int cmd_trace(const TraceConfig& cfg) {
  fockpath::SmallMatrix m;
  if (cfg.element == "rbs") {
    const auto rho = fockpath::parse_complex_literal(cfg.rho);
    const auto tau = fockpath::parse_complex_literal(cfg.tau);
    if (!rho || !tau) {
      std::cerr << "trace: --rho and --tau take RE+IMi\n";
      return kUsage;
    }
    m = fockpath::make_rbs(*rho, *tau).matrix;
  } else if (cfg.element == "waveplate") {
    // Inputs are lab x/y counts; outputs are counted along the plate's own
    // fast and slow axes, where the Bose factors show up.
    const double a = cfg.axis_deg * kPi / 180.0;
    const fockpath::SmallMatrix rotate(std::cos(a), std::sin(a), -std::sin(a), std::cos(a));
    const fockpath::SmallMatrix retard(1.0, 0.0, 0.0, std::polar(1.0, cfg.phase_deg * kPi / 180.0));
    m = retard * rotate;
  } else if (cfg.element == "identity") {
    m = fockpath::SmallMatrix::identity(2);
  } else {
    std::cerr << "trace: element must be rbs, waveplate or identity\n";
    return kUsage;
  }
  const int budget = photon_budget(cfg.max_photons);
  json traces = json::array();
  for (const auto& t : fockpath::paths::trace_paths(cfg.n1, cfg.n2, m, budget)) {
    traces.push_back({{"assignment", {{t.assignment[0][0], t.assignment[0][1]}, {t.assignment[1][0], t.assignment[1][1]}}},
                      {"output", {t.output[0], t.output[1]}},
                      {"re", r12(t.amplitude.real())},
                      {"im", r12(t.amplitude.imag())},
                      {"multiplicity", t.multiplicity},
                      {"bose_factor", r12(t.bose_factor)},
                      {"contribution", complex_json(t.contribution())}});
  }
  json amplitudes = json::array();
  const auto scattered = fockpath::paths::scatter_two_mode(cfg.n1, cfg.n2, m, budget);
  for (auto it = scattered.rbegin(); it != scattered.rend(); ++it) {
    json a = complex_json(it->second);
    a["output"] = {it->first.first, it->first.second};
    amplitudes.push_back(a);
  }
  json matrix = json::array();
  for (int r = 0; r < 2; ++r) matrix.push_back({complex_json(m(r, 0)), complex_json(m(r, 1))});
  json j{{"element", cfg.element}, {"n1", cfg.n1}, {"n2", cfg.n2}, {"matrix", matrix},
         {"traces", traces}, {"amplitudes", amplitudes}};
  emit(j.dump(2) + "\n", cfg.output);
  return kOk;
}

// ---- airy -----------------------------------------------------------------

struct AiryConfig {
  double wavelength = 0.5e-6;
  double focal = 0.2;
  double aperture = 0.01;
  std::optional<double> z1;
  std::optional<double> z2;
  int samples = 201;
  std::optional<double> rmax;
  bool aberration = false;
  bool normalize = false;
  std::string format = "csv";
  std::string output;
};

int cmd_airy(const AiryConfig& cfg) {
  double z1 = 0.4;
  if (cfg.z1 && cfg.z2) {
    const double implied = fockpath::image_distance(*cfg.z1, cfg.focal);
    if (std::abs(implied - *cfg.z2) > 1e-9 * std::abs(*cfg.z2)) {
      std::cerr << "airy: --z1 and --z2 do not satisfy 1/z1 + 1/z2 = 1/f\n";
      return kUsage;
    }
    z1 = *cfg.z1;
  } else if (cfg.z1) {
    z1 = *cfg.z1;
  } else if (cfg.z2) {
    z1 = fockpath::image_distance(*cfg.z2, cfg.focal);  // the imaging condition is symmetric
  }
  const auto g = fockpath::MirrorGeometry::imaging(cfg.focal, cfg.aperture, cfg.wavelength, z1);
  const double rmax = cfg.rmax.value_or(3.0 * fockpath::airy_first_zero(g));
  auto samples = fockpath::airy_profile(g, cfg.samples, rmax, cfg.aberration);
  if (cfg.normalize) {
    const double peak = cfg.aberration ? std::abs(fockpath::focal_amplitude_quadrature({}, g, true))
                                       : fockpath::airy_amplitude_closed(0.0, g);
    for (auto& s : samples) s.amplitude /= peak;
  }
  std::string out;
  if (cfg.format == "json") {
    json rows = json::array();
    for (const auto& s : samples) {
      rows.push_back({{"rho2_m", r12(s.position.x)},
                      {"re", r12(s.amplitude.real())},
                      {"im", r12(s.amplitude.imag())},
                      {"abs", r12(std::abs(s.amplitude))}});
    }
    json j{{"wavelength_m", cfg.wavelength}, {"focal_m", cfg.focal}, {"aperture_m", cfg.aperture},
           {"z1_m", r12(g.z1)}, {"z2_m", r12(g.z2)}, {"aberration", cfg.aberration},
           {"normalized", cfg.normalize}, {"samples", rows}};
    out = j.dump(2) + "\n";
  } else if (cfg.format == "csv") {
    out = "rho2_m,re,im,abs\n";
    for (const auto& s : samples) {
      out += num(s.position.x) + "," + num(s.amplitude.real()) + "," + num(s.amplitude.imag()) + "," +
             num(std::abs(s.amplitude)) + "\n";
    }
  } else {
    std::cerr << "airy: format must be csv or json\n";
    return kUsage;
  }
  emit(out, cfg.output);
  return kOk;
}

// ---- check ----------------------------------------------------------------

struct CheckConfig {
  std::uint64_t seed = 1;
  int count = 200;
  int max_photons = 4;
  int max_elements = 4;
  double tolerance = 1e-10;
};

int cmd_check(const CheckConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  fockpath::RandomCircuitOptions opts;
  opts.max_photons = cfg.max_photons;
  opts.max_elements = cfg.max_elements;
  fockpath::RunOptions run;
  run.max_photons = std::max(cfg.max_photons, fockpath::kDefaultMaxPhotons);
  double worst = 0.0;
  int worst_index = -1;
  for (int i = 0; i < cfg.count; ++i) {
    const double d = fockpath::cross_check(fockpath::random_circuit(rng, opts), run);
    if (d > worst || worst_index < 0) {
      worst = d;
      worst_index = i;
    }
  }
  json corpus = json::object();
  double corpus_worst = 0.0;
  for (const auto& name : fockpath::builtin_circuit_names()) {
    const double d = fockpath::cross_check(fockpath::parse_circuit(*fockpath::builtin_circuit(name), name), run);
    corpus[name] = r12(d);
    corpus_worst = std::max(corpus_worst, d);
  }
  const bool pass = worst < cfg.tolerance && corpus_worst < cfg.tolerance;
  json j{{"seed", cfg.seed}, {"count", cfg.count}, {"max_discrepancy", r12(worst)},
         {"worst_index", worst_index}, {"corpus", corpus}, {"tolerance", cfg.tolerance}, {"pass", pass}};
  std::cout << j.dump(2) << "\n";
  return pass ? kOk : kDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fockpath: photon paths through linear optical circuits"};
  app.require_subcommand(1);

  RunConfig run;
  auto* run_cmd = app.add_subcommand("run", "Run a circuit file or a built-in demo");
  run_cmd->add_option("file", run.input, "Circuit file (.fpc)");
  run_cmd->add_option("--demo", run.demo, "Built-in circuit name");
  run_cmd->add_option("--engine", run.engine, "paths, operators or both")
      ->check(CLI::IsMember({"paths", "operators", "both"}));
  run_cmd->add_option("--max-photons", run.max_photons, "Photon budget");
  run_cmd->add_option("--format", run.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  run_cmd->add_option("-o,--output", run.output, "Output file (default stdout)");

  TraceConfig trace;
  auto* trace_cmd = app.add_subcommand("trace", "List the photon routings through one element");
  trace_cmd->add_option("--n1", trace.n1, "Photons in input mode 1")->check(CLI::NonNegativeNumber);
  trace_cmd->add_option("--n2", trace.n2, "Photons in input mode 2")->check(CLI::NonNegativeNumber);
  trace_cmd->add_option("--element", trace.element, "rbs, waveplate or identity")
      ->check(CLI::IsMember({"rbs", "waveplate", "identity"}));
  trace_cmd->add_option("--rho", trace.rho, "rbs reflection coefficient, RE+IMi");
  trace_cmd->add_option("--tau", trace.tau, "rbs transmission coefficient, RE+IMi");
  trace_cmd->add_option("--phase", trace.phase_deg, "waveplate retardance (deg)");
  trace_cmd->add_option("--axis", trace.axis_deg, "waveplate axis (deg)");
  trace_cmd->add_option("--max-photons", trace.max_photons, "Photon budget");
  trace_cmd->add_option("-o,--output", trace.output, "Output file (default stdout)");

  AiryConfig airy;
  auto* airy_cmd = app.add_subcommand("airy", "Focal-plane amplitude of a paraboloidal mirror");
  airy_cmd->add_option("--wavelength", airy.wavelength, "Wavelength (m)")->check(CLI::PositiveNumber);
  airy_cmd->add_option("--focal", airy.focal, "Focal length (m)")->check(CLI::PositiveNumber);
  airy_cmd->add_option("--aperture", airy.aperture, "Aperture radius (m)")->check(CLI::PositiveNumber);
  airy_cmd->add_option("--z1", airy.z1, "Source distance (m)")->check(CLI::PositiveNumber);
  airy_cmd->add_option("--z2", airy.z2, "Image distance (m)")->check(CLI::PositiveNumber);
  airy_cmd->add_option("--samples", airy.samples, "Number of radial samples")->check(CLI::PositiveNumber);
  airy_cmd->add_option("--rmax", airy.rmax, "Largest radius (m); default three Airy radii")
      ->check(CLI::NonNegativeNumber);
  airy_cmd->add_flag("--aberration", airy.aberration, "Include the spherical-aberration phase");
  airy_cmd->add_flag("--normalize", airy.normalize, "Divide by the on-axis magnitude");
  airy_cmd->add_option("--format", airy.format, "csv or json")->check(CLI::IsMember({"json", "csv"}));
  airy_cmd->add_option("-o,--output", airy.output, "Output file (default stdout)");

  CheckConfig check;
  auto* check_cmd = app.add_subcommand("check", "Cross-check both engines on random circuits and the corpus");
  check_cmd->add_option("--seed", check.seed, "Random seed");
  check_cmd->add_option("--count", check.count, "Number of random circuits")->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--max-photons", check.max_photons, "Photons per random circuit")->check(CLI::PositiveNumber);
  check_cmd->add_option("--max-elements", check.max_elements, "Elements per random circuit")
      ->check(CLI::PositiveNumber);

  auto* demos_cmd = app.add_subcommand("demos", "List the built-in circuits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*run_cmd) return cmd_run(run);
    if (*trace_cmd) return cmd_trace(trace);
    if (*airy_cmd) return cmd_airy(airy);
    if (*check_cmd) return cmd_check(check);
    if (*demos_cmd) {
      for (const auto& name : fockpath::builtin_circuit_names()) std::cout << name << "\n";
      return kOk;
    }
  } catch (const fockpath::Error& e) {
    std::cerr << "fockpath: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "fockpath: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
