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

// Creation-operator engine. A state is written as a polynomial in commuting
// creation operators acting on vacuum; an element substitutes each input
// operator by its linear combination of output operators, the product is
// expanded, and the result is read back as Fock amplitudes.

#pragma once

#include <map>
#include <set>
#include <string>

#include "fockpath/elements.hpp"
#include "fockpath/fock.hpp"

namespace fockpath::ops {

/// Exponent vector over modes; reuses the occupancy map.
using Monomial = FockBasisState;

class CreationPolynomial {
 public:
  CreationPolynomial() = default;

  /// coefficient * prod_i (a_i^dagger)^{e_i}
  static CreationPolynomial monomial(const Monomial& exponents, Amplitude coefficient = 1.0);

  const std::map<Monomial, Amplitude>& terms() const noexcept { return terms_; }
  Amplitude coefficient(const Monomial& exponents) const;
  void add(const Monomial& exponents, Amplitude coefficient);
  int degree() const;

 private:
  std::map<Monomial, Amplitude> terms_;
};

/// Coefficient of exponent vector m is amplitude(m) / sqrt(prod m_i!), so the
/// polynomial applied to vacuum reproduces the state.
CreationPolynomial state_to_polynomial(const PhotonState& state);

/// Replaces every input creation operator of `t` by sum_out M(out, in) a_out^dagger
/// and collects like terms.
CreationPolynomial substitute_modes(const CreationPolynomial& p, const ModeTransform& t,
                                    int max_photons = kDefaultMaxPhotons);

/// Acts on vacuum: amplitude(m) = coefficient(m) * sqrt(prod m_i!), not normalized.
Terms expand_to_fock(const CreationPolynomial& p);

struct Expansion {
  PhotonState state;
  double raw_squared_norm = 0.0;
  /// Raw norm differs from 1 by more than 1e-9.
  bool unnormalized_input = false;
};

Expansion polynomial_to_state(const CreationPolynomial& p, const std::set<std::string>& ports = {});

PhotonState apply_transform(const PhotonState& state, const ModeTransform& t,
                            int max_photons = kDefaultMaxPhotons);

}  // namespace fockpath::ops
