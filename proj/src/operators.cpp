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

#include "fockpath/operators.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fockpath/error.hpp"

namespace fockpath::ops {

CreationPolynomial CreationPolynomial::monomial(const Monomial& exponents, Amplitude coefficient) {
  CreationPolynomial p;
  p.add(exponents, coefficient);
  return p;
}

Amplitude CreationPolynomial::coefficient(const Monomial& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Amplitude{} : it->second;
}

void CreationPolynomial::add(const Monomial& exponents, Amplitude coefficient) {
  terms_[exponents] += coefficient;
}

int CreationPolynomial::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total());
  return d;
}

CreationPolynomial state_to_polynomial(const PhotonState& state) {
  CreationPolynomial p;
  for (const auto& [basis, amp] : state.terms()) p.add(basis, amp / std::sqrt(basis.factorial_product()));
  return p;
}

namespace {

// Dense polynomial in the (at most two) output operators of one transform,
// indexed by exponent of out_modes[0] and out_modes[1].
class OutputPolynomial {
 public:
  explicit OutputPolynomial(int max_degree)
      : stride_(max_degree + 1), c_(static_cast<std::size_t>(stride_) * stride_) {
    c_[0] = 1.0;
  }

  // Multiply by (w0 a_0^dagger + w1 a_1^dagger).
  void multiply_linear(Amplitude w0, Amplitude w1) {
    std::vector<Amplitude> next(c_.size());
    for (int i = 0; i <= degree_; ++i) {
      for (int j = 0; i + j <= degree_; ++j) {
        const Amplitude c = at(i, j);
        if (c == Amplitude{}) continue;
        next[index(i + 1, j)] += c * w0;
        next[index(i, j + 1)] += c * w1;
      }
    }
    c_.swap(next);
    ++degree_;
  }

  int degree() const { return degree_; }
  Amplitude at(int i, int j) const { return c_[index(i, j)]; }

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * stride_ + j; }

  int stride_;
  int degree_ = 0;
  std::vector<Amplitude> c_;
};

}  // namespace

CreationPolynomial substitute_modes(const CreationPolynomial& p, const ModeTransform& t, int max_photons) {
  validate_transform(t);
  const std::size_t n = t.in_modes.size();
  CreationPolynomial out;
  for (const auto& [mono, coeff] : p.terms()) {
    check_applicable(mono, t);
    if (mono.total() > max_photons) {
      throw Error(ErrorCode::kPhotonBudget, std::to_string(mono.total()) + " photons exceed the budget of " +
                                                std::to_string(max_photons));
    }
    Monomial rest = mono;
    int degree = 0;
    std::vector<int> powers(n);
    for (std::size_t i = 0; i < n; ++i) {
      powers[i] = rest.count(t.in_modes[i]);
      degree += powers[i];
      rest.set(t.in_modes[i], 0);
    }
    OutputPolynomial expansion(degree);
    for (std::size_t i = 0; i < n; ++i) {
      const Amplitude w0 = t.matrix(0, static_cast<int>(i));
      const Amplitude w1 = n == 2 ? t.matrix(1, static_cast<int>(i)) : Amplitude{};
      for (int k = 0; k < powers[i]; ++k) expansion.multiply_linear(w0, w1);
    }
    // Every term of the expansion has exactly `degree` output operators.
    for (int i = degree; i >= 0; --i) {
      const int j = degree - i;
      if (n == 1 && j != 0) continue;
      const Amplitude c = expansion.at(i, j);
      if (c == Amplitude{}) continue;
      Monomial next = rest;
      next.set(t.out_modes[0], i);
      if (n == 2) next.set(t.out_modes[1], j);
      out.add(next, coeff * c);
    }
  }
  return out;
}

Terms expand_to_fock(const CreationPolynomial& p) {
  Terms terms;
  for (const auto& [mono, coeff] : p.terms()) terms[mono] += coeff * std::sqrt(mono.factorial_product());
  return terms;
}

Expansion polynomial_to_state(const CreationPolynomial& p, const std::set<std::string>& ports) {
  const Terms raw = expand_to_fock(p);
  Expansion e{normalize(raw, ports), squared_norm(raw), false};
  e.unnormalized_input = std::abs(e.raw_squared_norm - 1.0) > 1e-9;
  return e;
}

PhotonState apply_transform(const PhotonState& state, const ModeTransform& t, int max_photons) {
  for (const auto& in : t.in_modes) {
    if (!state.has_port(in.port())) {
      throw Error(ErrorCode::kModeMismatch, "port " + in.port() + " is not part of the state");
    }
  }
  std::set<std::string> ports = state.ports();
  for (const auto& o : t.out_modes) ports.insert(o.port());
  return polynomial_to_state(substitute_modes(state_to_polynomial(state), t, max_photons), ports).state;
}

}  // namespace fockpath::ops
