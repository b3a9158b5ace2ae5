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

// The line-oriented circuit format (.fpc).
//
//   port IDENT
//   source IDENT fock INT [pol x|y] | linpol angle=DEG n=INT
//                | circpol rcp|lcp n=INT | rcp_lcp_pair
//                | coherent re=FLOAT im=FLOAT [pol x|y]
//   rbs split=50 | r=CPLX t=CPLX  IN1 IN2 -> OUT1 OUT2
//   pbs axis=DEG IN -> TRANSMITTED REFLECTED
//   waveplate phase=DEG axis=DEG on IDENT
//   rotpol angle=DEG on IDENT
//   phase deg=DEG on IDENT
//
// '#' starts a comment. Comment lines before the first statement are kept as
// the file header; other comments are dropped.

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "fockpath/circuit.hpp"
#include "fockpath/error.hpp"

namespace fockpath {

enum class ParseCode {
  kUnknownKeyword = 1,     // E01
  kUndeclaredPort = 2,     // E02
  kDuplicateSource = 3,    // E03
  kRbsEnergy = 4,          // E04
  kRbsPhase = 5,           // E05
  kMalformedNumber = 6,    // E06
  kSyntax = 7,             // E07
  kDuplicatePort = 8,      // E08
  kCoherentElement = 9,    // E09: pbs or rotpol in a circuit with a coherent source
};

/// "E01" .. "E09".
std::string parse_code_name(ParseCode code);

class ParseError : public Error {
 public:
  ParseError(ParseCode code, int line, int column, const std::string& message);

  ParseCode parse_code() const noexcept { return parse_code_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  ParseCode parse_code_;
  int line_;
  int column_;
};

Circuit parse_circuit(std::string_view text, const std::string& name = "");

/// Canonical text: header comments, then ports, sources and elements, with a
/// blank line between non-empty groups. Numbers use the shortest form that
/// reads back to the same double.
std::string serialize_circuit(const Circuit& c);

/// Parses RE(+|-)IMi as written in circuit files; nullopt when malformed.
std::optional<Amplitude> parse_complex_literal(std::string_view text);

/// Shortest round-trip decimal form of a double.
std::string format_number(double v);

}  // namespace fockpath
