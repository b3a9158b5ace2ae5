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

// Circuit files compiled into the library from the circuits/ directory.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fockpath {

/// Names of the built-in circuits (file stems), sorted.
std::vector<std::string> builtin_circuit_names();

/// Text of a built-in circuit, byte-identical to its .fpc file.
std::optional<std::string_view> builtin_circuit(std::string_view name);

}  // namespace fockpath
