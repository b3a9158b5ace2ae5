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

#pragma once

#include <cstdint>

namespace fockpath {

/// n! as a double. Exact for n <= 22; n is limited to 170.
double factorial(int n);

/// Binomial coefficient as an exact 64-bit integer; n is limited to 66.
std::uint64_t binomial(int n, int k);

inline constexpr int kMaxBinomialRow = 66;

}  // namespace fockpath
