// Copyright 2026 The rotorkit Authors
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
#include <random>
#include <string>
#include <vector>

#include "rotorkit/clifford.hpp"

namespace rotorkit {

/// Uniform random generator word with exact rational angles (denominators up
/// to 16), for property suites. Rotor count is fixed by the caller.
GeneratorWord random_word(std::size_t n, std::size_t length, std::mt19937_64& rng);

struct GroupLawReport {
  std::size_t words = 0;
  std::size_t max_rotors = 0;
  std::uint64_t seed = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  double elapsed_seconds = 0;

  bool ok() const { return failures.empty(); }
};

/// Exact group-law property suite over random generator words: symplectic
/// condition of the assembled quadrature matrix, block structure, integer /
/// angle split round trip, closure of the angle subgroup under conjugation,
/// and preservation of commutation phases by the Pauli action.
GroupLawReport run_group_law_suite(std::size_t max_rotors, std::size_t words, std::uint64_t seed);

}  // namespace rotorkit
