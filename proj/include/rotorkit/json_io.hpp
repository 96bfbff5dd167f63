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

#include <json.hpp>

#include "rotorkit/clifford.hpp"
#include "rotorkit/codes.hpp"
#include "rotorkit/pauli.hpp"

namespace rotorkit {

using Json = nlohmann::json;

/// Big integers serialize as JSON numbers while they fit in 64 bits and as
/// decimal strings beyond that; readers accept both.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json angle_to_json(const ExactAngle& a);  // {"num": .., "den": ..} in turns
ExactAngle angle_from_json(const Json& j);

Json matrix_to_json(const IntMat& m, bool as_strings = false);
IntMat matrix_from_json(const Json& j);

Json pauli_to_json(const PauliVector& p);
PauliVector pauli_from_json(const Json& j);

Json atom_to_json(const GeneratorAtom& a);
GeneratorAtom atom_from_json(const Json& j);

Json word_to_json(const GeneratorWord& w);
GeneratorWord word_from_json(const Json& j);

Json code_to_json(const HomologicalRotorCode& c);
HomologicalRotorCode code_from_json(const Json& j);

/// %.17g formatting, the fixed float representation used in CLI artifacts.
std::string format_g17(double v);

}  // namespace rotorkit
