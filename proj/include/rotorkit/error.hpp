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

#include <stdexcept>
#include <string>

namespace rotorkit {

/// Error taxonomy shared by the C API and the CLI exit codes:
/// invalid_argument -> 1, math -> 2, io -> 3.
class Error : public std::runtime_error {
 public:
  enum class Kind { invalid_argument = 1, math = 2, io = 3 };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

[[noreturn]] inline void throw_invalid(const std::string& what) {
  throw Error(Error::Kind::invalid_argument, what);
}

[[noreturn]] inline void throw_math(const std::string& what) {
  throw Error(Error::Kind::math, what);
}

[[noreturn]] inline void throw_io(const std::string& what) {
  throw Error(Error::Kind::io, what);
}

}  // namespace rotorkit
