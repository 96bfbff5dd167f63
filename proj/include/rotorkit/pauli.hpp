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

#include <cstddef>

#include "rotorkit/exact.hpp"

namespace rotorkit {

/// An n-rotor Pauli string in canonical order
///
///   e^{2*pi*i*phase} * Z(phi) X(m),
///
/// with integer momentum shifts m, exact rotation angles phi, and an exact
/// scalar phase accumulated under composition. The single-rotor algebra is
/// X(m) Z(phi) = e^{-i m phi} Z(phi) X(m).
struct PauliVector {
  std::size_t n = 0;
  IntVec m;          // X exponents, length n
  AngleVec phi;      // Z angles, length n
  ExactAngle phase;  // global scalar phase, in turns

  static PauliVector identity(std::size_t n);
  /// X(k) on rotor `site` of an n-rotor register.
  static PauliVector x(std::size_t n, std::size_t site, const Int& k);
  /// Z(angle) on rotor `site`.
  static PauliVector z(std::size_t n, std::size_t site, const ExactAngle& angle);
  /// Pure X string with the given exponent vector.
  static PauliVector from_exponents(const IntVec& exponents);
  /// Pure Z string with the given angle pattern.
  static PauliVector from_angles(const AngleVec& angles);

  bool is_identity_up_to_phase() const;
  PauliVector adjoint() const;
};

/// Exponent of the commutation phase e^{-i u^T Lambda v}: returns
/// (m_u . phi_v - phi_u . m_v) as a reduced angle.
ExactAngle symplectic_phase(const PauliVector& u, const PauliVector& v);

/// Operator product u * v, renormalized into Z-X canonical order. The exact
/// reordering phase -m_u . phi_v is folded into the global phase.
PauliVector compose(const PauliVector& u, const PauliVector& v);

bool commutes(const PauliVector& u, const PauliVector& v);

}  // namespace rotorkit
