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

#include "rotorkit/pauli.hpp"

namespace rotorkit {

namespace {

void check_same_n(const PauliVector& u, const PauliVector& v) {
  if (u.n != v.n) throw_invalid("PauliVector: rotor count mismatch");
}

}  // namespace

PauliVector PauliVector::identity(std::size_t n) {
  PauliVector p;
  p.n = n;
  p.m.assign(n, Int(0));
  p.phi.assign(n, ExactAngle());
  return p;
}

PauliVector PauliVector::x(std::size_t n, std::size_t site, const Int& k) {
  if (site >= n) throw_invalid("PauliVector: rotor index out of range");
  PauliVector p = identity(n);
  p.m[site] = k;
  return p;
}

PauliVector PauliVector::z(std::size_t n, std::size_t site, const ExactAngle& angle) {
  if (site >= n) throw_invalid("PauliVector: rotor index out of range");
  PauliVector p = identity(n);
  p.phi[site] = angle;
  return p;
}

PauliVector PauliVector::from_exponents(const IntVec& exponents) {
  PauliVector p = identity(exponents.size());
  p.m = exponents;
  return p;
}

PauliVector PauliVector::from_angles(const AngleVec& angles) {
  PauliVector p = identity(angles.size());
  p.phi = angles;
  return p;
}

bool PauliVector::is_identity_up_to_phase() const {
  for (const auto& v : m)
    if (v != 0) return false;
  for (const auto& a : phi)
    if (!a.is_zero()) return false;
  return true;
}

PauliVector PauliVector::adjoint() const {
  // (e^{ig} Z(phi) X(m))^dag = e^{-ig} X(-m) Z(-phi) = e^{-ig} e^{-i m.phi} Z(-phi) X(-m)
  PauliVector out = *this;
  Rat dot = 0;
  for (std::size_t i = 0; i < n; ++i) {
    out.m[i] = -m[i];
    out.phi[i] = -phi[i];
    dot += Rat(m[i]) * phi[i].turns();
  }
  out.phase = ExactAngle(-phase.turns() - dot);
  return out;
}

ExactAngle symplectic_phase(const PauliVector& u, const PauliVector& v) {
  check_same_n(u, v);
  Rat acc = 0;
  for (std::size_t i = 0; i < u.n; ++i) {
    acc += Rat(u.m[i]) * v.phi[i].turns();
    acc -= u.phi[i].turns() * Rat(v.m[i]);
  }
  return ExactAngle(acc);
}

PauliVector compose(const PauliVector& u, const PauliVector& v) {
  check_same_n(u, v);
  PauliVector out = PauliVector::identity(u.n);
  Rat reorder = 0;  // from X(m_u) Z(phi_v) = e^{-i m_u.phi_v} Z(phi_v) X(m_u)
  for (std::size_t i = 0; i < u.n; ++i) {
    out.m[i] = u.m[i] + v.m[i];
    out.phi[i] = u.phi[i] + v.phi[i];
    reorder += Rat(u.m[i]) * v.phi[i].turns();
  }
  out.phase = ExactAngle(u.phase.turns() + v.phase.turns() - reorder);
  return out;
}

bool commutes(const PauliVector& u, const PauliVector& v) {
  return symplectic_phase(u, v).is_zero();
}

}  // namespace rotorkit
