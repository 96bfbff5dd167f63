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

#include "rotorkit/clifford.hpp"
#include "rotorkit/exact.hpp"
#include "rotorkit/lattice.hpp"
#include "rotorkit/sim.hpp"

namespace rotorkit {

/// CSS rotor code given by integer check matrices, rows indexing checks:
/// X-type stabilizers X(m^T H_X) and the Z-type continuum Z(phi^T H_Z),
/// subject to H_X H_Z^T = 0.
struct HomologicalRotorCode {
  std::size_t n = 0;
  IntMat hx;  // r_X x n
  IntMat hz;  // r_Z x n

  static HomologicalRotorCode make(std::size_t n, const std::vector<IntVec>& hx_rows,
                                   const std::vector<IntVec>& hz_rows);

  /// Throws (naming the first offending row pair) unless H_X H_Z^T = 0.
  void validate() const;

  /// X-stabilizer exponent lattice, columns of H_X^T.
  IntMat x_stabilizer_lattice() const;
};

/// One logical pair. For a torsion factor d > 1 the Z operator's fundamental
/// angle is 2*pi/d applied along `z_pattern`; d = 0 marks a free logical
/// rotor whose Z(phi) ranges over the continuum along the same pattern.
struct LogicalPair {
  IntVec x;          // momentum exponents of the X representative
  IntVec z_pattern;  // integer angle pattern of the Z representative
  Int d;             // torsion order (> 1) or 0 for a free rotor

  /// Z angles as exact values: (2*pi/d) * pattern for torsion; for free
  /// rotors the pattern itself scaled by the given angle.
  AngleVec z_angles(const ExactAngle& free_angle = ExactAngle(Rat(1, 8))) const;
};

struct LogicalOperators {
  std::vector<LogicalPair> pairs;  // torsion factors in divisibility order, then free rotors
};

/// Logical representatives derived from the Smith coordinate system of the
/// code's homology; X representatives are sup-norm reduced within their class
/// (coset shifts up to radius 2, lexicographic tie-break).
LogicalOperators logical_operators(const HomologicalRotorCode& code);

struct EncodingCircuit {
  GeneratorWord word;
  SymplecticRotorOp op;          // evaluated word
  IntVec canonical_factors;      // d_i of the canonical unencoded code, chain order
  HomologicalRotorCode canonical;  // single-rotor X(d_i) checks plus transported Z checks
};

/// Encoder as a Clifford word: conjugating the canonical single-rotor X(d_i)
/// stabilizers by the word regenerates the row lattice of H_X.
EncodingCircuit encoding_circuit(const HomologicalRotorCode& code);

/// Comb code on one rotor concatenated with a modular-qudit layer: the first
/// step is the single-check code H_X = (d*N); the second step restricts the
/// rotation stabilizers to the discrete subgroup generated by Z(2*pi/N).
struct RotorGkpCode {
  Int n_spacing;  // N
  Int d;
  Int stabilizer_x_exponent;    // d*N
  ExactAngle stabilizer_z_angle;  // 2*pi/N
  Int logical_dimension;        // d
  Int logical_x_exponent;       // N
  ExactAngle logical_z_angle;   // 2*pi/(d*N)

  static RotorGkpCode make(const Int& n_spacing, const Int& d);
};

struct QuditGkpStep {
  Int physical_dim;      // d*N
  Int logical_dim;       // d
  Int z_stabilizer_power;  // the imposed stabilizer is Z_L^d of the first step
};

std::pair<HomologicalRotorCode, QuditGkpStep> rotor_gkp_concatenation(const Int& n_spacing,
                                                                      const Int& d);

/// Regularized codeword: superposition over the X-stabilizer orbit lattice
/// shifted by the labelled logical X representatives, restricted to the box
/// [-L, L]^n, weighted by exp(-delta |l|^2 / 2) and normalized. The label has
/// one entry per torsion factor. Empty support throws.
TruncatedRotorState codeword_state(const HomologicalRotorCode& code, const IntVec& label,
                                   std::int64_t cutoff, double delta);

/// Enumerates all points of (shift + column lattice of basis) with every
/// coordinate in [lo, hi].
std::vector<Momenta> lattice_points_in_box(const IntMat& basis, const IntVec& shift,
                                           std::int64_t lo, std::int64_t hi);

}  // namespace rotorkit
