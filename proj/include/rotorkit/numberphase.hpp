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

#include "rotorkit/codes.hpp"

namespace rotorkit {

/// Momentum sign flips S (diagonal +-1) plus a stabilizer re-basis B such
/// that B * H_X * S is entrywise non-negative.
struct OrientationFlip {
  IntVec signs;        // length n, entries +-1
  IntMat basis_change;  // r_X x r_X unimodular

  std::size_t flip_count() const;
};

/// Bounded search over the 2^n sign patterns (n <= 20). A pattern where
/// H_X S is already non-negative wins outright (Gray order from all-positive,
/// B = identity). Otherwise every pattern gets a Hermite-form recombination
/// search (coefficient bound 3, escalated to 6) and the successful pattern
/// with the sparsest non-negative basis is returned (total L1, then fewest
/// flips, then Gray position). Exhaustion throws with diagnostics.
OrientationFlip find_orientation(const HomologicalRotorCode& code);

struct NumberPhaseCode {
  HomologicalRotorCode planar;  // original code
  HomologicalRotorCode base;    // flipped code (H_X+, H_Z+)
  OrientationFlip flip;
  std::vector<IntVec> semigroup_x_generators;  // rows of H_X+, realized daggered
  std::vector<IntVec> z_generators;            // rows of H_Z+
};

NumberPhaseCode to_number_phase(const HomologicalRotorCode& code);

/// Flipped codeword restricted to Fock tuples in [0, L]^n, renormalized.
TruncatedRotorState np_codeword(const NumberPhaseCode& code, const IntVec& label,
                                std::int64_t cutoff);

/// Base-code logicals transported through the sign flips: flipped X
/// components dagger, flipped Z angles negate.
LogicalOperators np_logicals(const NumberPhaseCode& code);

enum class NpAtomKind { controlled_injection, controlled_subtraction, kerr, cross_kerr, mode_swap };

/// A Clifford word tagged for Fock-space execution. Conditional shifts map to
/// controlled photon injection (an isometry, not a unitary); quadratic phase
/// gates map to Kerr-type unitaries. Parity flips do not survive the
/// projection and are rejected.
struct NumberPhaseChannel {
  struct Entry {
    GeneratorAtom atom;
    NpAtomKind kind;
    bool unitary;
    bool isometry;  // U^dag U = I but U U^dag is a projector
  };
  std::vector<Entry> entries;

  bool fully_unitary() const;
};

NumberPhaseChannel semigroup_word(const GeneratorWord& word);

}  // namespace rotorkit
