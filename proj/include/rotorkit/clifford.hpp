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
#include <utility>
#include <vector>

#include "rotorkit/exact.hpp"
#include "rotorkit/pauli.hpp"

namespace rotorkit {

enum class Gate { cnot, cnot_dag, p, swap, quad, cphs };

/// One gate of a Clifford circuit. `count` is a repetition factor so that a
/// run of identical conditional shifts stays a single word entry.
struct GeneratorAtom {
  Gate gate;
  std::size_t a = 0;  // control / rotor index
  std::size_t b = 0;  // target / second index (two-rotor gates)
  ExactAngle phi;     // quad / cphs only
  std::int64_t count = 1;

  static GeneratorAtom cnot(std::size_t from, std::size_t to, std::int64_t count = 1);
  static GeneratorAtom cnot_dag(std::size_t from, std::size_t to, std::int64_t count = 1);
  static GeneratorAtom p(std::size_t rotor);
  static GeneratorAtom swap(std::size_t i, std::size_t j);
  static GeneratorAtom quad(std::size_t rotor, const ExactAngle& phi);
  static GeneratorAtom cphs(std::size_t i, std::size_t j, const ExactAngle& phi);
};

/// Atoms listed in application order: the first atom acts first on states.
using GeneratorWord = std::vector<GeneratorAtom>;

/// A rotor Clifford element stored as its two independent blocks:
/// unimodular A acting on momentum exponents and a symmetric angle matrix C.
/// The full quadrature transformation [[A, 0], [(A^T)^-1 C, (A^T)^-1]] acts on
/// column Pauli vectors (m | phi).
class SymplecticRotorOp {
 public:
  SymplecticRotorOp() = default;
  SymplecticRotorOp(IntMat a, AngleMat c);

  static SymplecticRotorOp identity(std::size_t n);

  std::size_t n() const { return a_.rows(); }
  const IntMat& a() const { return a_; }
  const AngleMat& c() const { return c_; }

  bool is_identity() const { return a_.is_identity() && c_.is_zero(); }
  bool operator==(const SymplecticRotorOp& o) const { return a_ == o.a_ && c_ == o.c_; }

  /// Lower-left block (A^T)^-1 C of the assembled quadrature matrix.
  AngleMat block_xz() const;
  /// Lower-right block (A^T)^-1.
  IntMat block_zz() const;

 private:
  IntMat a_;
  AngleMat c_;
};

SymplecticRotorOp generator(std::size_t n, const GeneratorAtom& atom);

SymplecticRotorOp compose(const SymplecticRotorOp& g, const SymplecticRotorOp& h);

SymplecticRotorOp inverse(const SymplecticRotorOp& g);

/// Conjugation action on Pauli strings: m -> A m, phi -> (A^T)^-1 (C m + phi).
/// The global phase is left untouched.
PauliVector act_on_pauli(const SymplecticRotorOp& g, const PauliVector& v);

/// Splits g = h * nrm with h carrying the integer block (C = 0) and nrm the
/// angle block (A = identity).
std::pair<SymplecticRotorOp, SymplecticRotorOp> hn_decompose(const SymplecticRotorOp& g);

/// Returns g * nrm * g^-1 and checks the result still has A = identity; the
/// angle block transforms as (A^-1)^T C (A^-1).
SymplecticRotorOp normal_conjugate(const SymplecticRotorOp& g, const SymplecticRotorOp& nrm);

/// Word synthesis for a unimodular integer block: deterministic Euclidean
/// column reduction with conditional-shift transvections, swap pivoting and
/// sign flips. Evaluating the word reproduces A exactly with C = 0. Word
/// length is bounded by 4 n^2 (2 + log2(1 + max|A_ij|)) + n entries.
GeneratorWord synthesize_generators(const IntMat& a);

/// True iff C = 0 and A is a signed permutation (A A^T = identity).
bool is_passive(const SymplecticRotorOp& g);

/// Heisenberg transform of the momentum-operator vector: returns A^-1 l.
/// Schroedinger counterpart: applying g to the momentum eigenstate |l> yields
/// |A l>, so the state-level check uses the inverse element.
IntVec transform_nullifier(const SymplecticRotorOp& g, const IntVec& l);

/// n decoupled junction Hamiltonians: cosine terms sum_j -E_J (X_j(1) + h.c.)
/// plus the kinetic form -E_C l^T K l, tracked exactly under conjugation.
struct JosephsonHamiltonian {
  double e_j = 0;
  double e_c = 0;
  std::size_t n = 0;
  std::vector<PauliVector> cosine_terms;
  IntMat kinetic_form;

  static JosephsonHamiltonian decoupled(std::size_t n, double e_j, double e_c);
};

JosephsonHamiltonian transform_josephson(const SymplecticRotorOp& g, const JosephsonHamiltonian& h);

SymplecticRotorOp evaluate_word(std::size_t n, const GeneratorWord& word);

std::size_t word_entry_count(const GeneratorWord& word);

/// Left block-product helper for assembling quadrature matrices in tests.
AngleMat int_angle_mul(const IntMat& a, const AngleMat& c);

}  // namespace rotorkit
