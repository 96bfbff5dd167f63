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

#include <optional>

#include "rotorkit/exact.hpp"

namespace rotorkit {

/// U * M * V = D with unimodular U (r x r) and V (n x n), D diagonal with
/// non-negative entries in a divisibility chain d_1 | d_2 | ... (zeros trail).
struct SmithDecomposition {
  IntMat u;
  IntMat d;
  IntMat v;
  IntVec invariant_factors;  // nonzero diagonal entries, in chain order

  std::size_t rank() const { return invariant_factors.size(); }
};

/// Deterministic Smith normal form: pivot is the entry of minimal nonzero
/// absolute value (ties: lowest row, then column); divisibility enforced by
/// the standard entry-fix loop.
SmithDecomposition smith_normal_form(const IntMat& m);

/// Row-style Hermite form: T * M = H with unimodular T, H in row echelon with
/// positive pivots and reduced entries above each pivot; zero rows trail.
struct HermiteDecomposition {
  IntMat t;
  IntMat h;
  std::size_t rank = 0;
};

HermiteDecomposition hermite_rows(const IntMat& m);

/// Columns form a saturated basis of { v : M v = 0 }: every integer kernel
/// vector is an integer combination of the columns.
IntMat kernel_basis(const IntMat& m);

/// Solves M x = b exactly over the integers; nullopt when no integer solution.
std::optional<IntVec> solve_integer(const IntMat& m, const IntVec& b);

std::size_t rank(const IntMat& m);

/// True iff v lies in the lattice generated by the columns of basis.
bool lattice_contains(const IntMat& basis, const IntVec& v);

/// True iff the column lattices coincide.
bool lattice_equal(const IntMat& a, const IntMat& b);

struct HomologicalRotorCode;  // defined in codes.hpp

/// First homology of the chain complex attached to a CSS rotor code:
/// torsion factors (> 1, divisibility order) and the free rank, with the
/// Smith witnesses of the relative presentation matrix.
struct HomologyResult {
  IntVec torsion;
  std::size_t free_rank = 0;
  SmithDecomposition witnesses;

  // Internals needed by logical-operator construction.
  IntMat kernel;        // n x k saturated basis of ker(H_Z .)
  IntMat presentation;  // k x r_X coordinates of H_X rows in the kernel basis

  bool operator==(const HomologyResult& o) const {
    return torsion == o.torsion && free_rank == o.free_rank;
  }
};

HomologyResult homology(const HomologicalRotorCode& code);

bool same_equivalence_class(const HomologicalRotorCode& a, const HomologicalRotorCode& b);

/// Divides each row by the gcd of its entries (zero rows left alone). Scaling
/// a continuum-indexed check row leaves its stabilizer set unchanged.
IntMat normalize_z_rows(const IntMat& hz);

}  // namespace rotorkit
