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

#include <doctest.h>

#include <random>
#include <set>

#include "rotorkit/numberphase.hpp"

using namespace rotorkit;

namespace {

HomologicalRotorCode current_mirror() {
  return HomologicalRotorCode::make(4, {{1, -1, 0, 0}, {0, 0, -1, 1}, {-1, -1, 1, 1}},
                                    {{1, 1, 1, 1}});
}

const std::vector<IntVec> kFlippedRows = {{1, 1, 0, 0}, {0, 0, 1, 1}, {0, 2, 0, 2}};

/// Z angle patterns are compared modulo the continuum generated by a single
/// Z check with a +-1 leading coordinate: got - expected must equal
/// alpha * hz_row modulo full turns for some angle alpha.
bool z_matches_mod_checks(const AngleVec& got, const AngleVec& expected, const IntMat& hz) {
  std::vector<Rat> diff(got.size());
  for (std::size_t i = 0; i < got.size(); ++i) diff[i] = got[i].turns() - expected[i].turns();
  if (hz.rows() == 0) {
    for (const auto& d : diff)
      if (!ExactAngle(d).is_zero()) return false;
    return true;
  }
  if (hz.rows() != 1 || abs(hz.at(0, 0)) != 1) return false;
  // alpha is pinned by coordinate 0 up to a full turn.
  for (int k = -2; k <= 2; ++k) {
    Rat alpha = (diff[0] + Rat(k)) / Rat(hz.at(0, 0));
    bool ok = true;
    for (std::size_t i = 0; i < got.size() && ok; ++i)
      ok = ExactAngle(diff[i] - alpha * Rat(hz.at(0, i))).is_zero();
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("already non-negative checks need no flip") {
  HomologicalRotorCode code = HomologicalRotorCode::make(2, {{1, 2}, {0, 3}}, {});
  OrientationFlip flip = find_orientation(code);
  CHECK(flip.signs == IntVec{1, 1});
  CHECK(flip.basis_change.is_identity());
}

TEST_CASE("a single negative check flips its rotor") {
  HomologicalRotorCode code = HomologicalRotorCode::make(1, {{-3}}, {});
  OrientationFlip flip = find_orientation(code);
  CHECK(flip.signs == IntVec{-1});
  NumberPhaseCode np = to_number_phase(code);
  CHECK(np.base.hx.at(0, 0) == 3);
}

TEST_CASE("current-mirror orientation flips the middle rotors") {
  NumberPhaseCode np = to_number_phase(current_mirror());
  CHECK(np.flip.signs == IntVec{1, -1, -1, 1});
  for (std::size_t i = 0; i < np.base.hx.rows(); ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(np.base.hx.at(i, j) >= 0);
  CHECK(lattice_equal(np.base.hx.transpose(), IntMat::from_rows(kFlippedRows).transpose()));
  CHECK(np.base.hz.row(0) == IntVec{1, -1, -1, 1});
  CHECK(is_unimodular(np.flip.basis_change));

  // Semigroup generators are exactly the flipped rows; as a set they match
  // the known non-negative basis.
  std::set<IntVec> got(np.semigroup_x_generators.begin(), np.semigroup_x_generators.end());
  std::set<IntVec> expected(kFlippedRows.begin(), kFlippedRows.end());
  CHECK(got == expected);
}

TEST_CASE("projected comb code keeps its stabilizer data") {
  // Spacing-2N comb on one rotor (the two-level comb construction at N = 3).
  HomologicalRotorCode code = HomologicalRotorCode::make(1, {{6}}, {});
  NumberPhaseCode np = to_number_phase(code);
  CHECK(np.flip.signs == IntVec{1});
  CHECK(np.base.hx.at(0, 0) == 6);
  LogicalOperators ops = np_logicals(np);
  REQUIRE(ops.pairs.size() == 1);
  CHECK(ops.pairs[0].d == 6);
}

TEST_CASE("number-phase codewords live on the non-negative orthant") {
  NumberPhaseCode np = to_number_phase(current_mirror());
  TruncatedRotorState w0 = np_codeword(np, {0}, 6);
  std::set<Momenta> expected;
  for (std::int64_t l1 = 0; l1 <= 6; ++l1)
    for (std::int64_t l2 = -6; l2 <= 6; ++l2)
      for (std::int64_t l3 = 0; l3 <= 6; ++l3) {
        Momenta pt{l1, 2 * l2 + l1, l3, 2 * l2 + l3};
        bool ok = true;
        for (auto v : pt) ok = ok && v >= 0 && v <= 6;
        if (ok) expected.insert(pt);
      }
  std::set<Momenta> got;
  for (const auto& [l, a] : w0.amps) got.insert(l);
  CHECK(got == expected);

  TruncatedRotorState w1 = np_codeword(np, {1}, 6);
  for (const auto& [l, a] : w1.amps) {
    CHECK(l[0] >= 0);
    CHECK((l[1] - l[0]) % 2 != 0);  // odd coset
  }

  CHECK_THROWS_AS(np_codeword(np, {2}, 6), Error);
  CHECK_THROWS_AS(np_codeword(np, {0, 0}, 6), Error);
}

TEST_CASE("single-mode projected comb keeps even Fock support") {
  HomologicalRotorCode code = HomologicalRotorCode::make(1, {{2}}, {});
  NumberPhaseCode np = to_number_phase(code);
  TruncatedRotorState w0 = np_codeword(np, {0}, 12);
  for (const auto& [l, a] : w0.amps) CHECK(l[0] % 2 == 0);
  TruncatedRotorState w1 = np_codeword(np, {1}, 12);
  for (const auto& [l, a] : w1.amps) CHECK(l[0] % 2 == 1);
}

TEST_CASE("transported logicals match the known flipped representatives") {
  NumberPhaseCode np = to_number_phase(current_mirror());
  LogicalOperators ops = np_logicals(np);
  REQUIRE(ops.pairs.size() == 1);
  const LogicalPair& p = ops.pairs[0];
  CHECK(p.d == 2);

  // X class check against X_2(1)^dag X_4(1)^dag, modulo the flipped lattice.
  IntVec expected{0, -1, 0, -1};
  IntVec diff(4), sum(4);
  for (std::size_t i = 0; i < 4; ++i) {
    diff[i] = p.x[i] - expected[i];
    sum[i] = p.x[i] + expected[i];
  }
  IntMat basis = np.base.x_stabilizer_lattice();
  CHECK((lattice_contains(basis, diff) || lattice_contains(basis, sum)));
  CHECK_FALSE(lattice_contains(basis, p.x));

  // Z angles match Z_3(-pi) Z_4(pi) modulo the Z-check continuum.
  AngleVec expected_z{ExactAngle(), ExactAngle(), -ExactAngle::half(), ExactAngle::half()};
  CHECK(z_matches_mod_checks(p.z_angles(), expected_z, np.base.hz));
}

TEST_CASE("flip transport preserves the homology") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<int> entry(-3, 3);
  int done = 0;
  while (done < 15) {
    IntMat hz(1, 3);
    for (std::size_t j = 0; j < 3; ++j) hz.at(0, j) = entry(rng);
    IntMat k = kernel_basis(hz);
    if (k.cols() == 0) continue;
    IntMat mix(2, k.cols());
    for (std::size_t i = 0; i < mix.rows(); ++i)
      for (std::size_t j = 0; j < mix.cols(); ++j) mix.at(i, j) = entry(rng);
    HomologicalRotorCode code;
    code.n = 3;
    code.hx = (k * mix.transpose()).transpose();
    code.hz = hz;
    code.validate();
    NumberPhaseCode np;
    try {
      np = to_number_phase(code);
    } catch (const Error&) {
      continue;  // bounded search may give up on adversarial rows
    }
    CHECK(homology(np.base) == homology(code));
    ++done;
  }
}

TEST_CASE("semigroup tagging classifies gate words") {
  GeneratorWord word{GeneratorAtom::cnot(0, 1), GeneratorAtom::cnot_dag(2, 3),
                     GeneratorAtom::quad(0, ExactAngle::from_fraction(1, 3)),
                     GeneratorAtom::cphs(1, 2, ExactAngle::from_fraction(1, 8)),
                     GeneratorAtom::swap(0, 3)};
  NumberPhaseChannel ch = semigroup_word(word);
  REQUIRE(ch.entries.size() == 5);
  CHECK(ch.entries[0].kind == NpAtomKind::controlled_injection);
  CHECK(ch.entries[0].isometry);
  CHECK_FALSE(ch.entries[0].unitary);
  CHECK(ch.entries[1].kind == NpAtomKind::controlled_subtraction);
  CHECK_FALSE(ch.entries[1].isometry);
  CHECK(ch.entries[2].kind == NpAtomKind::kerr);
  CHECK(ch.entries[2].unitary);
  CHECK(ch.entries[3].kind == NpAtomKind::cross_kerr);
  CHECK(ch.entries[4].kind == NpAtomKind::mode_swap);
  CHECK_FALSE(ch.fully_unitary());

  GeneratorWord with_p{GeneratorAtom::p(0)};
  CHECK_THROWS_WITH_AS(semigroup_word(with_p), doctest::Contains("flip the code orientation"),
                       Error);
}

TEST_CASE("encoding word of the flipped code survives the Fock tagging") {
  NumberPhaseCode np = to_number_phase(current_mirror());
  EncodingCircuit enc = encoding_circuit(np.base);
  NumberPhaseChannel ch = semigroup_word(enc.word);
  CHECK(ch.entries.size() == enc.word.size());
}
