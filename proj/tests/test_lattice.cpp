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

#include "rotorkit/codes.hpp"
#include "rotorkit/lattice.hpp"

using namespace rotorkit;

namespace {

IntMat random_matrix(std::size_t r, std::size_t c, int bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntMat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = entry(rng);
  return m;
}

IntMat random_unimodular(std::size_t n, int steps, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  IntMat a = IntMat::identity(n);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = rng() % n, j = rng() % n;
    if (i == j) continue;
    a.add_row(i, j, coeff(rng));
    if (rng() % 4 == 0) a.scale_row(rng() % n, -1);
  }
  return a;
}

void check_witnesses(const IntMat& m, const SmithDecomposition& s) {
  CHECK(is_unimodular(s.u));
  CHECK(is_unimodular(s.v));
  CHECK(s.u * m * s.v == s.d);
  for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i) {
    CHECK(s.invariant_factors[i] > 0);
    CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
  }
  // Zeros trail on the diagonal.
  const std::size_t steps = std::min(m.rows(), m.cols());
  bool seen_zero = false;
  for (std::size_t i = 0; i < steps; ++i) {
    if (s.d.at(i, i) == 0) seen_zero = true;
    if (seen_zero) CHECK(s.d.at(i, i) == 0);
    CHECK(s.d.at(i, i) >= 0);
  }
}

}  // namespace

TEST_CASE("smith normal form of diag(2,3) is diag(1,6)") {
  IntMat m = IntMat::from_rows({{2, 0}, {0, 3}});
  SmithDecomposition s = smith_normal_form(m);
  check_witnesses(m, s);
  CHECK(s.invariant_factors == IntVec{1, 6});
}

TEST_CASE("smith normal form of the zero matrix") {
  IntMat m(2, 3);
  SmithDecomposition s = smith_normal_form(m);
  CHECK(s.invariant_factors.empty());
  CHECK(s.u.is_identity());
  CHECK(s.v.is_identity());
  CHECK(s.d.is_zero());
}

TEST_CASE("invariant factors from gcd and determinant") {
  IntMat m = IntMat::from_rows({{4, 6}, {2, 8}});
  SmithDecomposition s = smith_normal_form(m);
  check_witnesses(m, s);
  // d1 = gcd of entries (2), d1 d2 = |det| = 20.
  CHECK(s.invariant_factors == IntVec{2, 10});
}

TEST_CASE("witnesses verify on random matrices and factors are invariant") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    IntMat m = random_matrix(r, c, 9, rng);
    SmithDecomposition s = smith_normal_form(m);
    check_witnesses(m, s);

    // Pre/post unimodular scrambling leaves the invariant factors alone.
    IntMat scrambled = random_unimodular(r, 8, rng) * m * random_unimodular(c, 8, rng);
    CHECK(smith_normal_form(scrambled).invariant_factors == s.invariant_factors);
  }
}

TEST_CASE("square nonsingular: factor product equals |det|") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 1 + rng() % 4;
    IntMat m = random_matrix(n, n, 7, rng);
    Int dd = det(m);
    if (dd == 0) continue;
    SmithDecomposition s = smith_normal_form(m);
    Int prod = 1;
    for (const auto& f : s.invariant_factors) prod *= f;
    CHECK(prod == abs(dd));
  }
}

TEST_CASE("kernel basis spans and saturates") {
  IntMat m = IntMat::from_rows({{1, 1, 1, 1}});
  IntMat k = kernel_basis(m);
  CHECK(k.cols() == 3);
  CHECK((m * k).is_zero());
  // Saturation: all invariant factors of the kernel basis are 1.
  SmithDecomposition s = smith_normal_form(k);
  CHECK(s.rank() == 3);
  for (const auto& f : s.invariant_factors) CHECK(f == 1);

  CHECK(kernel_basis(IntMat::identity(3)).cols() == 0);
}

TEST_CASE("random kernels annihilate and saturate") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 40; ++t) {
    IntMat m = random_matrix(3, 5, 6, rng);
    IntMat k = kernel_basis(m);
    CHECK((m * k).is_zero());
    if (k.cols() > 0) {
      SmithDecomposition s = smith_normal_form(k);
      CHECK(s.rank() == k.cols());
      for (const auto& f : s.invariant_factors) CHECK(f == 1);
    }
    CHECK(k.cols() == 5 - rank(m));
  }
}

TEST_CASE("integer solve round trips") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 40; ++t) {
    IntMat m = random_matrix(3, 4, 5, rng);
    IntVec x(4);
    for (auto& v : x) v = Int(static_cast<std::int64_t>(rng() % 11)) - 5;
    IntVec b = mat_vec(m, x);
    auto sol = solve_integer(m, b);
    REQUIRE(sol.has_value());
    CHECK(mat_vec(m, *sol) == b);
  }
}

TEST_CASE("homology of single-check codes reproduces torsion") {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 1}, {2, 3}, {3, 4}}) {
    HomologicalRotorCode code = HomologicalRotorCode::make(1, {{Int(d * n)}}, {});
    HomologyResult h = homology(code);
    CHECK(h.torsion == IntVec{Int(d * n)});
    CHECK(h.free_rank == 0);
  }
}

TEST_CASE("homology of the current-mirror code is a single qubit") {
  HomologicalRotorCode code = HomologicalRotorCode::make(
      4, {{1, -1, 0, 0}, {0, 0, -1, 1}, {-1, -1, 1, 1}}, {{1, 1, 1, 1}});
  HomologyResult h = homology(code);
  CHECK(h.torsion == IntVec{2});
  CHECK(h.free_rank == 0);
}

TEST_CASE("bare rotors are purely free") {
  HomologicalRotorCode code = HomologicalRotorCode::make(2, {}, {});
  HomologyResult h = homology(code);
  CHECK(h.torsion.empty());
  CHECK(h.free_rank == 2);
}

TEST_CASE("free rank plus factor count equals kernel dimension") {
  std::mt19937_64 rng(37);
  int done = 0;
  while (done < 25) {
    // Random CSS pair: draw hz, then hx rows from its kernel.
    IntMat hz = random_matrix(1, 4, 3, rng);
    IntMat k = kernel_basis(hz);
    if (k.cols() == 0) continue;
    IntMat mix = random_matrix(2, k.cols(), 2, rng);
    IntMat hx = (k * mix.transpose()).transpose();
    HomologicalRotorCode code;
    code.n = 4;
    code.hx = hx;
    code.hz = hz;
    code.validate();
    HomologyResult h = homology(code);
    CHECK(h.free_rank + h.witnesses.invariant_factors.size() == k.cols());
    ++done;
  }
}

TEST_CASE("CSS violation reports the offending pair") {
  HomologicalRotorCode bad = HomologicalRotorCode::make(1, {{1}}, {{1}});
  CHECK_THROWS_WITH_AS(homology(bad),
                       doctest::Contains("X check 0 and Z check 0"), Error);
}

TEST_CASE("equivalence classes follow the invariant factors") {
  auto diag_code = [](std::vector<int> ds) {
    std::vector<IntVec> rows;
    std::size_t n = ds.size();
    for (std::size_t i = 0; i < n; ++i) {
      IntVec row(n, Int(0));
      row[i] = ds[i];
      rows.push_back(row);
    }
    return HomologicalRotorCode::make(n, rows, {});
  };
  CHECK(same_equivalence_class(diag_code({2, 3}), diag_code({1, 6})));
  CHECK_FALSE(same_equivalence_class(diag_code({2, 8}), diag_code({4, 4})));
  CHECK(same_equivalence_class(diag_code({2, 8}), diag_code({2, 8})));
}

TEST_CASE("z-row normalization rescales by the gcd") {
  IntMat hz = IntMat::from_rows({{2, 4, -6}, {0, 0, 0}, {3, 5, 1}});
  IntMat norm = normalize_z_rows(hz);
  CHECK(norm.row(0) == IntVec{1, 2, -3});
  CHECK(norm.row(1) == IntVec{0, 0, 0});
  CHECK(norm.row(2) == IntVec{3, 5, 1});
}

TEST_CASE("hermite rows put the lattice in echelon form") {
  IntMat m = IntMat::from_rows({{1, 1, 0, 0}, {0, 0, 1, 1}, {-1, 1, -1, 1}});
  HermiteDecomposition h = hermite_rows(m);
  CHECK(h.rank == 3);
  CHECK(is_unimodular(h.t));
  CHECK(h.t * m == h.h);
  // Row lattices agree.
  CHECK(lattice_equal(m.transpose(), h.h.transpose()));
}
