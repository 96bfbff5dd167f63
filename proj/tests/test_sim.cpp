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

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "rotorkit/codes.hpp"
#include "rotorkit/sim.hpp"
#include "rotorkit/verify.hpp"

using namespace rotorkit;

namespace {

constexpr double kPi = std::numbers::pi;

TruncatedRotorState random_state(std::size_t n, std::int64_t cutoff, std::int64_t margin,
                                 std::mt19937_64& rng, StateMode mode = StateMode::planar) {
  TruncatedRotorState s;
  s.n = n;
  s.cutoff = cutoff;
  s.mode = mode;
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  const std::int64_t lo = mode == StateMode::planar ? -(cutoff - margin) : margin;
  const std::int64_t hi = cutoff - margin;
  std::uniform_int_distribution<std::int64_t> mom(lo, hi);
  for (int k = 0; k < 12; ++k) {
    Momenta l(n);
    for (auto& v : l) v = mom(rng);
    s.amps[l] += Cplx(amp(rng), amp(rng));
  }
  s.normalize();
  return s;
}

/// Applies exp(-l - 1/2) entrywise (the damping half of the lowering map).
TruncatedRotorState apply_lowering_damp(const TruncatedRotorState& s) {
  TruncatedRotorState out = s;
  for (auto& [l, a] : out.amps) a *= std::exp(-static_cast<double>(l[0]) - 0.5);
  return out;
}

double state_distance(const TruncatedRotorState& a, const TruncatedRotorState& b) {
  return interior_distance(a, b, 0);
}

}  // namespace

TEST_CASE("elementary gate actions on momentum eigenstates") {
  TruncatedRotorState l2 = TruncatedRotorState::momentum_eigenstate(1, 8, {2});
  TruncatedRotorState rot = apply_rotation(l2, 0, 0.7);
  CHECK(std::abs(rot.amps.at({2}) - std::polar(1.0, 1.4)) < 1e-15);

  TruncatedRotorState quad = apply_gate(l2, Gate::quad, 0, 0, 0.3);
  CHECK(std::abs(quad.amps.at({2}) - std::polar(1.0, 0.3 * 3.0)) < 1e-15);

  TruncatedRotorState two = TruncatedRotorState::momentum_eigenstate(2, 8, {3, 1});
  TruncatedRotorState after = apply_gate(two, Gate::cnot, 0, 1);
  CHECK(after.amps.count({3, 4}) == 1);

  TruncatedRotorState swapped = apply_gate(two, Gate::swap, 0, 1);
  CHECK(swapped.amps.count({1, 3}) == 1);

  TruncatedRotorState flipped = apply_gate(two, Gate::p, 0, 0);
  CHECK(flipped.amps.count({-3, 1}) == 1);
}

TEST_CASE("clipping at the box is recorded") {
  TruncatedRotorState edge = TruncatedRotorState::momentum_eigenstate(1, 4, {4});
  TruncatedRotorState out = apply_shift(edge, 0, 2);
  CHECK(out.amps.empty());
  CHECK(out.truncation_weight == doctest::Approx(1.0));
}

TEST_CASE("fock subtraction below the vacuum annihilates") {
  TruncatedRotorState s;
  s.n = 1;
  s.cutoff = 8;
  s.mode = StateMode::fock;
  s.amps[{0}] = std::sqrt(0.5);
  s.amps[{3}] = std::sqrt(0.5);
  TruncatedRotorState out = apply_shift(s, 0, -1);
  CHECK(out.amps.count({2}) == 1);
  CHECK(out.amps.count({0}) == 0);
  CHECK(out.annihilated_weight == doctest::Approx(0.5));

  CHECK_THROWS_AS(apply_gate(s, Gate::p, 0, 0), Error);
}

TEST_CASE("unitary atoms preserve the norm on interior states") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    TruncatedRotorState s = random_state(2, 16, 8, rng);
    GeneratorWord w = random_word(2, 6, rng);
    TruncatedRotorState out = apply_word(s, w);
    CHECK(std::abs(out.norm2() - 1.0) < 1e-12);
  }
}

TEST_CASE("coherent state satisfies the lowering eigen-relation") {
  for (Cplx xi : {Cplx(1, 0), Cplx(0.7 * std::cos(0.3), 0.7 * std::sin(0.3)), Cplx(0, 2)}) {
    TruncatedRotorState st = coherent_state(CoherentStateSpec(xi), 40);
    TruncatedRotorState lowered = apply_shift(apply_lowering_damp(st), 0, 1);
    TruncatedRotorState scaled = st;
    for (auto& [l, a] : scaled.amps) a *= xi;
    CHECK(interior_distance(lowered, scaled, 2) < 1e-8);
  }
}

TEST_CASE("momentum damping rescales the coherent parameter") {
  const double chi = 1.3;
  TruncatedRotorState st = coherent_state(CoherentStateSpec(Cplx(0.8, 0.1)), 40);
  for (auto& [l, a] : st.amps) a *= std::exp(-std::log(chi) * static_cast<double>(l[0]));
  st.normalize();
  TruncatedRotorState target = coherent_state(CoherentStateSpec(chi * Cplx(0.8, 0.1)), 40);
  CHECK(interior_distance(st, target, 2) < 1e-10);
}

TEST_CASE("displacement covariance and parity action") {
  for (Cplx xi : {Cplx(1, 0), Cplx(0.7 * std::cos(0.3), 0.7 * std::sin(0.3)), Cplx(0, 2)}) {
    TruncatedRotorState st = coherent_state(CoherentStateSpec(xi), 40);

    const double c = 0.4;
    const std::int64_t d = 2;
    TruncatedRotorState moved = displace(st, c, d);
    const Cplx alpha(c, static_cast<double>(d));
    const Cplx factor = std::pow(xi * std::exp(alpha / 2.0), static_cast<double>(d));
    TruncatedRotorState target = coherent_state(CoherentStateSpec(std::exp(Cplx(0, 1) * alpha) * xi), 40);
    // Both sides renormalized with the first significant amplitude aligned.
    for (auto& [l, a] : target.amps) a *= factor;
    double n1 = std::sqrt(moved.norm2()), n2 = std::sqrt(target.norm2());
    for (auto& [l, a] : moved.amps) a /= n1;
    for (auto& [l, a] : target.amps) a /= n2;
    CHECK(interior_distance(moved, target, 3) < 1e-8);

    // d = 0 reduces to a plain rotation of the phase.
    TruncatedRotorState rotated = displace(st, 0.9, 0);
    TruncatedRotorState direct = apply_rotation(st, 0, -0.9);
    CHECK(state_distance(rotated, direct) < 1e-14);

    // Parity inverts the coherent parameter.
    TruncatedRotorState par = apply_gate(st, Gate::p, 0, 0);
    TruncatedRotorState inv = coherent_state(CoherentStateSpec(1.0 / xi), 40);
    CHECK(interior_distance(par, inv, 1) < 1e-8);
  }
}

TEST_CASE("phase amplitudes of momentum eigenstates") {
  TruncatedRotorState zero = TruncatedRotorState::momentum_eigenstate(1, 8, {0});
  for (double theta : {0.0, 0.4, 2.2, -1.3})
    CHECK(std::abs(phase_amplitude(zero, {theta}) - 1.0 / std::sqrt(2.0 * kPi)) < 1e-15);

  TruncatedRotorState k3 = TruncatedRotorState::momentum_eigenstate(1, 8, {3});
  for (double theta : {0.3, 1.9})
    CHECK(std::abs(phase_amplitude(k3, {theta}) -
                   std::polar(1.0 / std::sqrt(2.0 * kPi), -3.0 * theta)) < 1e-15);
}

TEST_CASE("comb state phase distribution peaks at the coset angles") {
  HomologicalRotorCode code = HomologicalRotorCode::make(1, {{3}}, {});
  TruncatedRotorState comb = codeword_state(code, {0}, 40, 0.01);
  std::vector<double> dist = phase_distribution(comb, 0, 360);
  double peak = *std::max_element(dist.begin(), dist.end());
  // Peaks at 0, 2pi/3, 4pi/3 <-> grid indices 180, 300, 60 (grid over [-pi, pi)).
  CHECK(dist[180] == doctest::Approx(peak).epsilon(1e-9));
  CHECK(dist[300] == doctest::Approx(peak).epsilon(1e-9));
  CHECK(dist[60] == doctest::Approx(peak).epsilon(1e-9));
  CHECK(dist[0] < 0.05 * peak);
}

TEST_CASE("wigner function of a momentum eigenstate is non-negative on integer rows") {
  TruncatedRotorState zero = TruncatedRotorState::momentum_eigenstate(1, 8, {0});
  std::vector<double> rows;
  for (double l = -4; l <= 4; l += 1.0) rows.push_back(l);
  WignerGrid w = wigner(zero, rows, 128);
  CHECK(w.min() > -1e-10);
  // The l = 0 row integrates to one; other integer rows vanish.
  double mass = 0;
  for (std::size_t li = 0; li < rows.size(); ++li)
    for (double v : w.w[li]) mass += v * (2.0 * kPi / 128.0);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("wigner function of a regularized comb shows the checkerboard") {
  HomologicalRotorCode code = HomologicalRotorCode::make(1, {{2}}, {});
  TruncatedRotorState comb = codeword_state(code, {0}, 60, 0.05);
  std::vector<double> rows;
  for (double l = -4; l <= 4; l += 0.5) rows.push_back(l);
  WignerGrid w = wigner(comb, rows, 256);
  CHECK(w.min() < -0.01 * w.max());
  auto at = [&](double phi, double l) {
    std::size_t li = static_cast<std::size_t>((l + 4) * 2 + 0.5);
    std::size_t pi_idx = static_cast<std::size_t>((phi + kPi) * 256 / (2 * kPi) + 0.5);
    return w.w[li][pi_idx];
  };
  for (int c = -2; c <= 1; ++c)
    for (int d = -3; d <= 3; ++d) {
      double v = at(kPi * c / 2.0, static_cast<double>(d));
      double sign = (c * d) % 2 == 0 ? 1.0 : -1.0;
      CHECK(v * sign > 1e-6);
    }
}

TEST_CASE("half-integer rows vanish for an even comb") {
  HomologicalRotorCode code = HomologicalRotorCode::make(1, {{2}}, {});
  TruncatedRotorState comb = codeword_state(code, {0}, 60, 0.05);
  WignerGrid w = wigner(comb, {0.5, 1.5, -2.5}, 128);
  for (const auto& row : w.w)
    for (double v : row) CHECK(std::abs(v) < 1e-12);
}

TEST_CASE("quadrature floor is enforced") {
  TruncatedRotorState zero = TruncatedRotorState::momentum_eigenstate(1, 8, {0});
  CHECK_THROWS_AS(wigner(zero, {0.0}, 32), Error);
}

TEST_CASE("theta series match direct partial sums") {
  for (double q : {0.05, 0.3, 0.8}) {
    double direct = 1.0;
    for (int k = 1; k < 200; ++k) direct += 2.0 * std::pow(q, k * k);
    CHECK(std::abs(jacobi_theta(3, 0.0, q).real() - direct) < 1e-14);
    CHECK(std::abs(jacobi_theta(1, 0.0, q)) < 1e-15);
    CHECK(std::abs(jacobi_theta(4, 0.0, q) - jacobi_theta(3, kPi / 2.0, q)) < 1e-14);
  }
  CHECK_THROWS_AS(jacobi_theta(3, 0.0, 1.5), Error);
  CHECK_THROWS_AS(jacobi_theta(0, 0.0, 0.5), Error);
}

TEST_CASE("comb overlaps: norm, selection rule, brute force, hermiticity") {
  const std::int64_t n = 3;
  const double delta = 0.1;
  const double q = std::exp(-2.0 * delta * 9.0);

  // Diagonal element with no displacement is the squared comb norm.
  CHECK(std::abs(qec_overlap(n, delta, 2, 2, 0.0, 0, 0) - jacobi_theta(3, 0.0, q)) < 1e-14);

  // Off-lattice shift differences vanish identically.
  CHECK(qec_overlap(n, delta, 1, 0, 0.4, 0, 0) == Cplx(0));
  CHECK(qec_overlap(n, delta, 2, -2, 1.1, 1, 0) == Cplx(0));

  std::vector<double> dths{0.0, 0.3, 1.1};
  const double scale = std::abs(jacobi_theta(3, 0.0, q));
  for (std::int64_t m = -4; m <= 4; ++m)
    for (std::int64_t mp = -4; mp <= 4; ++mp)
      for (double dth : dths)
        for (int bra = 0; bra < 2; ++bra)
          for (int ket = 0; ket < 2; ++ket) {
            Cplx closed = qec_overlap(n, delta, m, mp, dth, bra, ket);
            Cplx brute = testing::brute_force_overlap(n, delta, m, mp, dth, bra, ket, 60);
            CHECK(std::abs(closed - brute) <= 1e-10 * std::max({1.0, std::abs(closed), scale}));
            // Hermiticity under swapping the two error operators.
            Cplx swapped = qec_overlap(n, delta, mp, m, -dth, ket, bra);
            CHECK(std::abs(closed - std::conj(swapped)) < 1e-12 * scale);
          }
}

TEST_CASE("momentum eigenstates map onto the transformed eigenvalue vector") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2;
    GeneratorWord w = random_word(n, 8, rng);
    SymplecticRotorOp g = evaluate_word(n, w);
    Momenta l{static_cast<std::int64_t>(rng() % 5) - 2, static_cast<std::int64_t>(rng() % 5) - 2};
    TruncatedRotorState st = TruncatedRotorState::momentum_eigenstate(n, 4096, l);
    TruncatedRotorState out = apply_word(st, w);
    REQUIRE(out.amps.size() == 1);
    // The state lands on |A l>, i.e. the nullifier transform of the inverse.
    IntVec expect = transform_nullifier(inverse(g), IntVec{l[0], l[1]});
    Momenta key{static_cast<std::int64_t>(expect[0]), static_cast<std::int64_t>(expect[1])};
    CHECK(out.amps.count(key) == 1);
    CHECK(std::abs(std::abs(out.amps.at(key)) - 1.0) < 1e-12);
  }
}

TEST_CASE("schroedinger application matches the heisenberg Pauli transport") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 2;
    // Short words on a tight support inside a wide box: no clipping on
    // either evaluation order, so the comparison is exact.
    GeneratorWord w = random_word(n, 4, rng);
    SymplecticRotorOp g = evaluate_word(n, w);
    PauliVector v = PauliVector::identity(n);
    std::uniform_int_distribution<std::int64_t> exp(-2, 2);
    for (std::size_t i = 0; i < n; ++i) {
      v.m[i] = exp(rng);
      v.phi[i] = ExactAngle::from_fraction(static_cast<std::int64_t>(rng() % 8), 8);
    }
    TruncatedRotorState s = random_state(n, 64, 61, rng);
    TruncatedRotorState lhs = apply_word(apply_pauli(s, v), w);
    TruncatedRotorState rhs = apply_pauli(apply_word(s, w), act_on_pauli(g, v));
    // Conjugation drops the scalar phase, so compare up to a global phase.
    Cplx num = inner_product(rhs, lhs);
    if (std::abs(num) > 1e-9) {
      Cplx phase = num / std::abs(num);
      for (auto& [l, a] : rhs.amps) a *= phase;
    }
    CHECK(interior_distance(lhs, rhs, 0) < 1e-10);
  }
}

TEST_CASE("word application agrees with the dense operator product") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 2;
    const std::int64_t box = 6;
    GeneratorWord w = random_word(n, 5, rng);
    testing::DenseOp dense = testing::dense_word(n, w, box);
    TruncatedRotorState s = random_state(n, box, 3, rng);
    TruncatedRotorState out = apply_word(s, w);

    std::vector<Cplx> vec(dense.dim, Cplx(0));
    for (const auto& [l, a] : s.amps) vec[dense.index(l)] = a;
    std::vector<Cplx> expect(dense.dim, Cplx(0));
    for (std::size_t r = 0; r < dense.dim; ++r)
      for (std::size_t c = 0; c < dense.dim; ++c) expect[r] += dense.at(r, c) * vec[c];
    for (std::size_t r = 0; r < dense.dim; ++r) {
      auto l = dense.tuple(r);
      Cplx got = out.amps.count(l) ? out.amps.at(l) : Cplx(0);
      CHECK(std::abs(got - expect[r]) < 1e-12);
    }
  }
}

TEST_CASE("fock isometries: injection adjoint identities") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 10; ++t) {
    TruncatedRotorState s = random_state(2, 64, 2, rng, StateMode::fock);
    // Conditional injection then subtraction is the identity.
    TruncatedRotorState injected = apply_gate(s, Gate::cnot, 0, 1);
    auto branches = cnot_np_dagger_branches(injected, 0, 1);
    CHECK(state_distance(branches.subtracted, s) < 1e-12);
    CHECK(branches.projected.norm2() < 1e-24);

    // Subtraction then injection projects onto target >= control.
    auto first = cnot_np_dagger_branches(s, 0, 1);
    TruncatedRotorState back = apply_gate(first.subtracted, Gate::cnot, 0, 1);
    TruncatedRotorState projected = s;
    projected.amps.clear();
    for (const auto& [l, a] : s.amps)
      if (l[1] >= l[0]) projected.amps[l] = a;
    CHECK(state_distance(back, projected) < 1e-12);

    // The two branches form a trace-preserving pair.
    CHECK(std::abs(first.subtracted.norm2() + first.projected.norm2() - s.norm2()) < 1e-12);
  }
}
