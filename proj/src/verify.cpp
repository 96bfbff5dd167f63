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

#include "rotorkit/verify.hpp"

#include <chrono>

namespace rotorkit {

GeneratorWord random_word(std::size_t n, std::size_t length, std::mt19937_64& rng) {
  if (n == 0) throw_invalid("random_word: need at least one rotor");
  GeneratorWord w;
  std::uniform_int_distribution<int> kind(0, n >= 2 ? 5 : 2);
  std::uniform_int_distribution<std::size_t> site(0, n - 1);
  std::uniform_int_distribution<std::int64_t> den(1, 16);
  auto angle = [&]() {
    std::int64_t d = den(rng);
    std::uniform_int_distribution<std::int64_t> num(0, d - 1);
    return ExactAngle::from_fraction(num(rng), d);
  };
  auto pair = [&]() {
    std::size_t a = site(rng), b = site(rng);
    while (b == a) b = site(rng);
    return std::make_pair(a, b);
  };
  for (std::size_t i = 0; i < length; ++i) {
    switch (kind(rng)) {
      case 0:
        w.push_back(GeneratorAtom::p(site(rng)));
        break;
      case 1:
        w.push_back(GeneratorAtom::quad(site(rng), angle()));
        break;
      case 2: {
        if (n < 2) {
          w.push_back(GeneratorAtom::quad(site(rng), angle()));
          break;
        }
        auto [a, b] = pair();
        w.push_back(GeneratorAtom::cnot(a, b));
        break;
      }
      case 3: {
        auto [a, b] = pair();
        w.push_back(GeneratorAtom::cnot_dag(a, b));
        break;
      }
      case 4: {
        auto [a, b] = pair();
        w.push_back(GeneratorAtom::swap(a, b));
        break;
      }
      case 5: {
        auto [a, b] = pair();
        w.push_back(GeneratorAtom::cphs(a, b, angle()));
        break;
      }
    }
  }
  return w;
}

namespace {

PauliVector random_pauli(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> exp(-5, 5);
  std::uniform_int_distribution<std::int64_t> den(1, 16);
  PauliVector p = PauliVector::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    p.m[i] = exp(rng);
    std::int64_t d = den(rng);
    std::uniform_int_distribution<std::int64_t> num(0, d - 1);
    p.phi[i] = ExactAngle::from_fraction(num(rng), d);
  }
  return p;
}

// Q^T Lambda Q = Lambda for the assembled blocks: A^T D = I exactly and
// A^T B symmetric modulo a full turn (B the lower-left angle block).
bool symplectic_condition_holds(const SymplecticRotorOp& g) {
  IntMat d = g.block_zz();
  if (!(g.a().transpose() * d).is_identity()) return false;
  AngleMat atb = int_angle_mul(g.a().transpose(), g.block_xz());
  return atb.is_symmetric();
}

}  // namespace

GroupLawReport run_group_law_suite(std::size_t max_rotors, std::size_t words, std::uint64_t seed) {
  if (max_rotors == 0) throw_invalid("run_group_law_suite: need at least one rotor");
  const auto start = std::chrono::steady_clock::now();
  GroupLawReport report;
  report.words = words;
  report.max_rotors = max_rotors;
  report.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> rotors(1, max_rotors);
  std::uniform_int_distribution<std::size_t> length(1, 24);

  auto fail = [&](std::size_t i, const std::string& what) {
    if (report.failures.size() < 16)
      report.failures.push_back("word " + std::to_string(i) + ": " + what);
  };

  for (std::size_t i = 0; i < words; ++i) {
    const std::size_t n = rotors(rng);
    GeneratorWord word = random_word(n, length(rng), rng);
    SymplecticRotorOp g = evaluate_word(n, word);
    ++report.checks;
    if (!symplectic_condition_holds(g)) fail(i, "symplectic condition violated");
    ++report.checks;
    if (!is_unimodular(g.a()) || !g.c().is_symmetric()) fail(i, "block form violated");
    if (n == 1) {
      ++report.checks;
      Int a00 = g.a().at(0, 0);
      if (a00 != 1 && a00 != -1) fail(i, "single-rotor integer block escaped {+1,-1}");
    }

    auto [h, nrm] = hn_decompose(g);
    ++report.checks;
    if (!(compose(h, nrm) == g)) fail(i, "integer/angle split does not recompose");
    if (!h.c().is_zero() || !nrm.a().is_identity()) fail(i, "split blocks malformed");

    // Conjugating an angle-subgroup element stays in the angle subgroup.
    GeneratorWord nword = random_word(n, 6, rng);
    SymplecticRotorOp nelem = hn_decompose(evaluate_word(n, nword)).second;
    ++report.checks;
    try {
      SymplecticRotorOp conj = normal_conjugate(g, nelem);
      if (!conj.a().is_identity()) fail(i, "conjugate left the angle subgroup");
    } catch (const Error& e) {
      fail(i, std::string("normal_conjugate: ") + e.what());
    }

    ++report.checks;
    if (!(compose(g, inverse(g)) == SymplecticRotorOp::identity(n)) ||
        !(compose(inverse(g), g) == SymplecticRotorOp::identity(n)))
      fail(i, "inverse does not round-trip");

    PauliVector u = random_pauli(n, rng);
    PauliVector v = random_pauli(n, rng);
    ++report.checks;
    if (!(symplectic_phase(act_on_pauli(g, u), act_on_pauli(g, v)) == symplectic_phase(u, v)))
      fail(i, "commutation phase not preserved by the Pauli action");
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace rotorkit
