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

#include "rotorkit/clifford.hpp"

#include <algorithm>

namespace rotorkit {

namespace {

void check_index(std::size_t n, std::size_t i) {
  if (i >= n) throw_invalid("gate index out of range");
}

void check_pair(std::size_t n, std::size_t i, std::size_t j) {
  check_index(n, i);
  check_index(n, j);
  if (i == j) throw_invalid("two-rotor gate needs distinct rotors");
}

}  // namespace

GeneratorAtom GeneratorAtom::cnot(std::size_t from, std::size_t to, std::int64_t count) {
  return GeneratorAtom{Gate::cnot, from, to, ExactAngle(), count};
}
GeneratorAtom GeneratorAtom::cnot_dag(std::size_t from, std::size_t to, std::int64_t count) {
  return GeneratorAtom{Gate::cnot_dag, from, to, ExactAngle(), count};
}
GeneratorAtom GeneratorAtom::p(std::size_t rotor) {
  return GeneratorAtom{Gate::p, rotor, rotor, ExactAngle(), 1};
}
GeneratorAtom GeneratorAtom::swap(std::size_t i, std::size_t j) {
  return GeneratorAtom{Gate::swap, i, j, ExactAngle(), 1};
}
GeneratorAtom GeneratorAtom::quad(std::size_t rotor, const ExactAngle& phi) {
  return GeneratorAtom{Gate::quad, rotor, rotor, phi, 1};
}
GeneratorAtom GeneratorAtom::cphs(std::size_t i, std::size_t j, const ExactAngle& phi) {
  return GeneratorAtom{Gate::cphs, i, j, phi, 1};
}

SymplecticRotorOp::SymplecticRotorOp(IntMat a, AngleMat c) : a_(std::move(a)), c_(std::move(c)) {
  if (a_.rows() != a_.cols() || c_.size() != a_.rows())
    throw_invalid("SymplecticRotorOp: block shape mismatch");
  if (!is_unimodular(a_)) throw_math("SymplecticRotorOp: integer block must be unimodular");
  if (!c_.is_symmetric()) throw_math("SymplecticRotorOp: angle block must be symmetric");
}

SymplecticRotorOp SymplecticRotorOp::identity(std::size_t n) {
  return SymplecticRotorOp(IntMat::identity(n), AngleMat::zero(n));
}

AngleMat SymplecticRotorOp::block_xz() const {
  return int_angle_mul(inverse_unimodular(a_.transpose()), c_);
}

IntMat SymplecticRotorOp::block_zz() const { return inverse_unimodular(a_.transpose()); }

SymplecticRotorOp generator(std::size_t n, const GeneratorAtom& atom) {
  IntMat a = IntMat::identity(n);
  AngleMat c = AngleMat::zero(n);
  const Int k(atom.count);
  switch (atom.gate) {
    case Gate::cnot:
      check_pair(n, atom.a, atom.b);
      a.at(atom.b, atom.a) = k;
      break;
    case Gate::cnot_dag:
      check_pair(n, atom.a, atom.b);
      a.at(atom.b, atom.a) = -k;
      break;
    case Gate::p:
      check_index(n, atom.a);
      if (atom.count % 2 != 0) a.at(atom.a, atom.a) = -1;
      break;
    case Gate::swap:
      check_pair(n, atom.a, atom.b);
      if (atom.count % 2 != 0) {
        a.at(atom.a, atom.a) = 0;
        a.at(atom.b, atom.b) = 0;
        a.at(atom.a, atom.b) = 1;
        a.at(atom.b, atom.a) = 1;
      }
      break;
    case Gate::quad:
      check_index(n, atom.a);
      c.at(atom.a, atom.a) = atom.phi.times(k);
      break;
    case Gate::cphs:
      check_pair(n, atom.a, atom.b);
      c.set_sym(atom.a, atom.b, atom.phi.times(k));
      break;
  }
  return SymplecticRotorOp(std::move(a), std::move(c));
}

SymplecticRotorOp compose(const SymplecticRotorOp& g, const SymplecticRotorOp& h) {
  if (g.n() != h.n()) throw_invalid("compose: rotor count mismatch");
  IntMat a = g.a() * h.a();
  AngleMat c = g.c().congruence(h.a()) + h.c();
  return SymplecticRotorOp(std::move(a), std::move(c));
}

SymplecticRotorOp inverse(const SymplecticRotorOp& g) {
  IntMat a_inv = inverse_unimodular(g.a());
  AngleMat c = (-g.c()).congruence(a_inv);
  return SymplecticRotorOp(std::move(a_inv), std::move(c));
}

PauliVector act_on_pauli(const SymplecticRotorOp& g, const PauliVector& v) {
  if (g.n() != v.n) throw_invalid("act_on_pauli: rotor count mismatch");
  PauliVector out = v;
  out.m = mat_vec(g.a(), v.m);
  AngleVec tmp = g.c().apply(v.m);
  for (std::size_t i = 0; i < v.n; ++i) tmp[i] = tmp[i] + v.phi[i];
  out.phi = mat_vec(inverse_unimodular(g.a().transpose()), tmp);
  return out;
}

std::pair<SymplecticRotorOp, SymplecticRotorOp> hn_decompose(const SymplecticRotorOp& g) {
  SymplecticRotorOp h(g.a(), AngleMat::zero(g.n()));
  SymplecticRotorOp nrm(IntMat::identity(g.n()), g.c());
  return {std::move(h), std::move(nrm)};
}

SymplecticRotorOp normal_conjugate(const SymplecticRotorOp& g, const SymplecticRotorOp& nrm) {
  if (!nrm.a().is_identity()) throw_invalid("normal_conjugate: second operand must have A = identity");
  SymplecticRotorOp result = compose(compose(g, nrm), inverse(g));
  if (!result.a().is_identity())
    throw_math("normal_conjugate: conjugate left the angle subgroup (internal bug)");
  return result;
}

GeneratorWord synthesize_generators(const IntMat& a) {
  if (a.rows() != a.cols()) throw_invalid("synthesize_generators: matrix must be square");
  {
    Int d = det(a);
    if (d != 1 && d != -1) throw_math("synthesize_generators: matrix is not unimodular");
  }
  const std::size_t n = a.rows();
  IntMat w = a;
  // Elementary right-multiplications applied to w, in order. The word is the
  // same list with each op inverted (evaluation runs the product right-to-left).
  GeneratorWord ops;

  auto add_cols = [&](std::size_t j, std::size_t src, const Int& c) {
    // col_j += c * col_src, i.e. right-multiply by the block of cnot(j -> src)^c.
    if (c == 0) return;
    w.add_col(j, src, c);
    if (c > 0)
      ops.push_back(GeneratorAtom::cnot(j, src, static_cast<std::int64_t>(c)));
    else
      ops.push_back(GeneratorAtom::cnot_dag(j, src, static_cast<std::int64_t>(-c)));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    w.swap_cols(i, j);
    ops.push_back(GeneratorAtom::swap(i, j));
  };
  auto flip_col = [&](std::size_t i) {
    w.scale_col(i, -1);
    ops.push_back(GeneratorAtom::p(i));
  };

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Deterministic pivot: smallest nonzero |entry| in row t at column >= t,
      // ties broken by lowest column index.
      std::size_t best = n;
      Int best_abs = 0;
      for (std::size_t j = t; j < n; ++j) {
        if (w.at(t, j) == 0) continue;
        Int v = abs(w.at(t, j));
        if (best == n || v < best_abs) {
          best = j;
          best_abs = v;
        }
      }
      if (best == n) throw_math("synthesize_generators: singular row (not unimodular)");
      swap_cols(t, best);
      bool clean = true;
      for (std::size_t j = t + 1; j < n; ++j) {
        if (w.at(t, j) == 0) continue;
        add_cols(j, t, -rounded_div(w.at(t, j), w.at(t, t)));
        if (w.at(t, j) != 0) clean = false;
      }
      if (clean) break;
    }
  }
  // w is now lower triangular with +-1 diagonal; clear below, bottom-up.
  for (std::size_t i = n; i-- > 1;) {
    for (std::size_t t = 0; t < i; ++t) {
      if (w.at(i, t) == 0) continue;
      add_cols(t, i, w.at(i, i) == 1 ? -w.at(i, t) : w.at(i, t));
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (w.at(i, i) < 0) flip_col(i);
  if (!w.is_identity()) throw_math("synthesize_generators: reduction failed (internal bug)");

  GeneratorWord word;
  word.reserve(ops.size());
  for (const auto& op : ops) {
    GeneratorAtom inv = op;
    if (op.gate == Gate::cnot)
      inv.gate = Gate::cnot_dag;
    else if (op.gate == Gate::cnot_dag)
      inv.gate = Gate::cnot;
    word.push_back(inv);
  }
  return word;
}

bool is_passive(const SymplecticRotorOp& g) {
  if (!g.c().is_zero()) return false;
  return (g.a() * g.a().transpose()).is_identity();
}

IntVec transform_nullifier(const SymplecticRotorOp& g, const IntVec& l) {
  if (l.size() != g.n()) throw_invalid("transform_nullifier: dimension mismatch");
  return mat_vec(inverse_unimodular(g.a()), l);
}

JosephsonHamiltonian JosephsonHamiltonian::decoupled(std::size_t n, double e_j, double e_c) {
  JosephsonHamiltonian h;
  h.e_j = e_j;
  h.e_c = e_c;
  h.n = n;
  for (std::size_t j = 0; j < n; ++j) h.cosine_terms.push_back(PauliVector::x(n, j, 1));
  h.kinetic_form = IntMat::identity(n);
  return h;
}

JosephsonHamiltonian transform_josephson(const SymplecticRotorOp& g, const JosephsonHamiltonian& h) {
  if (g.n() != h.n) throw_invalid("transform_josephson: rotor count mismatch");
  JosephsonHamiltonian out = h;
  out.cosine_terms.clear();
  for (const auto& term : h.cosine_terms) out.cosine_terms.push_back(act_on_pauli(g, term));
  IntMat a_inv = inverse_unimodular(g.a());
  out.kinetic_form = a_inv.transpose() * h.kinetic_form * a_inv;
  return out;
}

SymplecticRotorOp evaluate_word(std::size_t n, const GeneratorWord& word) {
  SymplecticRotorOp acc = SymplecticRotorOp::identity(n);
  for (const auto& atom : word) acc = compose(generator(n, atom), acc);
  return acc;
}

std::size_t word_entry_count(const GeneratorWord& word) { return word.size(); }

AngleMat int_angle_mul(const IntMat& a, const AngleMat& c) {
  if (a.cols() != c.size()) throw_invalid("int_angle_mul: dimension mismatch");
  AngleMat out(c.size());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) {
      Rat acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k)
        if (a.at(i, k) != 0) acc += Rat(a.at(i, k)) * c.at(k, j).turns();
      out.at(i, j) = ExactAngle(acc);
    }
  return out;
}

}  // namespace rotorkit
