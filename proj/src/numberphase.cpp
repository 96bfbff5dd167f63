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

#include "rotorkit/numberphase.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace rotorkit {

namespace {

Int l1_norm(const IntVec& v) {
  Int acc = 0;
  for (const auto& x : v) acc += abs(x);
  return acc;
}

bool nonneg(const IntVec& v) {
  for (const auto& x : v)
    if (x < 0) return false;
  return true;
}

bool is_zero_vec(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

IntMat apply_signs(const IntMat& m, const IntVec& signs) {
  IntMat out = m;
  for (std::size_t j = 0; j < out.cols(); ++j)
    if (signs[j] < 0) out.scale_col(j, -1);
  return out;
}

struct BasisResult {
  IntMat b;       // r x r unimodular with b * m >= 0
  Int total_l1;   // sum of |entries| of b * m
};

struct Candidate {
  IntVec coeff;  // in terms of the nonzero Hermite rows
  IntVec vec;
  Int l1;
};

// Bounded search for a non-negative unimodular re-basis of the row lattice.
std::optional<BasisResult> nonneg_basis(const IntMat& m, long beta, std::size_t max_candidates) {
  const std::size_t r = m.rows();
  if (r == 0) return BasisResult{IntMat::identity(0), Int(0)};
  HermiteDecomposition hnf = hermite_rows(m);
  const std::size_t rank = hnf.rank;

  // Candidate vectors: bounded integer combinations of the Hermite rows.
  std::vector<Candidate> cands;
  std::vector<long> coeff(rank, -beta);
  if (rank > 0) {
    for (;;) {
      IntVec v(m.cols(), Int(0));
      bool any = false;
      for (std::size_t i = 0; i < rank; ++i) {
        if (coeff[i] == 0) continue;
        any = true;
        for (std::size_t c = 0; c < m.cols(); ++c) v[c] += Int(coeff[i]) * hnf.h.at(i, c);
      }
      if (any && nonneg(v)) {
        IntVec cv(rank);
        for (std::size_t i = 0; i < rank; ++i) cv[i] = coeff[i];
        cands.push_back({cv, v, l1_norm(v)});
      }
      std::size_t k = 0;
      while (k < rank && coeff[k] == beta) coeff[k++] = -beta;
      if (k == rank) break;
      ++coeff[k];
    }
  }
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.l1 != b.l1) return a.l1 < b.l1;
    return a.vec < b.vec;
  });
  if (cands.size() > max_candidates) cands.resize(max_candidates);
  if (rank > 0 && cands.size() < rank) return std::nullopt;

  // Pick `rank` candidates whose coefficient matrix is unimodular, smallest
  // total L1 first (depth-first with pruning on the running sum).
  std::vector<std::size_t> chosen(rank), best_choice;
  Int best_sum = -1;
  std::function<void(std::size_t, std::size_t, Int)> pick = [&](std::size_t level,
                                                                std::size_t start, Int sum) {
    if (best_sum >= 0 && sum >= best_sum) return;
    if (level == rank) {
      IntMat cm(rank, rank);
      for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) cm.at(i, j) = cands[chosen[i]].coeff[j];
      if (is_unimodular(cm)) {
        best_sum = sum;
        best_choice = chosen;
      }
      return;
    }
    for (std::size_t i = start; i + (rank - level - 1) < cands.size(); ++i) {
      chosen[level] = i;
      pick(level + 1, i + 1, sum + cands[i].l1);
    }
  };
  if (rank > 0) pick(0, 0, Int(0));
  if (rank > 0 && best_choice.empty()) return std::nullopt;

  // Assemble B: chosen combinations on the rank rows of the Hermite
  // transform, left-kernel rows (which map to zero) passed through.
  IntMat e(r, r);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) e.at(i, j) = cands[best_choice[i]].coeff[j];
  for (std::size_t i = rank; i < r; ++i) e.at(i, i) = 1;
  BasisResult out;
  out.b = e * hnf.t;
  out.total_l1 = best_sum < 0 ? Int(0) : best_sum;
  return out;
}

}  // namespace

std::size_t OrientationFlip::flip_count() const {
  std::size_t c = 0;
  for (const auto& s : signs)
    if (s < 0) ++c;
  return c;
}

OrientationFlip find_orientation(const HomologicalRotorCode& code) {
  code.validate();
  const std::size_t n = code.n;
  if (n > 20) throw_invalid("find_orientation: sign-pattern search capped at 20 rotors");
  const std::size_t r = code.hx.rows();
  const std::uint64_t patterns = std::uint64_t(1) << n;

  auto signs_of = [&](std::uint64_t k) {
    std::uint64_t g = k ^ (k >> 1);  // Gray order, all-positive first
    IntVec s(n, Int(1));
    for (std::size_t b = 0; b < n; ++b)
      if ((g >> b) & 1) s[b] = -1;
    return s;
  };

  // A pattern that needs no re-basis wins outright.
  for (std::uint64_t k = 0; k < patterns; ++k) {
    IntVec signs = signs_of(k);
    IntMat flipped = apply_signs(code.hx, signs);
    bool ok = true;
    for (std::size_t i = 0; i < flipped.rows() && ok; ++i) ok = nonneg(flipped.row(i));
    if (ok) return OrientationFlip{signs, IntMat::identity(r)};
  }

  struct Best {
    Int l1;
    std::size_t flips;
    std::uint64_t gray_pos;
    OrientationFlip flip;
  };
  std::optional<Best> best;
  for (std::uint64_t k = 0; k < patterns; ++k) {
    IntVec signs = signs_of(k);
    IntMat flipped = apply_signs(code.hx, signs);
    std::optional<BasisResult> found = nonneg_basis(flipped, 3, 48);
    if (!found) found = nonneg_basis(flipped, 6, 48);
    if (!found) continue;
    std::size_t flips = 0;
    for (const auto& s : signs)
      if (s < 0) ++flips;
    Best cand{found->total_l1, flips, k, OrientationFlip{signs, found->b}};
    if (!best || cand.l1 < best->l1 || (cand.l1 == best->l1 && cand.flips < best->flips) ||
        (cand.l1 == best->l1 && cand.flips == best->flips && cand.gray_pos < best->gray_pos))
      best = std::move(cand);
  }
  if (!best)
    throw_math("find_orientation: no non-negative re-basis found within coefficient bound 6 over " +
               std::to_string(patterns) + " sign patterns");
  return best->flip;
}

NumberPhaseCode to_number_phase(const HomologicalRotorCode& code) {
  NumberPhaseCode out;
  out.planar = code;
  out.flip = find_orientation(code);
  out.base.n = code.n;
  out.base.hx = out.flip.basis_change * apply_signs(code.hx, out.flip.signs);
  out.base.hz = apply_signs(code.hz, out.flip.signs);
  out.base.validate();
  for (std::size_t i = 0; i < out.base.hx.rows(); ++i) {
    IntVec row = out.base.hx.row(i);
    if (!is_zero_vec(row)) out.semigroup_x_generators.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < out.base.hz.rows(); ++i)
    out.z_generators.push_back(out.base.hz.row(i));
  return out;
}

TruncatedRotorState np_codeword(const NumberPhaseCode& code, const IntVec& label,
                                std::int64_t cutoff) {
  if (cutoff < 1) throw_invalid("np_codeword: cutoff must be >= 1");
  LogicalOperators logicals = np_logicals(code);
  std::vector<const LogicalPair*> torsion;
  for (const auto& p : logicals.pairs)
    if (p.d > 1) torsion.push_back(&p);
  if (label.size() != torsion.size())
    throw_invalid("np_codeword: label needs one entry per torsion factor");
  IntVec shift(code.base.n, Int(0));
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (label[i] < 0 || label[i] >= torsion[i]->d)
      throw_invalid("np_codeword: label out of range for torsion factor");
    for (std::size_t c = 0; c < code.base.n; ++c) shift[c] += label[i] * torsion[i]->x[c];
  }
  auto points = lattice_points_in_box(code.base.x_stabilizer_lattice(), shift, 0, cutoff);
  if (points.empty()) throw_math("np_codeword: empty support, cutoff too small");
  TruncatedRotorState s;
  s.n = code.base.n;
  s.cutoff = cutoff;
  s.mode = StateMode::fock;
  for (const auto& p : points) s.amps[p] = 1.0;
  s.normalize();
  return s;
}

LogicalOperators np_logicals(const NumberPhaseCode& code) {
  LogicalOperators base = logical_operators(code.planar);
  for (auto& pair : base.pairs) {
    for (std::size_t c = 0; c < code.base.n; ++c) {
      pair.x[c] *= code.flip.signs[c];
      pair.z_pattern[c] *= code.flip.signs[c];
    }
  }
  return base;
}

bool NumberPhaseChannel::fully_unitary() const {
  for (const auto& e : entries)
    if (!e.unitary) return false;
  return true;
}

NumberPhaseChannel semigroup_word(const GeneratorWord& word) {
  NumberPhaseChannel out;
  for (const auto& atom : word) {
    NumberPhaseChannel::Entry e{atom, NpAtomKind::kerr, true, false};
    switch (atom.gate) {
      case Gate::p:
        throw_invalid(
            "semigroup_word: parity flips do not survive the Fock projection; "
            "flip the code orientation first");
      case Gate::cnot:
        e.kind = NpAtomKind::controlled_injection;
        e.unitary = false;
        e.isometry = true;
        break;
      case Gate::cnot_dag:
        e.kind = NpAtomKind::controlled_subtraction;
        e.unitary = false;
        e.isometry = false;  // Kraus branch of the trace-preserving map
        break;
      case Gate::quad:
        e.kind = NpAtomKind::kerr;
        break;
      case Gate::cphs:
        e.kind = NpAtomKind::cross_kerr;
        break;
      case Gate::swap:
        e.kind = NpAtomKind::mode_swap;
        break;
    }
    out.entries.push_back(e);
  }
  return out;
}

}  // namespace rotorkit
