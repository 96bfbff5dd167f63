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

#include "rotorkit/codes.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace rotorkit {

HomologicalRotorCode HomologicalRotorCode::make(std::size_t n, const std::vector<IntVec>& hx_rows,
                                                const std::vector<IntVec>& hz_rows) {
  HomologicalRotorCode code;
  code.n = n;
  code.hx = hx_rows.empty() ? IntMat(0, n) : IntMat::from_rows(hx_rows);
  code.hz = hz_rows.empty() ? IntMat(0, n) : IntMat::from_rows(hz_rows);
  if (code.hx.cols() != n || code.hz.cols() != n)
    throw_invalid("HomologicalRotorCode: row length must equal the rotor count");
  return code;
}

void HomologicalRotorCode::validate() const {
  if (hx.cols() != n || hz.cols() != n)
    throw_invalid("HomologicalRotorCode: check matrix width mismatch");
  for (std::size_t i = 0; i < hx.rows(); ++i)
    for (std::size_t j = 0; j < hz.rows(); ++j) {
      Int dot = 0;
      for (std::size_t c = 0; c < n; ++c) dot += hx.at(i, c) * hz.at(j, c);
      if (dot != 0)
        throw_math("CSS violation: X check " + std::to_string(i) + " and Z check " +
                   std::to_string(j) + " fail to commute (inner product " + dot.str() + ")");
    }
}

IntMat HomologicalRotorCode::x_stabilizer_lattice() const { return hx.transpose(); }

AngleVec LogicalPair::z_angles(const ExactAngle& free_angle) const {
  AngleVec out(z_pattern.size());
  if (d > 1) {
    for (std::size_t i = 0; i < z_pattern.size(); ++i)
      out[i] = ExactAngle(Rat(z_pattern[i], d));
  } else {
    for (std::size_t i = 0; i < z_pattern.size(); ++i) out[i] = free_angle.times(z_pattern[i]);
  }
  return out;
}

namespace {

Int sup_norm(const IntVec& v) {
  Int m = 0;
  for (const auto& x : v) {
    Int a = abs(x);
    if (a > m) m = a;
  }
  return m;
}

bool lex_less(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// Smallest sup-norm representative of x modulo the row lattice of hx, coset
// shifts bounded by +-2 per check row; ties go to the lexicographically
// smallest vector.
IntVec reduce_mod_stabilizer(const IntVec& x, const IntMat& hx) {
  const std::size_t r = hx.rows();
  if (r == 0) return x;
  IntVec best = x;
  std::vector<long> coeff(r, -2);
  for (;;) {
    IntVec cand = x;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t c = 0; c < hx.cols(); ++c) cand[c] += Int(coeff[i]) * hx.at(i, c);
    if (sup_norm(cand) < sup_norm(best) ||
        (sup_norm(cand) == sup_norm(best) && lex_less(cand, best)))
      best = cand;
    std::size_t k = 0;
    while (k < r && coeff[k] == 2) coeff[k++] = -2;
    if (k == r) break;
    ++coeff[k];
  }
  return best;
}

// Integer left inverse of a saturated matrix (all invariant factors 1).
IntMat left_inverse_saturated(const IntMat& m) {
  SmithDecomposition s = smith_normal_form(m);
  const std::size_t k = m.cols();
  if (s.rank() != k) throw_math("left inverse: matrix does not have full column rank");
  for (const auto& f : s.invariant_factors)
    if (f != 1) throw_math("left inverse: matrix is not saturated");
  // U m V = [I_k; 0]  =>  m = U^-1 [I;0] V^-1, left inverse = V [I_k 0] U.
  IntMat pick(k, m.rows());
  for (std::size_t i = 0; i < k; ++i) pick.at(i, i) = 1;
  return s.v * (pick * s.u);
}

}  // namespace

LogicalOperators logical_operators(const HomologicalRotorCode& code) {
  HomologyResult h = homology(code);
  const std::size_t k = h.kernel.cols();
  const std::size_t r = h.witnesses.rank();

  LogicalOperators out;
  if (k == 0) return out;

  // Class generators: columns of K U^-1 expressed back in momentum space.
  IntMat u_inv = inverse_unimodular(h.witnesses.u);
  IntMat gens = h.kernel * u_inv;  // n x k
  IntMat eta = left_inverse_saturated(gens);  // k x n, eta * gens = I

  for (std::size_t i = 0; i < k; ++i) {
    Int d = (i < r) ? h.witnesses.d.at(i, i) : Int(0);
    if (d == 1) continue;  // trivial factor
    LogicalPair pair;
    pair.d = d;
    pair.x = reduce_mod_stabilizer(gens.col(i), code.hx);
    pair.z_pattern = eta.row(i);
    out.pairs.push_back(std::move(pair));
  }
  return out;
}

EncodingCircuit encoding_circuit(const HomologicalRotorCode& code) {
  code.validate();
  EncodingCircuit out;
  SmithDecomposition s = smith_normal_form(code.hx.rows() == 0 ? IntMat(0, code.n) : code.hx);

  // In the column-action convention the decoder block is V^T, so the encoder
  // synthesizes (V^T)^-1: it maps the canonical exponent columns d_i e_i onto
  // the column lattice of H_X^T.
  IntMat enc = inverse_unimodular(s.v.transpose());
  out.word = synthesize_generators(enc);
  out.op = evaluate_word(code.n, out.word);

  const std::size_t rank = s.rank();
  out.canonical_factors = s.invariant_factors;
  IntMat canon_hx(rank, code.n);
  for (std::size_t i = 0; i < rank; ++i) canon_hx.at(i, i) = s.d.at(i, i);
  out.canonical.n = code.n;
  out.canonical.hx = canon_hx;
  out.canonical.hz = code.hz.rows() == 0 ? IntMat(0, code.n)
                                         : code.hz * inverse_unimodular(s.v.transpose());
  out.canonical.validate();
  return out;
}

RotorGkpCode RotorGkpCode::make(const Int& n_spacing, const Int& d) {
  if (n_spacing < 1 || d < 1) throw_invalid("RotorGkpCode: N and d must be positive");
  RotorGkpCode c;
  c.n_spacing = n_spacing;
  c.d = d;
  c.stabilizer_x_exponent = d * n_spacing;
  c.stabilizer_z_angle = ExactAngle(Rat(1, n_spacing));
  c.logical_dimension = d;
  c.logical_x_exponent = n_spacing;
  c.logical_z_angle = ExactAngle(Rat(1, d * n_spacing));
  return c;
}

std::pair<HomologicalRotorCode, QuditGkpStep> rotor_gkp_concatenation(const Int& n_spacing,
                                                                      const Int& d) {
  if (n_spacing < 1 || d < 1) throw_invalid("rotor_gkp_concatenation: N and d must be positive");
  HomologicalRotorCode step1 = HomologicalRotorCode::make(1, {{d * n_spacing}}, {});
  QuditGkpStep step2{d * n_spacing, d, d};
  return {step1, step2};
}

std::vector<Momenta> lattice_points_in_box(const IntMat& basis, const IntVec& shift,
                                           std::int64_t lo, std::int64_t hi) {
  const std::size_t n = shift.size();
  std::vector<Momenta> out;
  if (basis.cols() == 0) {
    Momenta pt(n);
    for (std::size_t c = 0; c < n; ++c) {
      Int v = shift[c];
      if (v < lo || v > hi) return out;
      pt[c] = static_cast<std::int64_t>(v);
    }
    out.push_back(pt);
    return out;
  }
  if (basis.rows() != n) throw_invalid("lattice_points_in_box: dimension mismatch");

  // Echelonize the generators (rows of basis^T) so each has a leading pivot;
  // the pivot coordinate then bounds that generator's coefficient exactly.
  HermiteDecomposition hnf = hermite_rows(basis.transpose());
  const std::size_t rank = hnf.rank;
  std::vector<IntVec> rows;
  std::vector<std::size_t> pivot(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    rows.push_back(hnf.h.row(i));
    std::size_t p = 0;
    while (p < n && rows[i][p] == 0) ++p;
    pivot[i] = p;
  }

  IntVec current = shift;
  std::vector<Int> stack_lo(rank), stack_hi(rank);
  Momenta pt(n);

  std::function<void(std::size_t)> recurse = [&](std::size_t level) {
    if (level == rank) {
      for (std::size_t c = 0; c < n; ++c) {
        if (current[c] < lo || current[c] > hi) return;
        pt[c] = static_cast<std::int64_t>(current[c]);
      }
      out.push_back(pt);
      return;
    }
    const Int& piv = rows[level][pivot[level]];
    // lo <= current[pivot] + a * piv <= hi  (piv > 0 in Hermite form)
    Int a_lo = floor_div(Int(lo) - current[pivot[level]] + piv - 1, piv);
    Int a_hi = floor_div(Int(hi) - current[pivot[level]], piv);
    for (Int a = a_lo; a <= a_hi; ++a) {
      for (std::size_t c = pivot[level]; c < n; ++c) current[c] += a * rows[level][c];
      recurse(level + 1);
      for (std::size_t c = pivot[level]; c < n; ++c) current[c] -= a * rows[level][c];
    }
  };
  recurse(0);
  std::sort(out.begin(), out.end());
  return out;
}

TruncatedRotorState codeword_state(const HomologicalRotorCode& code, const IntVec& label,
                                   std::int64_t cutoff, double delta) {
  code.validate();
  if (delta < 0) throw_invalid("codeword_state: negative regularization");
  if (cutoff < 1) throw_invalid("codeword_state: cutoff must be >= 1");
  LogicalOperators logicals = logical_operators(code);
  std::vector<const LogicalPair*> torsion;
  for (const auto& p : logicals.pairs)
    if (p.d > 1) torsion.push_back(&p);
  if (label.size() != torsion.size())
    throw_invalid("codeword_state: label needs one entry per torsion factor");
  IntVec shift(code.n, Int(0));
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (label[i] < 0 || label[i] >= torsion[i]->d)
      throw_invalid("codeword_state: label out of range for torsion factor");
    for (std::size_t c = 0; c < code.n; ++c) shift[c] += label[i] * torsion[i]->x[c];
  }

  IntMat basis = code.x_stabilizer_lattice();
  auto points = lattice_points_in_box(basis, shift, -cutoff, cutoff);
  if (points.empty()) throw_math("codeword_state: empty support, cutoff too small");

  TruncatedRotorState s;
  s.n = code.n;
  s.cutoff = cutoff;
  s.mode = StateMode::planar;
  double inside = 0;
  for (const auto& p : points) {
    double q = 0;
    for (auto v : p) q += static_cast<double>(v) * static_cast<double>(v);
    double amp = std::exp(-delta * q / 2.0);
    s.amps[p] = amp;
    inside += amp * amp;
  }
  // Tail estimate from a larger box; honest zero is impossible in general.
  const std::int64_t wide = 2 * cutoff + 8;
  double total = 0;
  for (const auto& p : lattice_points_in_box(basis, shift, -wide, wide)) {
    double q = 0;
    for (auto v : p) q += static_cast<double>(v) * static_cast<double>(v);
    total += std::exp(-delta * q);
  }
  s.truncation_weight = total > 0 ? std::max(0.0, (total - inside) / total) : 0.0;
  s.normalize();
  return s;
}

}  // namespace rotorkit
