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

#include "rotorkit/lattice.hpp"

#include <algorithm>

#include "rotorkit/codes.hpp"

namespace rotorkit {

namespace {

struct Pivot {
  std::size_t row, col;
};

std::optional<Pivot> find_min_abs_pivot(const IntMat& m, std::size_t t) {
  std::optional<Pivot> best;
  Int best_abs = 0;
  for (std::size_t i = t; i < m.rows(); ++i)
    for (std::size_t j = t; j < m.cols(); ++j) {
      if (m.at(i, j) == 0) continue;
      Int a = abs(m.at(i, j));
      if (!best || a < best_abs) {
        best = Pivot{i, j};
        best_abs = a;
      }
    }
  return best;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMat& m) {
  const std::size_t r = m.rows(), n = m.cols();
  SmithDecomposition out;
  out.u = IntMat::identity(r);
  out.v = IntMat::identity(n);
  out.d = m;
  IntMat& d = out.d;

  const std::size_t steps = std::min(r, n);
  for (std::size_t t = 0; t < steps; ++t) {
    auto piv = find_min_abs_pivot(d, t);
    if (!piv) break;
    d.swap_rows(t, piv->row);
    out.u.swap_rows(t, piv->row);
    d.swap_cols(t, piv->col);
    out.v.swap_cols(t, piv->col);

    for (;;) {
      // Clear column t below the pivot, then row t right of it. Division is
      // rounded, so a nonzero remainder becomes the new (smaller) pivot.
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = rounded_div(d.at(i, t), d.at(t, t));
        d.add_row(i, t, -q);
        out.u.add_row(i, t, -q);
        if (d.at(i, t) != 0) {
          d.swap_rows(t, i);
          out.u.swap_rows(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = rounded_div(d.at(t, j), d.at(t, t));
        d.add_col(j, t, -q);
        out.v.add_col(j, t, -q);
        if (d.at(t, j) != 0) {
          d.swap_cols(t, j);
          out.v.swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;

      if (d.at(t, t) < 0) {
        d.scale_row(t, -1);
        out.u.scale_row(t, -1);
      }
      // Divisibility fix: fold an offending row in and restart the clearing.
      bool fixed = true;
      for (std::size_t i = t + 1; i < r && fixed; ++i)
        for (std::size_t j = t + 1; j < n && fixed; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            d.add_row(t, i, 1);
            out.u.add_row(t, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }
  }

  for (std::size_t i = 0; i < steps; ++i)
    if (d.at(i, i) != 0) out.invariant_factors.push_back(d.at(i, i));
  return out;
}

HermiteDecomposition hermite_rows(const IntMat& m) {
  HermiteDecomposition out;
  out.t = IntMat::identity(m.rows());
  out.h = m;
  IntMat& h = out.h;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    // Euclid down the column until one nonzero entry remains at `row`.
    for (;;) {
      std::size_t best = m.rows();
      Int best_abs = 0;
      for (std::size_t i = row; i < m.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        Int a = abs(h.at(i, col));
        if (best == m.rows() || a < best_abs) {
          best = i;
          best_abs = a;
        }
      }
      if (best == m.rows()) break;  // column already clear
      h.swap_rows(row, best);
      out.t.swap_rows(row, best);
      bool clean = true;
      for (std::size_t i = row + 1; i < m.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        Int q = rounded_div(h.at(i, col), h.at(row, col));
        h.add_row(i, row, -q);
        out.t.add_row(i, row, -q);
        if (h.at(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h.at(row, col) == 0) continue;
    if (h.at(row, col) < 0) {
      h.scale_row(row, -1);
      out.t.scale_row(row, -1);
    }
    for (std::size_t i = 0; i < row; ++i) {
      Int q = floor_div(h.at(i, col), h.at(row, col));
      h.add_row(i, row, -q);
      out.t.add_row(i, row, -q);
    }
    ++row;
  }
  out.rank = row;
  return out;
}

IntMat kernel_basis(const IntMat& m) {
  if (m.cols() == 0) return IntMat(0, 0);
  if (m.rows() == 0) return IntMat::identity(m.cols());
  SmithDecomposition s = smith_normal_form(m);
  const std::size_t r = s.rank();
  const std::size_t n = m.cols();
  IntMat k(n, n - r);
  for (std::size_t j = r; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) k.at(i, j - r) = s.v.at(i, j);
  return k;
}

std::optional<IntVec> solve_integer(const IntMat& m, const IntVec& b) {
  if (b.size() != m.rows()) throw_invalid("solve_integer: dimension mismatch");
  SmithDecomposition s = smith_normal_form(m);
  IntVec ub = mat_vec(s.u, b);
  IntVec y(m.cols(), Int(0));
  const std::size_t steps = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Int di = (i < steps) ? s.d.at(i, i) : Int(0);
    if (di == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % di != 0) return std::nullopt;
      y[i] = ub[i] / di;
    }
  }
  return mat_vec(s.v, y);
}

std::size_t rank(const IntMat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return hermite_rows(m).rank;
}

bool lattice_contains(const IntMat& basis, const IntVec& v) {
  if (basis.cols() == 0) {
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }
  return solve_integer(basis, v).has_value();
}

bool lattice_equal(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows()) return false;
  for (std::size_t j = 0; j < b.cols(); ++j)
    if (!lattice_contains(a, b.col(j))) return false;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!lattice_contains(b, a.col(j))) return false;
  return true;
}

IntMat normalize_z_rows(const IntMat& hz) {
  IntMat out = hz;
  for (std::size_t i = 0; i < out.rows(); ++i) {
    Int g = 0;
    for (std::size_t j = 0; j < out.cols(); ++j) g = gcd(g, out.at(i, j));
    if (g > 1)
      for (std::size_t j = 0; j < out.cols(); ++j) out.at(i, j) /= g;
  }
  return out;
}

HomologyResult homology(const HomologicalRotorCode& code) {
  code.validate();
  HomologyResult out;

  const IntMat hz = normalize_z_rows(code.hz);
  out.kernel = kernel_basis(hz);  // n x k
  const std::size_t k = out.kernel.cols();
  const std::size_t rx = code.hx.rows();

  // Coordinates of each X-check row inside the kernel lattice. The CSS
  // condition plus saturation guarantees an exact integer solve.
  out.presentation = IntMat(k, rx);
  for (std::size_t i = 0; i < rx; ++i) {
    auto w = solve_integer(out.kernel, code.hx.row(i));
    if (!w) throw_math("homology: X check row escapes the Z kernel lattice");
    for (std::size_t j = 0; j < k; ++j) out.presentation.at(j, i) = (*w)[j];
  }

  out.witnesses = smith_normal_form(out.presentation);
  for (const auto& d : out.witnesses.invariant_factors)
    if (d > 1) out.torsion.push_back(d);
  out.free_rank = k - out.witnesses.rank();
  return out;
}

bool same_equivalence_class(const HomologicalRotorCode& a, const HomologicalRotorCode& b) {
  HomologyResult ha = homology(a);
  HomologyResult hb = homology(b);
  return ha == hb;
}

}  // namespace rotorkit
