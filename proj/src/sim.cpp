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

#include "rotorkit/sim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rotorkit/threads.hpp"

namespace rotorkit {

namespace {

constexpr double kPi = std::numbers::pi;

double abs2(Cplx v) { return std::norm(v); }

}  // namespace

TruncatedRotorState TruncatedRotorState::momentum_eigenstate(std::size_t n, std::int64_t cutoff,
                                                             const Momenta& l, StateMode mode) {
  if (l.size() != n) throw_invalid("momentum_eigenstate: tuple length mismatch");
  TruncatedRotorState s;
  s.n = n;
  s.cutoff = cutoff;
  s.mode = mode;
  if (!s.in_bounds(l)) throw_invalid("momentum_eigenstate: momentum outside the box");
  s.amps[l] = 1.0;
  return s;
}

bool TruncatedRotorState::in_bounds(const Momenta& l) const {
  for (auto v : l) {
    if (mode == StateMode::planar) {
      if (v < -cutoff || v > cutoff) return false;
    } else {
      if (v < 0 || v > cutoff) return false;
    }
  }
  return true;
}

double TruncatedRotorState::norm2() const {
  double acc = 0;
  for (const auto& [l, a] : amps) acc += abs2(a);
  return acc;
}

void TruncatedRotorState::normalize() {
  double n2 = norm2();
  if (n2 <= 0) throw_math("normalize: state has empty support");
  double inv = 1.0 / std::sqrt(n2);
  for (auto& [l, a] : amps) a *= inv;
}

void TruncatedRotorState::prune(double eps) {
  for (auto it = amps.begin(); it != amps.end();) {
    if (std::abs(it->second) <= eps)
      it = amps.erase(it);
    else
      ++it;
  }
}

Cplx inner_product(const TruncatedRotorState& a, const TruncatedRotorState& b) {
  if (a.n != b.n) throw_invalid("inner_product: rotor count mismatch");
  // Iterate the smaller support.
  const auto& small = a.amps.size() <= b.amps.size() ? a : b;
  const auto& large = a.amps.size() <= b.amps.size() ? b : a;
  const bool small_is_a = &small == &a;
  Cplx acc = 0;
  for (const auto& [l, v] : small.amps) {
    auto it = large.amps.find(l);
    if (it == large.amps.end()) continue;
    acc += small_is_a ? std::conj(v) * it->second : std::conj(it->second) * v;
  }
  return acc;
}

TruncatedRotorState tensor(const TruncatedRotorState& a, const TruncatedRotorState& b) {
  if (a.cutoff != b.cutoff || a.mode != b.mode) throw_invalid("tensor: incompatible boxes");
  TruncatedRotorState out;
  out.n = a.n + b.n;
  out.cutoff = a.cutoff;
  out.mode = a.mode;
  out.truncation_weight = a.truncation_weight + b.truncation_weight;
  out.annihilated_weight = a.annihilated_weight + b.annihilated_weight;
  for (const auto& [la, va] : a.amps)
    for (const auto& [lb, vb] : b.amps) {
      Momenta l = la;
      l.insert(l.end(), lb.begin(), lb.end());
      out.amps[l] = va * vb;
    }
  return out;
}

double interior_distance(const TruncatedRotorState& a, const TruncatedRotorState& b,
                         std::int64_t margin) {
  if (a.n != b.n || a.cutoff != b.cutoff || a.mode != b.mode)
    throw_invalid("interior_distance: incompatible states");
  auto interior = [&](const Momenta& l) {
    for (auto v : l) {
      if (a.mode == StateMode::planar) {
        if (std::abs(v) > a.cutoff - margin) return false;
      } else {
        if (v < margin || v > a.cutoff - margin) return false;
      }
    }
    return true;
  };
  double worst = 0;
  auto scan = [&](const TruncatedRotorState& x, const TruncatedRotorState& y) {
    for (const auto& [l, v] : x.amps) {
      if (!interior(l)) continue;
      auto it = y.amps.find(l);
      Cplx w = it == y.amps.end() ? Cplx(0) : it->second;
      worst = std::max(worst, std::abs(v - w));
    }
  };
  scan(a, b);
  scan(b, a);
  return worst;
}

TruncatedRotorState apply_shift(const TruncatedRotorState& s, std::size_t site, std::int64_t m) {
  if (site >= s.n) throw_invalid("apply_shift: rotor index out of range");
  TruncatedRotorState out = s;
  out.amps.clear();
  for (const auto& [l, a] : s.amps) {
    Momenta t = l;
    t[site] += m;
    if (s.mode == StateMode::fock && t[site] < 0) {
      out.annihilated_weight += abs2(a);  // subtraction below the vacuum
      continue;
    }
    if (!s.in_bounds(t)) {
      out.truncation_weight += abs2(a);
      continue;
    }
    out.amps[t] += a;
  }
  return out;
}

TruncatedRotorState apply_rotation(const TruncatedRotorState& s, std::size_t site, double phi) {
  if (site >= s.n) throw_invalid("apply_rotation: rotor index out of range");
  TruncatedRotorState out = s;
  for (auto& [l, a] : out.amps) a *= std::polar(1.0, phi * static_cast<double>(l[site]));
  return out;
}

TruncatedRotorState apply_gate(const TruncatedRotorState& s, Gate g, std::size_t a, std::size_t b,
                               double angle) {
  TruncatedRotorState out = s;
  switch (g) {
    case Gate::quad: {
      if (a >= s.n) throw_invalid("apply_gate: rotor index out of range");
      for (auto& [l, v] : out.amps) {
        double li = static_cast<double>(l[a]);
        v *= std::polar(1.0, angle * li * (li + 1) / 2.0);
      }
      return out;
    }
    case Gate::cphs: {
      if (a >= s.n || b >= s.n || a == b) throw_invalid("apply_gate: bad rotor pair");
      for (auto& [l, v] : out.amps)
        v *= std::polar(1.0, angle * static_cast<double>(l[a]) * static_cast<double>(l[b]));
      return out;
    }
    case Gate::p: {
      if (s.mode == StateMode::fock) throw_invalid("parity flip is not available in Fock mode");
      if (a >= s.n) throw_invalid("apply_gate: rotor index out of range");
      out.amps.clear();
      for (const auto& [l, v] : s.amps) {
        Momenta t = l;
        t[a] = -t[a];
        out.amps[t] += v;
      }
      return out;
    }
    case Gate::swap: {
      if (a >= s.n || b >= s.n || a == b) throw_invalid("apply_gate: bad rotor pair");
      out.amps.clear();
      for (const auto& [l, v] : s.amps) {
        Momenta t = l;
        std::swap(t[a], t[b]);
        out.amps[t] += v;
      }
      return out;
    }
    case Gate::cnot:
    case Gate::cnot_dag: {
      if (a >= s.n || b >= s.n || a == b) throw_invalid("apply_gate: bad rotor pair");
      out.amps.clear();
      const std::int64_t sign = g == Gate::cnot ? 1 : -1;
      for (const auto& [l, v] : s.amps) {
        Momenta t = l;
        t[b] += sign * l[a];
        if (s.mode == StateMode::fock && t[b] < 0) {
          out.annihilated_weight += abs2(v);
          continue;
        }
        if (!s.in_bounds(t)) {
          out.truncation_weight += abs2(v);
          continue;
        }
        out.amps[t] += v;
      }
      return out;
    }
  }
  throw_invalid("apply_gate: unknown gate");
}

TruncatedRotorState apply_atom(const TruncatedRotorState& s, const GeneratorAtom& atom) {
  TruncatedRotorState out = s;
  std::int64_t reps = atom.count;
  if (atom.gate == Gate::p || atom.gate == Gate::swap) reps = atom.count % 2;
  if (atom.gate == Gate::quad || atom.gate == Gate::cphs) {
    return apply_gate(s, atom.gate, atom.a, atom.b,
                      atom.phi.radians() * static_cast<double>(atom.count));
  }
  if (atom.gate == Gate::cnot || atom.gate == Gate::cnot_dag) {
    // One sparse pass regardless of the repetition count.
    const std::int64_t sign = atom.gate == Gate::cnot ? atom.count : -atom.count;
    out.amps.clear();
    for (const auto& [l, v] : s.amps) {
      Momenta t = l;
      t[atom.b] += sign * l[atom.a];
      if (s.mode == StateMode::fock && t[atom.b] < 0) {
        out.annihilated_weight += abs2(v);
        continue;
      }
      if (!s.in_bounds(t)) {
        out.truncation_weight += abs2(v);
        continue;
      }
      out.amps[t] += v;
    }
    return out;
  }
  for (std::int64_t r = 0; r < reps; ++r) out = apply_gate(out, atom.gate, atom.a, atom.b, 0.0);
  return out;
}

TruncatedRotorState apply_word(const TruncatedRotorState& s, const GeneratorWord& word) {
  TruncatedRotorState out = s;
  for (const auto& atom : word) out = apply_atom(out, atom);
  return out;
}

TruncatedRotorState apply_pauli(const TruncatedRotorState& s, const PauliVector& p) {
  if (p.n != s.n) throw_invalid("apply_pauli: rotor count mismatch");
  TruncatedRotorState out = s;
  for (std::size_t i = 0; i < p.n; ++i) {
    if (p.m[i] != 0) out = apply_shift(out, i, static_cast<std::int64_t>(p.m[i]));
  }
  for (std::size_t i = 0; i < p.n; ++i) {
    if (!p.phi[i].is_zero()) out = apply_rotation(out, i, p.phi[i].radians());
  }
  if (!p.phase.is_zero()) {
    Cplx ph = std::polar(1.0, p.phase.radians());
    for (auto& [l, a] : out.amps) a *= ph;
  }
  return out;
}

SubtractionBranches cnot_np_dagger_branches(const TruncatedRotorState& s, std::size_t control,
                                            std::size_t target) {
  if (s.mode != StateMode::fock) throw_invalid("cnot_np_dagger_branches: Fock mode only");
  if (control >= s.n || target >= s.n || control == target)
    throw_invalid("cnot_np_dagger_branches: bad rotor pair");
  SubtractionBranches out;
  out.subtracted = s;
  out.subtracted.amps.clear();
  out.projected = s;
  out.projected.amps.clear();
  for (const auto& [l, v] : s.amps) {
    if (l[target] >= l[control]) {
      Momenta t = l;
      t[target] -= l[control];
      out.subtracted.amps[t] += v;
    } else {
      out.projected.amps[l] += v;
    }
  }
  return out;
}

TruncatedRotorState coherent_state(const CoherentStateSpec& spec, std::int64_t cutoff) {
  if (spec.xi == Cplx(0)) throw_invalid("coherent_state: xi = 0 is not allowed");
  if (spec.delta < 0) throw_invalid("coherent_state: negative regularization");
  if (cutoff < 1) throw_invalid("coherent_state: cutoff must be >= 1");
  const double w = spec.delta > 0 ? spec.delta : 1.0;
  // Amplitude at l: xi^{-l} e^{-w l^2/2}. Computed in polar form so large |l|
  // underflows gracefully instead of overflowing.
  const double log_r = std::log(std::abs(spec.xi));
  const double arg = std::arg(spec.xi);
  TruncatedRotorState s;
  s.n = 1;
  s.cutoff = cutoff;
  s.mode = StateMode::planar;
  double inside = 0, outside = 0;
  for (std::int64_t l = -2 * cutoff - 64; l <= 2 * cutoff + 64; ++l) {
    const double dl = static_cast<double>(l);
    const double mag = std::exp(-dl * log_r - w * dl * dl / 2.0);
    if (std::abs(l) <= cutoff) {
      s.amps[{l}] = std::polar(mag, -dl * arg);
      inside += mag * mag;
    } else {
      outside += mag * mag;
    }
  }
  s.truncation_weight = outside / (inside + outside);
  s.normalize();
  return s;
}

TruncatedRotorState displace(const TruncatedRotorState& s, double c, std::int64_t d) {
  if (s.n != 1) throw_invalid("displace: single-rotor operation");
  TruncatedRotorState out = apply_rotation(s, 0, -c);
  out = apply_shift(out, 0, d);
  Cplx ph = std::polar(1.0, -c * static_cast<double>(d) / 2.0);
  for (auto& [l, a] : out.amps) a *= ph;
  return out;
}

Cplx phase_amplitude(const TruncatedRotorState& s, const std::vector<double>& theta) {
  if (theta.size() != s.n) throw_invalid("phase_amplitude: angle tuple length mismatch");
  Cplx acc = 0;
  for (const auto& [l, a] : s.amps) {
    double dot = 0;
    for (std::size_t i = 0; i < s.n; ++i) dot += theta[i] * static_cast<double>(l[i]);
    acc += a * std::polar(1.0, -dot);
  }
  return acc * std::pow(2.0 * kPi, -0.5 * static_cast<double>(s.n));
}

std::vector<double> phase_distribution(const TruncatedRotorState& s, std::size_t site,
                                       std::size_t grid_points) {
  if (site >= s.n) throw_invalid("phase_distribution: rotor index out of range");
  // Group amplitudes by the momenta of the other rotors; the marginal at
  // theta is sum_rest |sum_{l_site} psi e^{-i theta l_site}|^2 / (2 pi).
  std::map<Momenta, std::vector<std::pair<std::int64_t, Cplx>>> groups;
  for (const auto& [l, a] : s.amps) {
    Momenta rest;
    rest.reserve(s.n - 1);
    for (std::size_t i = 0; i < s.n; ++i)
      if (i != site) rest.push_back(l[i]);
    groups[rest].push_back({l[site], a});
  }
  std::vector<double> p(grid_points, 0.0);
  for (std::size_t g = 0; g < grid_points; ++g) {
    const double theta = -kPi + 2.0 * kPi * static_cast<double>(g) / static_cast<double>(grid_points);
    double acc = 0;
    for (const auto& [rest, terms] : groups) {
      Cplx amp = 0;
      for (const auto& [ls, a] : terms) amp += a * std::polar(1.0, -theta * static_cast<double>(ls));
      acc += abs2(amp);
    }
    p[g] = acc / (2.0 * kPi);
  }
  return p;
}

double WignerGrid::min() const {
  double m = 0;
  bool first = true;
  for (const auto& row : w)
    for (double v : row) {
      if (first || v < m) m = v;
      first = false;
    }
  return m;
}

double WignerGrid::max() const {
  double m = 0;
  bool first = true;
  for (const auto& row : w)
    for (double v : row) {
      if (first || v > m) m = v;
      first = false;
    }
  return m;
}

WignerGrid wigner(const TruncatedRotorState& s, const std::vector<double>& l_values,
                  std::size_t quadrature_points) {
  if (s.n != 1) throw_invalid("wigner: single-rotor states only");
  if (quadrature_points < 64) throw_invalid("wigner: quadrature needs at least 64 points");
  const std::size_t m = quadrature_points;
  WignerGrid grid;
  grid.l = l_values;
  grid.phi.resize(m);
  for (std::size_t k = 0; k < m; ++k)
    grid.phi[k] = -kPi + 2.0 * kPi * static_cast<double>(k) / static_cast<double>(m);
  grid.w.assign(l_values.size(), std::vector<double>(m, 0.0));

  auto angle_amp = [&](double theta) {
    Cplx acc = 0;
    for (const auto& [l, a] : s.amps)
      acc += a * std::polar(1.0, -theta * static_cast<double>(l[0]));
    return acc * std::pow(2.0 * kPi, -0.5);
  };

  const double h = 2.0 * kPi / static_cast<double>(m);
  parallel_for(m, [&](std::size_t pi_idx) {
    const double phi = grid.phi[pi_idx];
    // Trapezoid nodes t_j = -pi + j h, j = 0..m.
    std::vector<Cplx> bra(m + 1), ket(m + 1);
    for (std::size_t j = 0; j <= m; ++j) {
      const double t = -kPi + h * static_cast<double>(j);
      bra[j] = angle_amp(phi - t / 2.0);
      ket[j] = angle_amp(phi + t / 2.0);
    }
    for (std::size_t li = 0; li < l_values.size(); ++li) {
      const double l = l_values[li];
      Cplx acc = 0;
      for (std::size_t j = 0; j <= m; ++j) {
        const double t = -kPi + h * static_cast<double>(j);
        const double wgt = (j == 0 || j == m) ? 0.5 : 1.0;
        acc += wgt * bra[j] * std::conj(ket[j]) * std::polar(1.0, -t * l);
      }
      grid.w[li][pi_idx] = (acc * h).real() / (2.0 * kPi);
    }
  });
  return grid;
}

Cplx jacobi_theta(int kind, Cplx z, double q) {
  if (kind < 1 || kind > 4) throw_invalid("jacobi_theta: kind must be in 1..4");
  if (!(q > 0.0 && q < 1.0)) throw_invalid("jacobi_theta: nome must satisfy 0 < q < 1");
  constexpr double kTol = 1e-16;
  constexpr int kMaxTerms = 512;
  Cplx acc = (kind == 3 || kind == 4) ? Cplx(1.0) : Cplx(0.0);
  for (int k = (kind <= 2 ? 0 : 1); k <= kMaxTerms; ++k) {
    Cplx term;
    switch (kind) {
      case 1: {
        double e = (k + 0.5) * (k + 0.5);
        term = 2.0 * std::pow(q, e) * std::sin(static_cast<double>(2 * k + 1) * z);
        if (k % 2 == 1) term = -term;
        break;
      }
      case 2: {
        double e = (k + 0.5) * (k + 0.5);
        term = 2.0 * std::pow(q, e) * std::cos(static_cast<double>(2 * k + 1) * z);
        break;
      }
      case 3: {
        double e = static_cast<double>(k) * static_cast<double>(k);
        term = 2.0 * std::pow(q, e) * std::cos(2.0 * static_cast<double>(k) * z);
        break;
      }
      case 4: {
        double e = static_cast<double>(k) * static_cast<double>(k);
        term = 2.0 * std::pow(q, e) * std::cos(2.0 * static_cast<double>(k) * z);
        if (k % 2 == 1) term = -term;
        break;
      }
    }
    acc += term;
    if (std::abs(term) < kTol) break;
  }
  return acc;
}

Cplx qec_overlap(std::int64_t n_spacing, double delta, std::int64_t m, std::int64_t mp,
                 double dtheta, int bra, int ket) {
  if (delta <= 0) throw_invalid("qec_overlap: delta must be positive");
  if (n_spacing < 1) throw_invalid("qec_overlap: spacing must be >= 1");
  if ((bra != 0 && bra != 1) || (ket != 0 && ket != 1))
    throw_invalid("qec_overlap: codeword labels are 0 or 1");
  const std::int64_t diff = m - mp;
  if (((diff % n_spacing) + n_spacing) % n_spacing != 0) return 0.0;  // selection rule
  const std::int64_t s = diff / n_spacing;
  const double nd = static_cast<double>(n_spacing);
  const double z = dtheta * nd / 2.0;
  const double q = std::exp(-2.0 * delta * nd * nd);
  const Cplx pref = std::polar(1.0, dtheta * static_cast<double>(m + mp) / 2.0) *
                    std::exp(-delta * static_cast<double>(diff) * static_cast<double>(diff) / 2.0);
  const bool even = (s % 2) == 0;
  if (bra == ket) {
    Cplx theta = even ? jacobi_theta(3, z, q) : jacobi_theta(2, z, q);
    if (bra == 1 && !even) theta = -theta;
    return pref * theta;
  }
  // Off-diagonal: the alternating-sign codeword contributes i^{+-s}.
  static const Cplx kQuarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const int mod4 = static_cast<int>(((s % 4) + 4) % 4);
  const Cplx phase = (bra == 1) ? kQuarter[mod4] : std::conj(kQuarter[mod4]);
  const Cplx theta = even ? jacobi_theta(4, z, q) : -jacobi_theta(1, z, q);
  return pref * phase * theta;
}

std::vector<QecGridEntry> qec_overlap_grid(std::int64_t n_spacing, double delta,
                                           std::int64_t mmax, const std::vector<double>& dthetas) {
  std::vector<QecGridEntry> out;
  for (std::int64_t m = -mmax; m <= mmax; ++m)
    for (std::int64_t mp = -mmax; mp <= mmax; ++mp)
      for (double dt : dthetas)
        for (int bra = 0; bra < 2; ++bra)
          for (int ket = 0; ket < 2; ++ket)
            out.push_back({m, mp, dt, bra, ket, qec_overlap(n_spacing, delta, m, mp, dt, bra, ket)});
  return out;
}

}  // namespace rotorkit
