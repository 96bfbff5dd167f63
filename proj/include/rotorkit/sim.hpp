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

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "rotorkit/clifford.hpp"
#include "rotorkit/pauli.hpp"

namespace rotorkit {

using Cplx = std::complex<double>;
using Momenta = std::vector<std::int64_t>;

enum class StateMode { planar, fock };

/// Sparse state over bounded integer momentum tuples: [-L, L]^n in planar
/// mode, [0, L]^n in Fock mode. Keys are ordered so float reductions are
/// reproducible. `truncation_weight` accumulates norm^2 clipped at the box
/// boundary; `annihilated_weight` tracks amplitudes killed by Fock-mode
/// subtraction below the vacuum.
struct TruncatedRotorState {
  std::size_t n = 1;
  std::int64_t cutoff = 0;
  StateMode mode = StateMode::planar;
  std::map<Momenta, Cplx> amps;
  double truncation_weight = 0;
  double annihilated_weight = 0;

  static TruncatedRotorState momentum_eigenstate(std::size_t n, std::int64_t cutoff,
                                                 const Momenta& l, StateMode mode = StateMode::planar);

  bool in_bounds(const Momenta& l) const;
  double norm2() const;
  void normalize();
  void prune(double eps = 0.0);
};

Cplx inner_product(const TruncatedRotorState& a, const TruncatedRotorState& b);

/// Tensor product; amplitudes multiply, bounds must agree.
TruncatedRotorState tensor(const TruncatedRotorState& a, const TruncatedRotorState& b);

/// max_l |a_l - b_l| over tuples whose every coordinate is at least `margin`
/// away from the box boundary (both states' support unioned).
double interior_distance(const TruncatedRotorState& a, const TruncatedRotorState& b,
                         std::int64_t margin);

// -- Gate action ------------------------------------------------------------

/// X(m) on one rotor: shifts momentum support. Planar clips at the box and
/// records the weight; Fock subtraction below zero annihilates (recorded).
TruncatedRotorState apply_shift(const TruncatedRotorState& s, std::size_t site, std::int64_t m);

/// Z(phi): multiplies each |l> by e^{i phi l_site}.
TruncatedRotorState apply_rotation(const TruncatedRotorState& s, std::size_t site, double phi);

/// Float-mode gate application; quad/cphs accept arbitrary real angles.
TruncatedRotorState apply_gate(const TruncatedRotorState& s, Gate g, std::size_t a, std::size_t b,
                               double angle = 0.0);

TruncatedRotorState apply_atom(const TruncatedRotorState& s, const GeneratorAtom& atom);

/// Atoms in application order (first acts first).
TruncatedRotorState apply_word(const TruncatedRotorState& s, const GeneratorWord& word);

/// Canonical-order Pauli e^{2 pi i phase} Z(phi) X(m) with exact angles.
TruncatedRotorState apply_pauli(const TruncatedRotorState& s, const PauliVector& p);

/// Fock-mode conditional subtraction branch (adjoint of the conditional
/// injection) together with the complementary projector branch; the two Kraus
/// branches form a trace-preserving map.
struct SubtractionBranches {
  TruncatedRotorState subtracted;  // target momentum reduced by control
  TruncatedRotorState projected;   // support where target < control
};
SubtractionBranches cnot_np_dagger_branches(const TruncatedRotorState& s, std::size_t control,
                                            std::size_t target);

// -- Canonical states --------------------------------------------------------

struct CoherentStateSpec {
  Cplx xi;
  double delta = 0.0;  // 0 keeps the canonical Gaussian width e^{-l^2/2}

  CoherentStateSpec(Cplx xi_, double delta_ = 0.0) : xi(xi_), delta(delta_) {}
};

/// Amplitudes xi^{-l} e^{-w l^2 / 2} with w = delta when delta > 0, else 1.
TruncatedRotorState coherent_state(const CoherentStateSpec& spec, std::int64_t cutoff);

/// e^{-i c d / 2} X(d) Z(-c), the displacement by alpha = c + i d.
TruncatedRotorState displace(const TruncatedRotorState& s, double c, std::int64_t d);

/// <theta|psi> = (2 pi)^{-n/2} sum_l psi_l e^{-i theta . l}.
Cplx phase_amplitude(const TruncatedRotorState& s, const std::vector<double>& theta);

/// Marginal phase distribution of one rotor on a uniform grid over [-pi, pi).
std::vector<double> phase_distribution(const TruncatedRotorState& s, std::size_t site,
                                       std::size_t grid_points);

// -- Phase-space and overlap diagnostics -------------------------------------

struct WignerGrid {
  std::vector<double> phi;           // quadrature grid, M points over [-pi, pi)
  std::vector<double> l;             // integer / half-integer momentum values
  std::vector<std::vector<double>> w;  // w[l_index][phi_index]

  double min() const;
  double max() const;
};

/// W(l, phi) = (1/2pi) Int_{-pi}^{pi} <phi - t/2| rho |phi + t/2> e^{-i t l} dt
/// for a pure single-rotor state, via M-point trapezoid quadrature (M >= 64).
WignerGrid wigner(const TruncatedRotorState& s, const std::vector<double>& l_values,
                  std::size_t quadrature_points);

/// Jacobi theta functions, series summed until the term magnitude drops
/// below 1e-16. kind in 1..4, real nome q in (0, 1).
Cplx jacobi_theta(int kind, Cplx z, double q);

/// Overlap <bra| E_{m'}(theta')^dag E_m(theta) |ket> between regularized
/// two-codeword comb states with amplitudes e^{-delta (k N)^2} on support k N,
/// where E_m(theta) = Z(theta) X(m) and dtheta = theta - theta'. Closed form
/// in theta functions; zero unless m = m' mod N.
Cplx qec_overlap(std::int64_t n_spacing, double delta, std::int64_t m, std::int64_t mp,
                 double dtheta, int bra, int ket);

struct QecGridEntry {
  std::int64_t m, mp;
  double dtheta;
  int bra, ket;
  Cplx value;
};

std::vector<QecGridEntry> qec_overlap_grid(std::int64_t n_spacing, double delta,
                                           std::int64_t mmax, const std::vector<double>& dthetas);

}  // namespace rotorkit
