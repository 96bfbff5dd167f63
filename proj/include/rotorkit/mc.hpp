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

#include <cstdint>
#include <random>
#include <vector>

#include "rotorkit/sim.hpp"

namespace rotorkit {

/// Deterministic RNG: standard-pinned mt19937_64 plus our own uniform and
/// Box-Muller transforms, so identical seeds reproduce runs bit-exactly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform();  // [0, 1)
  double normal(double sigma);

  /// Stream seed for block `index` derived from a master seed (splitmix).
  static std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index);

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0;
};

/// Two-rotor repetition layer over a comb ancilla with spacing m: dephasing
/// angles are N(0, sigma_z^2) per rotor, momentum kicks are rounded
/// N(0, sigma_x^2) integers on the ancilla.
struct RepetitionConfig {
  std::int64_t m = 2;
  double sigma_z = 0.0;
  double sigma_x = 0.0;
  std::int64_t shots = 1;
  std::uint64_t seed = 0;
  bool exclude_failures = false;  // primary variance drops failed trials
};

struct TrialOutcome {
  double syndrome_z = 0;       // in [-pi/m, pi/m)
  std::int64_t syndrome_x = 0;  // in [-m/2, m/2)
  double residual_z = 0;       // leftover logical dephasing angle
  bool z_failure = false;
  bool x_failure = false;
};

/// x reduced modulo `period` into [-period/2, period/2).
double wrap(double x, double period);

/// Integer wrap into the centered window [-m/2, m/2).
std::int64_t wrap_integer(std::int64_t x, std::int64_t m);

/// Deterministic decode of one noise draw (dephasing angles xi1, xi2 and the
/// ancilla momentum kick).
TrialOutcome trial_from_samples(std::int64_t m, double xi1, double xi2, std::int64_t kick);

TrialOutcome run_trial(const RepetitionConfig& config, Rng& rng);

struct RepetitionStats {
  std::int64_t shots = 0;
  double var_residual_z = 0;  // per exclude_failures flag
  double var_ratio = 0;       // var_residual_z / sigma_z^2
  double var_residual_z_all = 0;
  double var_residual_z_success_only = 0;
  double z_fail_rate = 0;
  double x_fail_rate = 0;
  double stderr_var_residual_z = 0;
  double stderr_z_fail_rate = 0;
  double stderr_x_fail_rate = 0;
};

/// Deterministic for a fixed seed regardless of worker count: trials are
/// split into fixed blocks with derived seed streams and aggregated in block
/// order.
RepetitionStats monte_carlo(const RepetitionConfig& config);

/// State-level cross-check of the syndrome-extraction circuit: encodes a
/// momentum eigenstate against a regularized comb ancilla, injects dephasing
/// (xi1, xi2), runs the conditional-shift extraction circuit onto a
/// regularized uniform-phase ancilla, and reads the ancilla phase peaks.
struct CircuitVerifyReport {
  std::vector<double> expected_peaks;  // 2 pi f / m + xi1 + xi2, wrapped
  std::vector<double> found_peaks;
  double max_peak_error = 0;  // circular distance, worst matched peak
  double grid_step = 0;
  double truncation_weight = 0;
  double stabilizer_x_overlap = 0;  // regularizer-limited, ~exp(-delta m^2/4)
  double stabilizer_z_error = 0;    // exact up to float rounding
  bool fock_mode = false;
};

CircuitVerifyReport verify_circuit(const RepetitionConfig& config, std::int64_t cutoff,
                                   double delta, double xi1, double xi2, bool fock_mode = false,
                                   std::size_t grid_points = 1440);

}  // namespace rotorkit
