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

#include "rotorkit/mc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rotorkit/threads.hpp"

namespace rotorkit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::int64_t kBlock = 8192;

double circular_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), 2.0 * kPi);
  return std::min(d, 2.0 * kPi - d);
}

}  // namespace

double Rng::uniform() {
  return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double Rng::normal(double sigma) {
  if (sigma == 0) return 0;
  if (have_spare_) {
    have_spare_ = false;
    return spare_ * sigma;
  }
  double u1 = uniform(), u2 = uniform();
  while (u1 <= 0) u1 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * kPi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a) * sigma;
}

std::uint64_t Rng::stream_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 step on master ^ golden-ratio-scaled index
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double wrap(double x, double period) {
  if (period <= 0) throw_invalid("wrap: period must be positive");
  return x - period * std::floor(x / period + 0.5);
}

std::int64_t wrap_integer(std::int64_t x, std::int64_t m) {
  if (m <= 0) throw_invalid("wrap_integer: modulus must be positive");
  std::int64_t r = ((x % m) + m) % m;
  if (2 * r >= m) r -= m;
  return r;
}

TrialOutcome trial_from_samples(std::int64_t m, double xi1, double xi2, std::int64_t kick) {
  if (m < 1) throw_invalid("trial: ancilla spacing must be >= 1");
  TrialOutcome t;
  const double sum = xi1 + xi2;
  const double window = 2.0 * kPi / static_cast<double>(m);
  t.syndrome_z = wrap(sum, window);
  t.z_failure = t.syndrome_z != sum;
  // Half the syndrome is undone on success; a wrapped syndrome mis-corrects
  // and the full shift lands on the logical rotor.
  t.residual_z = t.z_failure ? sum : sum / 2.0;

  t.syndrome_x = wrap_integer(kick, m);
  t.x_failure = t.syndrome_x != kick;
  return t;
}

TrialOutcome run_trial(const RepetitionConfig& config, Rng& rng) {
  const double xi1 = rng.normal(config.sigma_z);
  const double xi2 = rng.normal(config.sigma_z);
  const std::int64_t kick = static_cast<std::int64_t>(std::llround(rng.normal(config.sigma_x)));
  return trial_from_samples(config.m, xi1, xi2, kick);
}

RepetitionStats monte_carlo(const RepetitionConfig& config) {
  if (config.shots < 1) throw_invalid("monte_carlo: shots must be >= 1");
  const std::int64_t blocks = (config.shots + kBlock - 1) / kBlock;

  struct BlockSums {
    double res = 0, res2 = 0;
    double res_ok = 0, res2_ok = 0;
    std::int64_t z_fail = 0, x_fail = 0, count = 0, ok = 0;
  };
  std::vector<BlockSums> partial(static_cast<std::size_t>(blocks));

  parallel_for(static_cast<std::size_t>(blocks), [&](std::size_t b) {
    Rng rng(Rng::stream_seed(config.seed, b));
    const std::int64_t lo = static_cast<std::int64_t>(b) * kBlock;
    const std::int64_t hi = std::min(config.shots, lo + kBlock);
    BlockSums s;
    for (std::int64_t i = lo; i < hi; ++i) {
      TrialOutcome t = run_trial(config, rng);
      s.count += 1;
      s.res += t.residual_z;
      s.res2 += t.residual_z * t.residual_z;
      if (t.z_failure)
        s.z_fail += 1;
      else {
        s.ok += 1;
        s.res_ok += t.residual_z;
        s.res2_ok += t.residual_z * t.residual_z;
      }
      if (t.x_failure) s.x_fail += 1;
    }
    partial[b] = s;
  });

  BlockSums total;
  for (const auto& s : partial) {
    total.res += s.res;
    total.res2 += s.res2;
    total.res_ok += s.res_ok;
    total.res2_ok += s.res2_ok;
    total.z_fail += s.z_fail;
    total.x_fail += s.x_fail;
    total.count += s.count;
    total.ok += s.ok;
  }

  auto variance = [](double sum, double sum2, std::int64_t n) {
    if (n < 2) return 0.0;
    double mean = sum / static_cast<double>(n);
    return (sum2 - static_cast<double>(n) * mean * mean) / static_cast<double>(n - 1);
  };

  RepetitionStats out;
  out.shots = total.count;
  out.var_residual_z_all = variance(total.res, total.res2, total.count);
  out.var_residual_z_success_only = variance(total.res_ok, total.res2_ok, total.ok);
  out.var_residual_z = config.exclude_failures ? out.var_residual_z_success_only
                                               : out.var_residual_z_all;
  out.var_ratio = config.sigma_z > 0 ? out.var_residual_z / (config.sigma_z * config.sigma_z) : 0.0;
  out.z_fail_rate = static_cast<double>(total.z_fail) / static_cast<double>(total.count);
  out.x_fail_rate = static_cast<double>(total.x_fail) / static_cast<double>(total.count);
  out.stderr_var_residual_z =
      out.var_residual_z * std::sqrt(2.0 / std::max<double>(1.0, static_cast<double>(total.count - 1)));
  auto rate_stderr = [&](double p) {
    return std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(total.count));
  };
  out.stderr_z_fail_rate = rate_stderr(out.z_fail_rate);
  out.stderr_x_fail_rate = rate_stderr(out.x_fail_rate);
  return out;
}

CircuitVerifyReport verify_circuit(const RepetitionConfig& config, std::int64_t cutoff,
                                   double delta, double xi1, double xi2, bool fock_mode,
                                   std::size_t grid_points) {
  if (config.m < 1 || config.m > 4) throw_invalid("verify_circuit: spacing must be in 1..4");
  if (cutoff > 40) throw_invalid("verify_circuit: cutoff capped at 40 for the state-level check");
  if (delta <= 0) throw_invalid("verify_circuit: needs a positive regularizer");
  const std::int64_t m = config.m;
  const StateMode mode = fock_mode ? StateMode::fock : StateMode::planar;

  auto comb = [&](std::int64_t spacing) {
    TruncatedRotorState s;
    s.n = 1;
    s.cutoff = cutoff;
    s.mode = mode;
    const std::int64_t lo = mode == StateMode::fock ? 0 : -cutoff;
    for (std::int64_t l = lo; l <= cutoff; ++l) {
      if (l % spacing != 0) continue;
      double dl = static_cast<double>(l);
      s.amps[{l}] = std::exp(-delta * dl * dl / 2.0);
    }
    s.normalize();
    return s;
  };

  // Rotor 0: logical momentum eigenstate; rotor 1: comb ancilla; rotor 2:
  // regularized uniform-phase ancilla (same comb profile).
  TruncatedRotorState logical =
      TruncatedRotorState::momentum_eigenstate(1, cutoff, {0}, mode);
  TruncatedRotorState state = tensor(tensor(logical, comb(m)), comb(m));

  // Encode, then pre-noise stabilizer checks: X(m) x X(m) x I (limited by the
  // regularizer envelope) and I x Z(2 pi / m) x I (exact on the comb).
  state = apply_gate(state, Gate::cnot, 1, 0);
  CircuitVerifyReport report;
  report.fock_mode = fock_mode;
  {
    TruncatedRotorState sx = apply_shift(apply_shift(state, 0, m), 1, m);
    report.stabilizer_x_overlap = std::abs(inner_product(state, sx));
    TruncatedRotorState sz = apply_rotation(state, 1, 2.0 * kPi / static_cast<double>(m));
    double acc = 0;
    for (const auto& [l, a] : state.amps) {
      auto it = sz.amps.find(l);
      Cplx d = (it == sz.amps.end() ? Cplx(0) : it->second) - a;
      acc += std::norm(d);
    }
    report.stabilizer_z_error = std::sqrt(acc);
  }

  state = apply_rotation(state, 0, xi1);
  state = apply_rotation(state, 1, xi2);
  state = apply_gate(state, Gate::cnot, 2, 0);
  state = apply_gate(state, Gate::cnot, 2, 1);
  report.truncation_weight = state.truncation_weight;

  std::vector<double> dist = phase_distribution(state, 2, grid_points);
  report.grid_step = 2.0 * kPi / static_cast<double>(grid_points);

  const double peak_floor = 0.5 * *std::max_element(dist.begin(), dist.end());
  for (std::size_t g = 0; g < grid_points; ++g) {
    const double prev = dist[(g + grid_points - 1) % grid_points];
    const double next = dist[(g + 1) % grid_points];
    if (dist[g] >= peak_floor && dist[g] >= prev && dist[g] > next)
      report.found_peaks.push_back(-kPi + report.grid_step * static_cast<double>(g));
  }
  for (std::int64_t f = 0; f < m; ++f) {
    double loc = 2.0 * kPi * static_cast<double>(f) / static_cast<double>(m) + xi1 + xi2;
    report.expected_peaks.push_back(wrap(loc, 2.0 * kPi));
  }

  report.max_peak_error = 2.0 * kPi;
  if (report.found_peaks.size() == report.expected_peaks.size()) {
    double worst = 0;
    for (double e : report.expected_peaks) {
      double best = 2.0 * kPi;
      for (double f : report.found_peaks) best = std::min(best, circular_distance(e, f));
      worst = std::max(worst, best);
    }
    report.max_peak_error = worst;
  }
  return report;
}

}  // namespace rotorkit
