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

#include "rotorkit/rotorkit_c.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "rotorkit/codes.hpp"
#include "rotorkit/json_io.hpp"
#include "rotorkit/mc.hpp"
#include "rotorkit/numberphase.hpp"
#include "rotorkit/sim.hpp"
#include "rotorkit/verify.hpp"

namespace {

using namespace rotorkit;

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rk_status to_status(const Error& e) { return static_cast<rk_status>(static_cast<int>(e.kind())); }

template <typename Fn>
rk_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return RK_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e);
  } catch (const Json::exception& e) {
    g_last_error = e.what();
    return RK_EINVAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RK_EMATH;
  }
}

Json parse_request(const char* request) {
  if (request == nullptr) throw_invalid("null request");
  Json j = Json::parse(request, nullptr, false);
  if (j.is_discarded()) throw_invalid("request is not valid JSON");
  return j;
}

template <typename Fn>
rk_status json_command(const char* request, char** response, Fn&& fn) {
  if (response == nullptr) {
    g_last_error = "null response pointer";
    return RK_EINVAL;
  }
  *response = nullptr;
  return guarded([&] {
    Json req = parse_request(request);
    Json resp = fn(req);
    *response = dup_string(resp.dump());
  });
}

Json logicals_to_json(const LogicalOperators& logicals) {
  Json out = Json::array();
  for (const auto& p : logicals.pairs) {
    Json x = Json::array(), z = Json::array();
    for (const auto& v : p.x) x.push_back(int_to_json(v));
    for (const auto& v : p.z_pattern) z.push_back(int_to_json(v));
    Json entry{{"d", int_to_json(p.d)}, {"x", std::move(x)}, {"z_pattern", std::move(z)}};
    if (p.d > 1) {
      Json zang = Json::array();
      for (const auto& a : p.z_angles()) zang.push_back(angle_to_json(a));
      entry["z_angles"] = std::move(zang);
    }
    out.push_back(std::move(entry));
  }
  return out;
}

Json homology_to_json(const HomologyResult& h) {
  Json torsion = Json::array();
  for (const auto& d : h.torsion) torsion.push_back(int_to_json(d));
  return Json{{"torsion", std::move(torsion)}, {"free_rank", h.free_rank}};
}

}  // namespace

extern "C" {

const char* rk_version(void) { return "0.1.0"; }

const char* rk_last_error(void) { return g_last_error.c_str(); }

void rk_string_free(char* s) { std::free(s); }

rk_status rk_snf_json(const char* request, char** response) {
  return json_command(request, response, [](const Json& req) {
    IntMat m = matrix_from_json(req.at("matrix"));
    SmithDecomposition s = smith_normal_form(m);
    Json factors = Json::array();
    for (const auto& d : s.invariant_factors) factors.push_back(int_to_json(d));
    return Json{{"d", matrix_to_json(s.d, true)},
                {"u", matrix_to_json(s.u, true)},
                {"v", matrix_to_json(s.v, true)},
                {"invariant_factors", std::move(factors)}};
  });
}

rk_status rk_homology_json(const char* request, char** response) {
  return json_command(request, response, [](const Json& req) {
    HomologicalRotorCode code = code_from_json(req.at("code"));
    return homology_to_json(homology(code));
  });
}

rk_status rk_analyze_json(const char* request, char** response) {
  return json_command(request, response, [](const Json& req) {
    HomologicalRotorCode code = code_from_json(req.at("code"));
    HomologyResult h = homology(code);
    LogicalOperators logicals = logical_operators(code);
    EncodingCircuit enc = encoding_circuit(code);
    Json factors = Json::array();
    for (const auto& d : enc.canonical_factors) factors.push_back(int_to_json(d));
    return Json{{"homology", homology_to_json(h)},
                {"logicals", logicals_to_json(logicals)},
                {"encoder_word", word_to_json(enc.word)},
                {"canonical_factors", std::move(factors)},
                {"canonical_code", code_to_json(enc.canonical)}};
  });
}

rk_status rk_synthesize_json(const char* request, char** response) {
  return json_command(request, response, [](const Json& req) {
    IntMat m = matrix_from_json(req.at("matrix"));
    GeneratorWord word = synthesize_generators(m);
    return Json{{"word", word_to_json(word)}, {"entries", word.size()}};
  });
}

rk_status rk_encode_json(const char* request, char** response) {
  return json_command(request, response, [](const Json& req) {
    HomologicalRotorCode code = code_from_json(req.at("code"));
    EncodingCircuit enc = encoding_circuit(code);
    Json factors = Json::array();
    for (const auto& d : enc.canonical_factors) factors.push_back(int_to_json(d));
    return Json{{"word", word_to_json(enc.word)},
                {"canonical_factors", std::move(factors)},
                {"canonical_code", code_to_json(enc.canonical)}};
  });
}

rk_status rk_to_np_json(const char* request, char** response) {
  return json_command(request, response, [](const Json& req) {
    HomologicalRotorCode code = code_from_json(req.at("code"));
    NumberPhaseCode np = to_number_phase(code);
    Json signs = Json::array();
    for (const auto& s : np.flip.signs) signs.push_back(int_to_json(s));
    Json semigroup = Json::array();
    for (const auto& row : np.semigroup_x_generators) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(int_to_json(v));
      semigroup.push_back(std::move(r));
    }
    return Json{{"flipped_code", code_to_json(np.base)},
                {"signs", std::move(signs)},
                {"basis_change", matrix_to_json(np.flip.basis_change)},
                {"semigroup_x_generators", std::move(semigroup)},
                {"z_generators", matrix_to_json(np.base.hz)},
                {"logicals", logicals_to_json(np_logicals(np))}};
  });
}

rk_status rk_equivalent_json(const char* request, char** response) {
  return json_command(request, response, [](const Json& req) {
    HomologicalRotorCode a = code_from_json(req.at("code_a"));
    HomologicalRotorCode b = code_from_json(req.at("code_b"));
    return Json{{"equivalent", same_equivalence_class(a, b)}};
  });
}

rk_status rk_qec_grid_json(const char* request, char** response) {
  return json_command(request, response, [](const Json& req) {
    const std::int64_t n_spacing = req.at("n_spacing").get<std::int64_t>();
    const double delta = req.at("delta").get<double>();
    const std::int64_t mmax = req.at("mmax").get<std::int64_t>();
    std::vector<double> dthetas;
    if (req.contains("dthetas"))
      for (const auto& v : req["dthetas"]) dthetas.push_back(v.get<double>());
    else
      dthetas = {0.0};
    auto grid = qec_overlap_grid(n_spacing, delta, mmax, dthetas);
    Json entries = Json::array();
    for (const auto& e : grid) {
      entries.push_back(Json{{"m", e.m},
                             {"mp", e.mp},
                             {"dtheta", format_g17(e.dtheta)},
                             {"bra", e.bra},
                             {"ket", e.ket},
                             {"re", format_g17(e.value.real())},
                             {"im", format_g17(e.value.imag())}});
    }
    return Json{{"n_spacing", n_spacing}, {"delta", format_g17(delta)}, {"entries", entries}};
  });
}

rk_status rk_gkp_rep_json(const char* request, char** response) {
  return json_command(request, response, [](const Json& req) {
    RepetitionConfig config;
    config.m = req.at("m").get<std::int64_t>();
    config.sigma_z = req.at("sigma_z").get<double>();
    config.sigma_x = req.at("sigma_x").get<double>();
    config.shots = req.at("shots").get<std::int64_t>();
    config.seed = req.at("seed").get<std::uint64_t>();
    if (req.contains("exclude_failures"))
      config.exclude_failures = req["exclude_failures"].get<bool>();
    RepetitionStats stats = monte_carlo(config);
    return Json{{"shots", stats.shots},
                {"var_residual_z", format_g17(stats.var_residual_z)},
                {"var_ratio", format_g17(stats.var_ratio)},
                {"var_residual_z_all", format_g17(stats.var_residual_z_all)},
                {"var_residual_z_success_only", format_g17(stats.var_residual_z_success_only)},
                {"z_fail_rate", format_g17(stats.z_fail_rate)},
                {"x_fail_rate", format_g17(stats.x_fail_rate)},
                {"stderr_var_residual_z", format_g17(stats.stderr_var_residual_z)},
                {"stderr_z_fail_rate", format_g17(stats.stderr_z_fail_rate)},
                {"stderr_x_fail_rate", format_g17(stats.stderr_x_fail_rate)}};
  });
}

rk_status rk_gkp_rep_verify_json(const char* request, char** response) {
  return json_command(request, response, [](const Json& req) {
    RepetitionConfig config;
    config.m = req.at("m").get<std::int64_t>();
    const std::int64_t cutoff = req.value("cutoff", 40);
    const double delta = req.value("delta", 0.01);
    const double xi1 = req.value("xi1", 0.0);
    const double xi2 = req.value("xi2", 0.0);
    const bool fock = req.value("fock", false);
    CircuitVerifyReport r = verify_circuit(config, cutoff, delta, xi1, xi2, fock);
    Json expected = Json::array(), found = Json::array();
    for (double v : r.expected_peaks) expected.push_back(format_g17(v));
    for (double v : r.found_peaks) found.push_back(format_g17(v));
    return Json{{"expected_peaks", std::move(expected)},
                {"found_peaks", std::move(found)},
                {"max_peak_error", format_g17(r.max_peak_error)},
                {"grid_step", format_g17(r.grid_step)},
                {"truncation_weight", format_g17(r.truncation_weight)},
                {"stabilizer_x_overlap", format_g17(r.stabilizer_x_overlap)},
                {"stabilizer_z_error", format_g17(r.stabilizer_z_error)},
                {"fock", r.fock_mode}};
  });
}

rk_status rk_verify_group_json(const char* request, char** response) {
  return json_command(request, response, [](const Json& req) {
    const std::size_t max_rotors = req.value("max_rotors", 4);
    const std::size_t words = req.value("words", 1000);
    const std::uint64_t seed = req.value("seed", 1);
    GroupLawReport r = run_group_law_suite(max_rotors, words, seed);
    Json failures = Json::array();
    for (const auto& f : r.failures) failures.push_back(f);
    return Json{{"words", r.words},
                {"max_rotors", r.max_rotors},
                {"seed", r.seed},
                {"checks", r.checks},
                {"failures", std::move(failures)},
                {"ok", r.ok()},
                {"elapsed_seconds", format_g17(r.elapsed_seconds)}};
  });
}

rk_status rk_wigner_csv(const char* request, char** response) {
  return json_command(request, response, [](const Json& req) {
    const std::int64_t spacing = req.at("n_spacing").get<std::int64_t>();
    const double delta = req.at("delta").get<double>();
    const std::int64_t cutoff = req.value("cutoff", 60);
    const std::size_t grid = req.value("grid", 512);
    const double lmax = req.value("lmax", 8.0);
    if (spacing < 1) throw_invalid("n_spacing must be >= 1");
    HomologicalRotorCode code = HomologicalRotorCode::make(1, {{Int(spacing)}}, {});
    TruncatedRotorState state = codeword_state(code, {Int(0)}, cutoff, delta);
    std::vector<double> l_values;
    for (double l = -lmax; l <= lmax + 0.25; l += 0.5) l_values.push_back(l);
    WignerGrid w = wigner(state, l_values, grid);
    std::ostringstream csv;
    csv << "phi,l,w\n";
    for (std::size_t li = 0; li < w.l.size(); ++li)
      for (std::size_t pi = 0; pi < w.phi.size(); ++pi)
        csv << format_g17(w.phi[pi]) << "," << format_g17(w.l[li]) << ","
            << format_g17(w.w[li][pi]) << "\n";
    // Response is the CSV text wrapped as a JSON string for uniform handling.
    return Json{{"csv", csv.str()}};
  });
}

struct rk_state {
  TruncatedRotorState value;
};

rk_status rk_state_comb(int64_t spacing, int64_t label, int64_t cutoff, double delta,
                        rk_state** out) {
  if (out == nullptr) {
    g_last_error = "null output pointer";
    return RK_EINVAL;
  }
  *out = nullptr;
  return guarded([&] {
    if (spacing < 1) throw_invalid("rk_state_comb: spacing must be >= 1");
    HomologicalRotorCode code = HomologicalRotorCode::make(1, {{Int(spacing)}}, {});
    IntVec lab{Int(label)};
    *out = new rk_state{codeword_state(code, lab, cutoff, delta)};
  });
}

rk_status rk_state_coherent(double xi_re, double xi_im, double delta, int64_t cutoff,
                            rk_state** out) {
  if (out == nullptr) {
    g_last_error = "null output pointer";
    return RK_EINVAL;
  }
  *out = nullptr;
  return guarded([&] {
    CoherentStateSpec spec(Cplx(xi_re, xi_im), delta);
    *out = new rk_state{coherent_state(spec, cutoff)};
  });
}

rk_status rk_state_apply(rk_state* state, const char* gate, int64_t a, int64_t b, double angle) {
  if (state == nullptr || gate == nullptr) {
    g_last_error = "null state or gate";
    return RK_EINVAL;
  }
  return guarded([&] {
    const std::string g = gate;
    auto site = [&](int64_t v) {
      if (v < 0) throw_invalid("rotor index must be non-negative");
      return static_cast<std::size_t>(v);
    };
    if (g == "x")
      state->value = apply_shift(state->value, site(b), a);
    else if (g == "z")
      state->value = apply_rotation(state->value, site(a), angle);
    else if (g == "cnot")
      state->value = apply_gate(state->value, Gate::cnot, site(a), site(b));
    else if (g == "cnot_dag")
      state->value = apply_gate(state->value, Gate::cnot_dag, site(a), site(b));
    else if (g == "p")
      state->value = apply_gate(state->value, Gate::p, site(a), site(a));
    else if (g == "swap")
      state->value = apply_gate(state->value, Gate::swap, site(a), site(b));
    else if (g == "quad")
      state->value = apply_gate(state->value, Gate::quad, site(a), site(a), angle);
    else if (g == "cphs")
      state->value = apply_gate(state->value, Gate::cphs, site(a), site(b), angle);
    else
      throw_invalid("unknown gate '" + g + "'");
  });
}

rk_status rk_state_norm2(const rk_state* state, double* out) {
  if (state == nullptr || out == nullptr) {
    g_last_error = "null argument";
    return RK_EINVAL;
  }
  *out = state->value.norm2();
  return RK_OK;
}

rk_status rk_state_phase_amplitude(const rk_state* state, const double* thetas, size_t count,
                                   double* out_re, double* out_im) {
  if (state == nullptr || thetas == nullptr || out_re == nullptr || out_im == nullptr) {
    g_last_error = "null argument";
    return RK_EINVAL;
  }
  return guarded([&] {
    std::vector<double> t(thetas, thetas + count);
    Cplx v = phase_amplitude(state->value, t);
    *out_re = v.real();
    *out_im = v.imag();
  });
}

void rk_state_free(rk_state* state) { delete state; }

}  // extern "C"
