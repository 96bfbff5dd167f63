/*
 * Copyright 2026 The rotorkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of the rotorkit shared library.
 *
 * Batch operations exchange JSON strings: the caller owns the returned
 * buffer and releases it with rk_string_free. Truncated simulator states are
 * opaque handles. Every function returns an rk_status; on failure a
 * thread-local message is available from rk_last_error.
 */

#ifndef ROTORKIT_C_H
#define ROTORKIT_C_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rk_status {
  RK_OK = 0,
  RK_EINVAL = 1, /* malformed input */
  RK_EMATH = 2,  /* mathematical failure (CSS violation, search exhausted, ...) */
  RK_EIO = 3     /* serialization / IO failure */
} rk_status;

const char* rk_version(void);

/* Message for the most recent failure on this thread; empty string if none. */
const char* rk_last_error(void);

void rk_string_free(char* s);

/*
 * JSON commands. Requests and responses are UTF-8 JSON documents:
 *
 *   rk_snf_json          {"matrix": [[..]]}
 *                        -> {"d": .., "u": .., "v": .., "invariant_factors": [..]}
 *   rk_homology_json     {"code": {"n": .., "hx": [[..]], "hz": [[..]]}}
 *                        -> {"torsion": [..], "free_rank": ..}
 *   rk_analyze_json      {"code": ..} -> homology + logicals + encoder word
 *   rk_synthesize_json   {"matrix": [[..]]} -> {"word": [..]}
 *   rk_encode_json       {"code": ..} -> {"word": [..], "canonical": ..}
 *   rk_to_np_json        {"code": ..} -> flipped code, signs, semigroup, logicals
 *   rk_equivalent_json   {"code_a": .., "code_b": ..} -> {"equivalent": bool}
 *   rk_qec_grid_json     {"n_spacing": N, "delta": .., "mmax": .., "dthetas": [..]}
 *   rk_gkp_rep_json      {"m": .., "sigma_z": .., "sigma_x": .., "shots": ..,
 *                         "seed": .., "exclude_failures": false}
 *   rk_verify_group_json {"max_rotors": .., "words": .., "seed": ..}
 *   rk_wigner_csv        {"n_spacing": .., "delta": .., "cutoff": ..,
 *                         "grid": .., "lmax": ..}   -> CSV text "phi,l,w"
 */
rk_status rk_snf_json(const char* request, char** response);
rk_status rk_homology_json(const char* request, char** response);
rk_status rk_analyze_json(const char* request, char** response);
rk_status rk_synthesize_json(const char* request, char** response);
rk_status rk_encode_json(const char* request, char** response);
rk_status rk_to_np_json(const char* request, char** response);
rk_status rk_equivalent_json(const char* request, char** response);
rk_status rk_qec_grid_json(const char* request, char** response);
rk_status rk_gkp_rep_json(const char* request, char** response);
rk_status rk_gkp_rep_verify_json(const char* request, char** response);
rk_status rk_verify_group_json(const char* request, char** response);
rk_status rk_wigner_csv(const char* request, char** response);

/* Opaque truncated rotor / Fock state. */
typedef struct rk_state rk_state;

/* Regularized comb codeword of the single-check code on one rotor:
 * support on multiples of `spacing` shifted by `label`, envelope
 * exp(-delta l^2 / 2), box [-cutoff, cutoff]. */
rk_status rk_state_comb(int64_t spacing, int64_t label, int64_t cutoff, double delta,
                        rk_state** out);

rk_status rk_state_coherent(double xi_re, double xi_im, double delta, int64_t cutoff,
                            rk_state** out);

/* gate: "cnot", "cnot_dag", "p", "swap", "quad", "cphs", "x", "z".
 * For "x" the shift is `a` applied to rotor `b`; for rotations `angle` is in
 * radians. */
rk_status rk_state_apply(rk_state* state, const char* gate, int64_t a, int64_t b, double angle);

rk_status rk_state_norm2(const rk_state* state, double* out);

rk_status rk_state_phase_amplitude(const rk_state* state, const double* thetas, size_t count,
                                   double* out_re, double* out_im);

void rk_state_free(rk_state* state);

#ifdef __cplusplus
}
#endif

#endif /* ROTORKIT_C_H */
