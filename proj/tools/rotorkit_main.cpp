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

// Command-line front end. All mathematics goes through the shared-library C
// interface; this translation unit only parses flags, shuttles JSON and
// writes artifacts. Identical invocations produce byte-identical outputs
// (floats are pre-formatted with 17 significant digits inside the library).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "rotorkit/rotorkit_c.h"

namespace {

using Json = nlohmann::json;

int fail(rk_status status, const std::string& context) {
  Json err{{"error", static_cast<int>(status)}, {"context", context}, {"message", rk_last_error()}};
  std::cerr << err.dump() << "\n";
  return static_cast<int>(status);
}

int fail_io(const std::string& message) {
  Json err{{"error", static_cast<int>(RK_EIO)}, {"message", message}};
  std::cerr << err.dump() << "\n";
  return static_cast<int>(RK_EIO);
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

bool write_artifact(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return out.good();
}

// Loads a JSON file and normalizes matrix-style inputs: a bare array is
// wrapped as {"matrix": ...}.
int load_json(const std::string& path, Json& out) {
  std::string text;
  if (!read_file(path, text)) {
    fail_io("cannot read '" + path + "'");
    return static_cast<int>(RK_EIO);
  }
  out = Json::parse(text, nullptr, false);
  if (out.is_discarded()) {
    Json err{{"error", static_cast<int>(RK_EINVAL)}, {"message", "file is not valid JSON: " + path}};
    std::cerr << err.dump() << "\n";
    return static_cast<int>(RK_EINVAL);
  }
  return 0;
}

struct Response {
  char* data = nullptr;
  ~Response() { rk_string_free(data); }
  std::string str() const { return data == nullptr ? std::string() : std::string(data); }
};

int run_command(rk_status (*fn)(const char*, char**), const Json& request,
                const std::string& out_path, const std::string& context,
                bool unwrap_csv = false) {
  Response resp;
  rk_status status = fn(request.dump().c_str(), &resp.data);
  if (status != RK_OK) return fail(status, context);
  std::string text = resp.str();
  if (unwrap_csv) {
    Json parsed = Json::parse(text);
    text = parsed.at("csv").get<std::string>();
  }
  if (!write_artifact(out_path, text)) return fail_io("cannot write artifact");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rotorkit: exact Clifford/symplectic algebra, homology and truncated simulation "
               "for planar rotors and number-phase codes"};
  app.require_subcommand(1);

  std::string in_path, out_path;

  // analyze
  auto* analyze = app.add_subcommand(
      "analyze", "Torsion/free logical content, logical operators and encoder word of a CSS "
                 "rotor code given by integer check matrices (hx . hz^T = 0)");
  analyze->add_option("--code", in_path, "code JSON {\"n\",\"hx\",\"hz\"}")->required();
  analyze->add_option("--out", out_path, "output path (default stdout)");
  analyze->callback([&]() {
    Json code;
    int rc = load_json(in_path, code);
    if (rc != 0) std::exit(rc);
    std::exit(run_command(rk_analyze_json, Json{{"code", code}}, out_path, "analyze"));
  });

  // snf
  auto* snf = app.add_subcommand(
      "snf", "Smith normal form U M V = D of an integer matrix, with unimodular witnesses and "
             "the invariant-factor chain d_1 | d_2 | ...");
  snf->add_option("--input", in_path, "matrix JSON (array of arrays; entries may be strings)")
      ->required();
  snf->add_option("--out", out_path, "output path (default stdout)");
  snf->callback([&]() {
    Json m;
    int rc = load_json(in_path, m);
    if (rc != 0) std::exit(rc);
    Json request = m.is_array() ? Json{{"matrix", m}} : m;
    std::exit(run_command(rk_snf_json, request, out_path, "snf"));
  });

  // homology
  auto* hom = app.add_subcommand(
      "homology", "First homology of the code's chain complex: torsion qudit dimensions and the "
                  "free logical-rotor rank, via ker(hz .)/im(hx^T)");
  hom->add_option("--code", in_path, "code JSON")->required();
  hom->add_option("--out", out_path, "output path (default stdout)");
  hom->callback([&]() {
    Json code;
    int rc = load_json(in_path, code);
    if (rc != 0) std::exit(rc);
    std::exit(run_command(rk_homology_json, Json{{"code", code}}, out_path, "homology"));
  });

  // synthesize
  auto* synth = app.add_subcommand(
      "synthesize", "Decompose a unimodular integer matrix into a conditional-shift / swap / "
                    "sign-flip gate word that evaluates back to it exactly");
  synth->add_option("--matrix", in_path, "matrix JSON")->required();
  synth->add_option("--out", out_path, "output path (default stdout)");
  synth->callback([&]() {
    Json m;
    int rc = load_json(in_path, m);
    if (rc != 0) std::exit(rc);
    Json request = m.is_array() ? Json{{"matrix", m}} : m;
    std::exit(run_command(rk_synthesize_json, request, out_path, "synthesize"));
  });

  // encode
  auto* enc = app.add_subcommand(
      "encode", "Encoding circuit of a CSS rotor code: the gate word carrying the canonical "
                "single-rotor checks X(d_i) onto the code's stabilizer lattice");
  enc->add_option("--code", in_path, "code JSON")->required();
  enc->add_option("--out", out_path, "output path (default stdout)");
  enc->callback([&]() {
    Json code;
    int rc = load_json(in_path, code);
    if (rc != 0) std::exit(rc);
    std::exit(run_command(rk_encode_json, Json{{"code", code}}, out_path, "encode"));
  });

  // to-np
  auto* tonp = app.add_subcommand(
      "to-np", "Map a rotor code to a number-phase oscillator code: momentum sign flips making "
               "the X checks non-negative, the stabilizer semigroup generators and the "
               "transported logicals");
  tonp->add_option("--code", in_path, "code JSON")->required();
  tonp->add_option("--out", out_path, "output path (default stdout)");
  tonp->callback([&]() {
    Json code;
    int rc = load_json(in_path, code);
    if (rc != 0) std::exit(rc);
    std::exit(run_command(rk_to_np_json, Json{{"code", code}}, out_path, "to-np"));
  });

  // wigner
  {
    auto* wig = app.add_subcommand(
        "wigner", "Wigner function W(l, phi) = (1/2pi) Int <phi-t/2|rho|phi+t/2> e^{-i t l} dt of "
                  "a regularized comb codeword, on integer and half-integer momentum rows (CSV)");
    auto n = std::make_shared<std::int64_t>(2);
    auto delta = std::make_shared<double>(0.05);
    auto grid = std::make_shared<std::int64_t>(512);
    auto cutoff = std::make_shared<std::int64_t>(60);
    auto lmax = std::make_shared<double>(8.0);
    wig->add_option("--N", *n, "comb spacing (support on N Z)")->required();
    wig->add_option("--delta", *delta, "regularizer strength in exp(-delta l^2 / 2)")->required();
    wig->add_option("--grid", *grid, "quadrature and phi-grid points (>= 64)");
    wig->add_option("--cutoff", *cutoff, "momentum cutoff L");
    wig->add_option("--lmax", *lmax, "largest |l| row (half-integer steps)");
    wig->add_option("--out", out_path, "CSV path (default stdout)");
    wig->callback([&, n, delta, grid, cutoff, lmax]() {
      Json request{{"n_spacing", *n},
                   {"delta", *delta},
                   {"grid", *grid},
                   {"cutoff", *cutoff},
                   {"lmax", *lmax}};
      std::exit(run_command(rk_wigner_csv, request, out_path, "wigner", true));
    });
  }

  // qec-grid
  {
    auto* qec = app.add_subcommand(
        "qec-grid", "Theta-function overlaps <bra| E_{m'}(th')^dag E_m(th) |ket> between "
                    "regularized comb codewords with envelope exp(-delta (k N)^2), over a grid "
                    "of shifts and rotation differences");
    auto n = std::make_shared<std::int64_t>(3);
    auto delta = std::make_shared<double>(0.1);
    auto mmax = std::make_shared<std::int64_t>(4);
    auto dthetas = std::make_shared<std::vector<double>>();
    qec->add_option("--N", *n, "comb spacing")->required();
    qec->add_option("--delta", *delta, "envelope strength (exp(-delta (k N)^2))")->required();
    qec->add_option("--mmax", *mmax, "largest |m|, |m'| in the grid");
    qec->add_option("--dtheta", *dthetas, "rotation differences (repeatable; default 0)");
    qec->add_option("--out", out_path, "output path (default stdout)");
    qec->callback([&, n, delta, mmax, dthetas]() {
      Json request{{"n_spacing", *n}, {"delta", *delta}, {"mmax", *mmax}};
      if (!dthetas->empty()) request["dthetas"] = *dthetas;
      std::exit(run_command(rk_qec_grid_json, request, out_path, "qec-grid"));
    });
  }

  // gkp-rep
  {
    auto* rep = app.add_subcommand(
        "gkp-rep", "Monte Carlo of the two-rotor comb-ancilla repetition layer: the halved "
                   "syndrome correction leaves Var((xi1+xi2)/2) = sigma_z^2/2 of residual "
                   "dephasing; reports failure rates and standard errors");
    auto m = std::make_shared<std::int64_t>(4);
    auto sigma_z = std::make_shared<double>(0.02);
    auto sigma_x = std::make_shared<double>(0.0);
    auto shots = std::make_shared<std::int64_t>(100000);
    auto seed = std::make_shared<std::uint64_t>(7);
    auto exclude = std::make_shared<bool>(false);
    auto verify = std::make_shared<bool>(false);
    auto fock = std::make_shared<bool>(false);
    auto cutoff = std::make_shared<std::int64_t>(40);
    auto delta = std::make_shared<double>(0.01);
    auto xi1 = std::make_shared<double>(0.0);
    auto xi2 = std::make_shared<double>(0.0);
    rep->add_option("--m", *m, "ancilla comb spacing")->required();
    rep->add_option("--sigma-z", *sigma_z, "dephasing angle std-dev per rotor")->required();
    rep->add_option("--sigma-x", *sigma_x, "pre-rounding std-dev of integer momentum kicks");
    rep->add_option("--shots", *shots, "trial count");
    rep->add_option("--seed", *seed, "master seed (bit-exact reruns)");
    rep->add_flag("--exclude-failures", *exclude, "primary variance over successful trials only");
    rep->add_flag("--verify-circuit", *verify,
                  "run the truncated-state extraction circuit instead of sampling");
    rep->add_flag("--fock", *fock, "verifier uses Fock-mode states and injection gates");
    rep->add_option("--cutoff", *cutoff, "verifier momentum cutoff (<= 40)");
    rep->add_option("--delta", *delta, "verifier ancilla regularizer");
    rep->add_option("--xi1", *xi1, "verifier dephasing angle on rotor 1");
    rep->add_option("--xi2", *xi2, "verifier dephasing angle on rotor 2");
    rep->add_option("--out", out_path, "output path (default stdout)");
    rep->callback([&, m, sigma_z, sigma_x, shots, seed, exclude, verify, fock, cutoff, delta, xi1,
                   xi2]() {
      if (*verify) {
        Json request{{"m", *m},     {"cutoff", *cutoff}, {"delta", *delta},
                     {"xi1", *xi1}, {"xi2", *xi2},       {"fock", *fock}};
        std::exit(run_command(rk_gkp_rep_verify_json, request, out_path, "gkp-rep verify"));
      }
      Json request{{"m", *m},         {"sigma_z", *sigma_z}, {"sigma_x", *sigma_x},
                   {"shots", *shots}, {"seed", *seed},       {"exclude_failures", *exclude}};
      std::exit(run_command(rk_gkp_rep_json, request, out_path, "gkp-rep"));
    });
  }

  // verify-group
  {
    auto* vg = app.add_subcommand(
        "verify-group", "Exact group-law property suite over random gate words: symplectic "
                        "condition, block structure, split round-trip, angle-subgroup closure "
                        "under conjugation, commutation-phase preservation");
    auto n = std::make_shared<std::int64_t>(3);
    auto words = std::make_shared<std::int64_t>(1000);
    auto seed = std::make_shared<std::uint64_t>(1);
    vg->add_option("--n", *n, "largest rotor count");
    vg->add_option("--words", *words, "random words to draw");
    vg->add_option("--seed", *seed, "seed");
    vg->add_option("--out", out_path, "output path (default stdout)");
    vg->callback([&, n, words, seed]() {
      Json request{{"max_rotors", *n}, {"words", *words}, {"seed", *seed}};
      Response resp;
      rk_status status = rk_verify_group_json(request.dump().c_str(), &resp.data);
      if (status != RK_OK) std::exit(fail(status, "verify-group"));
      std::string text = resp.str();
      if (!write_artifact(out_path, text)) std::exit(fail_io("cannot write artifact"));
      Json parsed = Json::parse(text);
      std::exit(parsed.at("ok").get<bool>() ? 0 : static_cast<int>(RK_EMATH));
    });
  }

  CLI11_PARSE(app, argc, argv);
  return 0;
}
