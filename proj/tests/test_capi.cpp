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

#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <string>

#include "rotorkit/rotorkit_c.h"

using Json = nlohmann::json;

namespace {

struct Out {
  char* data = nullptr;
  ~Out() { rk_string_free(data); }
  Json json() const { return Json::parse(std::string(data ? data : "null")); }
};

}  // namespace

TEST_CASE("library identifies itself") {
  CHECK(std::string(rk_version()) == "0.1.0");
}

TEST_CASE("smith normal form over the boundary uses decimal strings") {
  Out out;
  CHECK(rk_snf_json(R"({"matrix": [[2, 0], [0, 3]]})", &out.data) == RK_OK);
  Json j = out.json();
  CHECK(j["invariant_factors"] == Json::array({1, 6}));
  CHECK(j["d"][0][0] == "1");
  CHECK(j["d"][1][1] == "6");
}

TEST_CASE("homology and analyze of the four-rotor qubit code") {
  const char* req =
      R"({"code": {"n": 4, "hx": [[1,-1,0,0],[0,0,-1,1],[-1,-1,1,1]], "hz": [[1,1,1,1]]}})";
  Out hom;
  REQUIRE(rk_homology_json(req, &hom.data) == RK_OK);
  CHECK(hom.json()["torsion"] == Json::array({2}));
  CHECK(hom.json()["free_rank"] == 0);

  Out ana;
  REQUIRE(rk_analyze_json(req, &ana.data) == RK_OK);
  Json j = ana.json();
  CHECK(j["homology"]["torsion"] == Json::array({2}));
  CHECK(j["logicals"].size() == 1);
  CHECK(j["logicals"][0]["d"] == 2);
  CHECK(j.contains("encoder_word"));
}

TEST_CASE("mathematical failures map to RK_EMATH with a message") {
  Out out;
  rk_status s = rk_homology_json(R"({"code": {"n": 1, "hx": [[1]], "hz": [[1]]}})", &out.data);
  CHECK(s == RK_EMATH);
  CHECK(std::string(rk_last_error()).find("CSS violation") != std::string::npos);
}

TEST_CASE("malformed requests map to RK_EINVAL") {
  Out out;
  CHECK(rk_snf_json("{not json", &out.data) == RK_EINVAL);
  CHECK(rk_snf_json(R"({"wrong_key": 1})", &out.data) == RK_EINVAL);
  CHECK(rk_snf_json(nullptr, &out.data) == RK_EINVAL);
}

TEST_CASE("orientation flip of the four-rotor code via the boundary") {
  const char* req =
      R"({"code": {"n": 4, "hx": [[1,-1,0,0],[0,0,-1,1],[-1,-1,1,1]], "hz": [[1,1,1,1]]}})";
  Out out;
  REQUIRE(rk_to_np_json(req, &out.data) == RK_OK);
  Json j = out.json();
  CHECK(j["signs"] == Json::array({1, -1, -1, 1}));
  CHECK(j["flipped_code"]["hz"][0] == Json::array({1, -1, -1, 1}));
}

TEST_CASE("state handles build, evolve and measure") {
  rk_state* s = nullptr;
  REQUIRE(rk_state_comb(3, 0, 30, 0.05, &s) == RK_OK);
  double n2 = 0;
  CHECK(rk_state_norm2(s, &n2) == RK_OK);
  CHECK(std::abs(n2 - 1.0) < 1e-12);

  CHECK(rk_state_apply(s, "z", 0, 0, 0.4) == RK_OK);
  CHECK(rk_state_apply(s, "x", 1, 0, 0.0) == RK_OK);
  CHECK(rk_state_apply(s, "nonsense", 0, 0, 0.0) == RK_EINVAL);

  double theta = 0.0;
  double re = 0, im = 0;
  CHECK(rk_state_phase_amplitude(s, &theta, 1, &re, &im) == RK_OK);
  CHECK(std::abs(re) + std::abs(im) > 0.0);
  rk_state_free(s);

  rk_state* bad = nullptr;
  CHECK(rk_state_comb(0, 0, 30, 0.05, &bad) == RK_EINVAL);
  CHECK(bad == nullptr);
}

TEST_CASE("wigner CSV carries the documented header") {
  Out out;
  REQUIRE(rk_wigner_csv(R"({"n_spacing": 2, "delta": 0.1, "cutoff": 20, "grid": 64, "lmax": 2})",
                        &out.data) == RK_OK);
  std::string csv = out.json()["csv"].get<std::string>();
  CHECK(csv.rfind("phi,l,w\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 64 * 9);
}

TEST_CASE("group suite and sampling run deterministically over the boundary") {
  Out a, b;
  const char* vreq = R"({"max_rotors": 2, "words": 40, "seed": 5})";
  REQUIRE(rk_verify_group_json(vreq, &a.data) == RK_OK);
  CHECK(a.json()["ok"] == true);

  const char* mreq = R"({"m": 4, "sigma_z": 0.02, "sigma_x": 0.1, "shots": 5000, "seed": 9})";
  REQUIRE(rk_gkp_rep_json(mreq, &b.data) == RK_OK);
  Out c;
  REQUIRE(rk_gkp_rep_json(mreq, &c.data) == RK_OK);
  CHECK(std::string(b.data) == std::string(c.data));
  CHECK(b.json().contains("var_ratio"));
}

TEST_CASE("coherent handle rejects the forbidden origin") {
  rk_state* s = nullptr;
  CHECK(rk_state_coherent(0.0, 0.0, 0.0, 20, &s) == RK_EINVAL);
  CHECK(s == nullptr);
  REQUIRE(rk_state_coherent(1.0, 0.0, 0.0, 20, &s) == RK_OK);
  rk_state_free(s);
}
