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

#include "rotorkit/json_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <limits>

namespace rotorkit {

namespace {

const Int kInt64Max(std::numeric_limits<std::int64_t>::max());
const Int kInt64Min(std::numeric_limits<std::int64_t>::min());

std::size_t index_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    throw_invalid(std::string("expected non-negative index field '") + key + "'");
  return j[key].get<std::size_t>();
}

}  // namespace

Json int_to_json(const Int& v) {
  if (v >= kInt64Min && v <= kInt64Max) return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_string()) return parse_int(j.get<std::string>());
  throw_invalid("expected an integer (number or decimal string)");
}

Json angle_to_json(const ExactAngle& a) {
  return Json{{"num", int_to_json(boost::multiprecision::numerator(a.turns()))},
              {"den", int_to_json(boost::multiprecision::denominator(a.turns()))}};
}

ExactAngle angle_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw_invalid("angle needs {\"num\", \"den\"} in turns");
  return ExactAngle::from_fraction(int_from_json(j["num"]), int_from_json(j["den"]));
}

Json matrix_to_json(const IntMat& m, bool as_strings) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(as_strings ? Json(m.at(i, j).str()) : int_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMat matrix_from_json(const Json& j) {
  if (!j.is_array()) throw_invalid("matrix must be an array of arrays");
  std::vector<IntVec> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw_invalid("matrix must be an array of arrays");
    IntVec r;
    for (const auto& v : row) r.push_back(int_from_json(v));
    rows.push_back(std::move(r));
  }
  if (rows.empty()) return IntMat(0, 0);
  return IntMat::from_rows(rows);
}

Json pauli_to_json(const PauliVector& p) {
  Json m = Json::array();
  for (const auto& v : p.m) m.push_back(int_to_json(v));
  Json phi = Json::array();
  for (const auto& a : p.phi) phi.push_back(angle_to_json(a));
  return Json{{"n", p.n}, {"m", std::move(m)}, {"phi", std::move(phi)},
              {"phase", angle_to_json(p.phase)}};
}

PauliVector pauli_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n")) throw_invalid("pauli needs fields n, m, phi");
  PauliVector p = PauliVector::identity(j["n"].get<std::size_t>());
  if (j.contains("m")) {
    std::size_t i = 0;
    for (const auto& v : j["m"]) {
      if (i >= p.n) throw_invalid("pauli: m longer than n");
      p.m[i++] = int_from_json(v);
    }
  }
  if (j.contains("phi")) {
    std::size_t i = 0;
    for (const auto& v : j["phi"]) {
      if (i >= p.n) throw_invalid("pauli: phi longer than n");
      p.phi[i++] = angle_from_json(v);
    }
  }
  if (j.contains("phase")) p.phase = angle_from_json(j["phase"]);
  return p;
}

Json atom_to_json(const GeneratorAtom& a) {
  Json out;
  switch (a.gate) {
    case Gate::cnot:
      out = Json{{"gate", "cnot"}, {"from", a.a}, {"to", a.b}};
      break;
    case Gate::cnot_dag:
      out = Json{{"gate", "cnot_dag"}, {"from", a.a}, {"to", a.b}};
      break;
    case Gate::p:
      out = Json{{"gate", "p"}, {"rotor", a.a}};
      break;
    case Gate::swap:
      out = Json{{"gate", "swap"}, {"i", a.a}, {"j", a.b}};
      break;
    case Gate::quad:
      out = Json{{"gate", "quad"}, {"rotor", a.a}, {"phi", angle_to_json(a.phi)}};
      break;
    case Gate::cphs:
      out = Json{{"gate", "cphs"}, {"i", a.a}, {"j", a.b}, {"phi", angle_to_json(a.phi)}};
      break;
  }
  if (a.count != 1) out["count"] = a.count;
  return out;
}

GeneratorAtom atom_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("gate")) throw_invalid("atom needs a 'gate' field");
  const std::string g = j["gate"].get<std::string>();
  GeneratorAtom a{Gate::cnot, 0, 0, ExactAngle(), 1};
  if (g == "cnot" || g == "cnot_dag") {
    a.gate = g == "cnot" ? Gate::cnot : Gate::cnot_dag;
    a.a = index_field(j, "from");
    a.b = index_field(j, "to");
  } else if (g == "p") {
    a.gate = Gate::p;
    a.a = a.b = index_field(j, "rotor");
  } else if (g == "swap") {
    a.gate = Gate::swap;
    a.a = index_field(j, "i");
    a.b = index_field(j, "j");
  } else if (g == "quad") {
    a.gate = Gate::quad;
    a.a = a.b = index_field(j, "rotor");
    a.phi = angle_from_json(j.at("phi"));
  } else if (g == "cphs") {
    a.gate = Gate::cphs;
    a.a = index_field(j, "i");
    a.b = index_field(j, "j");
    a.phi = angle_from_json(j.at("phi"));
  } else {
    throw_invalid("unknown gate '" + g + "'");
  }
  if (j.contains("count")) {
    a.count = j["count"].get<std::int64_t>();
    if (a.count < 1) throw_invalid("atom count must be >= 1");
  }
  return a;
}

Json word_to_json(const GeneratorWord& w) {
  Json out = Json::array();
  for (const auto& a : w) out.push_back(atom_to_json(a));
  return out;
}

GeneratorWord word_from_json(const Json& j) {
  if (!j.is_array()) throw_invalid("word must be an array of atoms");
  GeneratorWord w;
  for (const auto& a : j) w.push_back(atom_from_json(a));
  return w;
}

Json code_to_json(const HomologicalRotorCode& c) {
  return Json{{"n", c.n}, {"hx", matrix_to_json(c.hx)}, {"hz", matrix_to_json(c.hz)}};
}

HomologicalRotorCode code_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n")) throw_invalid("code needs fields n, hx, hz");
  HomologicalRotorCode c;
  c.n = j["n"].get<std::size_t>();
  c.hx = j.contains("hx") ? matrix_from_json(j["hx"]) : IntMat(0, c.n);
  c.hz = j.contains("hz") ? matrix_from_json(j["hz"]) : IntMat(0, c.n);
  if (c.hx.rows() == 0) c.hx = IntMat(0, c.n);
  if (c.hz.rows() == 0) c.hz = IntMat(0, c.n);
  if (c.hx.cols() != c.n || c.hz.cols() != c.n)
    throw_invalid("code: check-matrix width must equal n");
  return c;
}

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace rotorkit
