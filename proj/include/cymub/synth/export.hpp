// Copyright 2026 The cymub Authors
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

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cymub/synth/circuit.hpp"

namespace cymub {

/// QASM 2.0 listing: header, one register, then one line per gate in order.
inline std::string circuit_to_qasm(const Circuit& c) {
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" +
                    std::to_string(c.n) + "];\n";
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::H:
        out += "h q[" + std::to_string(g.a) + "];\n";
        break;
      case GateKind::S:
        out += "s q[" + std::to_string(g.a) + "];\n";
        break;
      case GateKind::CZ:
        out += "cz q[" + std::to_string(g.a) + "],q[" + std::to_string(g.b) +
               "];\n";
        break;
      case GateKind::CNOT:
        out += "cx q[" + std::to_string(g.a) + "],q[" + std::to_string(g.b) +
               "];\n";
        break;
    }
  }
  return out;
}

inline nlohmann::json circuit_to_json(const Circuit& c) {
  nlohmann::json gates = nlohmann::json::array();
  for (const Gate& g : c.gates) {
    nlohmann::json jg;
    jg["kind"] = gate_kind_name(g.kind);
    jg["qubits"] = g.two_qubit() ? nlohmann::json::array({g.a, g.b})
                                 : nlohmann::json::array({g.a});
    gates.push_back(jg);
  }
  return nlohmann::json{{"n", c.n}, {"gates", gates}};
}

inline Circuit circuit_from_json(const nlohmann::json& j) {
  Circuit c;
  c.n = j.at("n").get<int>();
  for (const auto& jg : j.at("gates")) {
    const std::string kind = jg.at("kind").get<std::string>();
    const auto& q = jg.at("qubits");
    if (kind == "H") {
      c.gates.push_back(Gate::h(q.at(0).get<int>()));
    } else if (kind == "S") {
      c.gates.push_back(Gate::s(q.at(0).get<int>()));
    } else if (kind == "CZ") {
      c.gates.push_back(Gate::cz(q.at(0).get<int>(), q.at(1).get<int>()));
    } else if (kind == "CNOT") {
      c.gates.push_back(Gate::cnot(q.at(0).get<int>(), q.at(1).get<int>()));
    } else {
      throw std::invalid_argument("unknown gate kind: " + kind);
    }
    check_gate(c.gates.back(), c.n);
  }
  return c;
}

/// Text export in the named format ("qasm" or "json").
inline std::string export_circuit(const Circuit& c, const std::string& format) {
  if (format == "qasm") return circuit_to_qasm(c);
  if (format == "json") return circuit_to_json(c).dump(2) + "\n";
  throw std::invalid_argument("unknown circuit format: " + format);
}

}  // namespace cymub
