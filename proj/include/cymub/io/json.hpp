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

#include "cymub/ent/structure.hpp"
#include "cymub/gf2/matrix.hpp"
#include "cymub/gf2/poly.hpp"
#include "cymub/mub/classes.hpp"
#include "cymub/mub/generator.hpp"
#include "cymub/mub/triple.hpp"
#include "cymub/pauli/pauli.hpp"
#include "cymub/sim/checks.hpp"

namespace cymub {

using json = nlohmann::json;

// Matrix wire form: {"rows": r, "cols": c, "data": [[0,1,...], ...]},
// row-major bit arrays. Polynomials: {"coeffs": [c0, c1, ...]} ascending.

inline json matrix_to_json(const Gf2Matrix& m) {
  json data = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.get(i, j));
    data.push_back(row);
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

inline Gf2Matrix matrix_from_json(const json& j) {
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  Gf2Matrix m(rows, cols);
  const auto& data = j.at("data");
  if (int(data.size()) != rows) {
    throw std::invalid_argument("matrix data has wrong row count");
  }
  for (int i = 0; i < rows; ++i) {
    if (int(data[i].size()) != cols) {
      throw std::invalid_argument("matrix data has wrong column count");
    }
    for (int jj = 0; jj < cols; ++jj) m.set(i, jj, data[i][jj].get<int>());
  }
  return m;
}

inline json poly_to_json(const Gf2Poly& p) {
  json coeffs = json::array();
  for (int c : p.coeff_list()) coeffs.push_back(c);
  return json{{"coeffs", coeffs}};
}

inline Gf2Poly poly_from_json(const json& j) {
  std::vector<int> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(c.get<int>());
  return Gf2Poly::from_coeffs(coeffs);
}

inline json triple_to_json(const GeneratorTriple& t) {
  return json{{"n", t.n},
              {"B", matrix_to_json(t.B)},
              {"R", matrix_to_json(t.R)},
              {"A", matrix_to_json(t.A)}};
}

inline GeneratorTriple triple_from_json(const json& j) {
  return GeneratorTriple(matrix_from_json(j.at("B")),
                         matrix_from_json(j.at("R")),
                         matrix_from_json(j.at("A")));
}

inline json generator_to_json(const CyclicGenerator& g) {
  json out{{"n", g.n},
           {"C", matrix_to_json(g.C)},
           {"G0x", matrix_to_json(g.seed_x_part())},
           {"source", g.source == CyclicGenerator::Source::FromTriple
                          ? "triple"
                          : "explicit"}};
  if (g.triple) out["triple"] = triple_to_json(*g.triple);
  return out;
}

inline CyclicGenerator generator_from_json(const json& j) {
  const Gf2Matrix c = matrix_from_json(j.at("C"));
  const int n = c.rows() / 2;
  Gf2Matrix g0x = j.contains("G0x") ? matrix_from_json(j.at("G0x"))
                                    : Gf2Matrix::zero(n, n);
  if (j.contains("triple")) {
    GeneratorTriple t = triple_from_json(j.at("triple"));
    CyclicGenerator g = make_generator(t, g0x);
    if (!(g.C == c)) {
      throw std::invalid_argument(
          "generator JSON: C does not match the triple");
    }
    return g;
  }
  return make_explicit_generator(c, g0x);
}

inline json validation_to_json(const TripleReport& rep) {
  json entries = json::array();
  for (const auto& e : rep.entries) {
    entries.push_back(json{{"condition", e.condition},
                           {"passed", e.passed},
                           {"detail", e.detail}});
  }
  return json{{"entries", entries}, {"valid", rep.valid()}};
}

inline json validation_to_json(const PartitionReport& rep) {
  json entries = json::array();
  for (const auto& e : rep.entries) {
    entries.push_back(json{{"condition", e.condition},
                           {"passed", e.passed},
                           {"detail", e.detail}});
  }
  return json{{"entries", entries}, {"valid", rep.valid()}};
}

inline json check_to_json(const CheckReport& rep) {
  return json{{"check", rep.check},
              {"passed", rep.passed},
              {"worst_deviation", rep.worst_deviation},
              {"witness", rep.witness}};
}

/// Full set serialization: generator, per-class elements in Pauli string
/// form, type, and (when computed) partitions and the structure vector.
inline json mub_set_to_json(const CyclicMubSet& s) {
  json classes = json::array();
  for (std::size_t i = 0; i < s.classes.size(); ++i) {
    const MubClass& c = s.classes[i];
    json elements = json::array();
    for (const auto& e : c.elements) {
      elements.push_back(to_label(zx_from_vector(e)));
    }
    json jc{{"j", c.j},
            {"generator", matrix_to_json(c.Gj)},
            {"elements", elements}};
    if (i < s.partitions.size()) jc["partition"] = s.partitions[i].to_string();
    classes.push_back(jc);
  }
  json out{{"n", s.qubits()},
           {"d", s.dimension()},
           {"set_type", set_type_name(s.set_type)},
           {"generator", generator_to_json(s.generator)},
           {"classes", classes}};
  if (s.structure) {
    out["structure_vector"] = s.structure->counts;
    json shapes = json::array();
    for (const auto& sh : all_shapes(s.qubits())) shapes.push_back(sh);
    out["shape_order"] = shapes;
  }
  return out;
}

/// Rebuild a set from its generator block; class payloads are re-derived and
/// cross-checked against the stored elements when present.
inline CyclicMubSet mub_set_from_json(const json& j) {
  CyclicGenerator g = generator_from_json(j.at("generator"));
  CyclicMubSet s = build_classes(g);
  if (j.contains("classes")) {
    const auto& classes = j.at("classes");
    if (classes.size() != s.classes.size()) {
      throw std::invalid_argument("set JSON: wrong class count");
    }
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const auto& el = classes[i].at("elements");
      if (el.size() != s.classes[i].elements.size()) {
        throw std::invalid_argument("set JSON: wrong class size");
      }
      for (std::size_t k = 0; k < el.size(); ++k) {
        PauliOp want = parse_label(el[k].get<std::string>());
        PauliOp have = zx_from_vector(s.classes[i].elements[k]);
        if (!(want == have)) {
          throw std::invalid_argument(
              "set JSON: stored class elements disagree with the generator");
        }
      }
    }
  }
  return s;
}

}  // namespace cymub
