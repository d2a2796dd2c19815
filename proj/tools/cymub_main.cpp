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

// Command-line front end: generate, verify, classify, synth, search, export.
// Exit codes: 0 success, 1 validation failure, 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cymub/cymub.hpp"

namespace {

using cymub::json;

constexpr int kOk = 0;
constexpr int kValidationFailure = 1;
constexpr int kUsageError = 2;

/// Input errors (bad paths, malformed JSON, unknown fixtures).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw UsageError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

struct CommonOpts {
  std::string fixture;
  std::string input;
  std::string output;
  std::string format = "json";
  double tol = cymub::kUnbiasedTol;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_tol = true) {
  cmd->add_option("--fixture", o.fixture, "bundled fixture name");
  cmd->add_option("--input", o.input, "input JSON file");
  cmd->add_option("--output", o.output, "output file (default stdout)");
  cmd->add_option("--format", o.format, "output format: json or table");
  if (with_tol) cmd->add_option("--tol", o.tol, "numeric tolerance");
}

cymub::SetType parse_kind(const std::string& kind) {
  if (kind == "field") return cymub::SetType::Field;
  if (kind == "group") return cymub::SetType::Group;
  if (kind == "semigroup") return cymub::SetType::Semigroup;
  throw UsageError("unknown kind '" + kind +
                   "' (expected field, group, or semigroup)");
}

/// Resolve a generator from fixture name or input JSON (triple, generator,
/// or full set forms are accepted).
cymub::CyclicGenerator resolve_generator(const CommonOpts& o) {
  if (!o.fixture.empty() && !o.input.empty()) {
    throw UsageError("give either --fixture or --input, not both");
  }
  if (!o.fixture.empty()) {
    try {
      return cymub::get_fixture(o.fixture).generator();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (o.input.empty()) throw UsageError("need --fixture or --input");
  json j = load_json_file(o.input);
  try {
    if (j.contains("classes")) {
      // full set: re-derive classes and cross-check the stored elements
      return cymub::mub_set_from_json(j).generator;
    }
    if (j.contains("generator")) return cymub::generator_from_json(j.at("generator"));
    if (j.contains("B")) {
      return cymub::make_generator(cymub::triple_from_json(j));
    }
    if (j.contains("C")) return cymub::generator_from_json(j);
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad input JSON: ") + e.what());
  }
  throw UsageError("input JSON is neither a triple, a generator, nor a set");
}

struct BuiltSet {
  cymub::CyclicMubSet set;
  cymub::PartitionReport partition;
  std::optional<cymub::TripleReport> triple_report;
  bool structure_ok = false;
  std::string structure_error;
};

BuiltSet build_and_validate(const cymub::CyclicGenerator& gen) {
  BuiltSet b{cymub::build_classes(gen), {}, std::nullopt};
  if (gen.triple) b.triple_report = cymub::validate_triple(*gen.triple);
  b.partition = cymub::validate_mub_partition(b.set);
  if (b.partition.valid()) {
    try {
      cymub::fill_structure(b.set);
      b.structure_ok = true;
    } catch (const std::exception& e) {
      b.structure_error = e.what();
    }
  }
  return b;
}

json built_set_json(const BuiltSet& b) {
  json out = cymub::mub_set_to_json(b.set);
  out["valid"] = b.partition.valid();
  out["partition_validation"] = cymub::validation_to_json(b.partition);
  if (b.triple_report) {
    out["triple_validation"] = cymub::validation_to_json(*b.triple_report);
  }
  if (!b.structure_error.empty()) out["structure_error"] = b.structure_error;
  return out;
}

std::string table_of_set(const BuiltSet& b) {
  std::ostringstream os;
  const auto& s = b.set;
  os << "n = " << s.qubits() << ", d = " << s.dimension() << ", type "
     << cymub::set_type_name(s.set_type) << "\n";
  if (b.triple_report) os << "triple conditions:\n" << b.triple_report->summary();
  os << "partition checks:\n" << b.partition.summary();
  for (std::size_t i = 0; i < s.classes.size(); ++i) {
    os << "class " << i << ":";
    for (const auto& e : s.classes[i].elements) {
      os << " " << cymub::to_label(cymub::zx_from_vector(e));
    }
    if (i < s.partitions.size()) os << "   [" << s.partitions[i].to_string() << "]";
    os << "\n";
  }
  if (s.structure) os << "structure vector: " << s.structure->to_string() << "\n";
  return os.str();
}

int cmd_generate(const CommonOpts& o, bool do_search, int n,
                 const std::string& kind, int limit, std::uint64_t seed) {
  cymub::CyclicGenerator gen = [&] {
    if (do_search) {
      cymub::SearchQuery q{n, parse_kind(kind), std::max(limit, 1), seed};
      auto triples = cymub::find_triples(q);
      if (triples.empty()) throw UsageError("search found no valid triple");
      return cymub::make_generator(triples.front());
    }
    return resolve_generator(o);
  }();
  BuiltSet b = build_and_validate(gen);
  if (o.format == "table") {
    write_output(o.output, table_of_set(b));
  } else {
    write_output(o.output, built_set_json(b).dump(2) + "\n");
  }
  if (!b.partition.valid()) {
    std::cerr << "set is not a complete MUB family:\n" << b.partition.summary();
    return kValidationFailure;
  }
  return kOk;
}

int cmd_verify(const CommonOpts& o) {
  cymub::CyclicGenerator gen = resolve_generator(o);
  BuiltSet b = build_and_validate(gen);
  json out;
  out["partition_validation"] = cymub::validation_to_json(b.partition);
  bool ok = b.partition.valid();
  if (b.set.qubits() <= 8) {
    try {
      cymub::MubUnitaries uw = cymub::mub_unitaries(b.set);
      auto unb = cymub::verify_unbiased(uw.u, uw.w, b.set.dimension(), o.tol);
      auto cyc = cymub::verify_cyclic_report(uw.u, b.set.dimension(), o.tol);
      out["unbiasedness"] = cymub::check_to_json(unb);
      out["cyclicity"] = cymub::check_to_json(cyc);
      ok = ok && unb.passed && cyc.passed;
    } catch (const cymub::NotSymplecticError& e) {
      out["numeric_check_error"] = e.what();
      ok = false;
    }
  } else {
    out["numeric_checks"] = "skipped (n > 8)";
  }
  out["passed"] = ok;
  if (o.format == "table") {
    std::ostringstream os;
    os << b.partition.summary();
    if (out.contains("unbiasedness")) {
      os << (out["unbiasedness"]["passed"].get<bool>() ? "[ok]   " : "[FAIL] ")
         << "unbiasedness, worst deviation "
         << out["unbiasedness"]["worst_deviation"].get<double>() << "\n";
      os << (out["cyclicity"]["passed"].get<bool>() ? "[ok]   " : "[FAIL] ")
         << "cyclicity\n";
    }
    if (out.contains("numeric_check_error")) {
      os << "[FAIL] numeric checks: " << out["numeric_check_error"].get<std::string>() << "\n";
    }
    os << (ok ? "PASS" : "FAIL") << "\n";
    write_output(o.output, os.str());
  } else {
    write_output(o.output, out.dump(2) + "\n");
  }
  return ok ? kOk : kValidationFailure;
}

int cmd_classify(const CommonOpts& o) {
  cymub::CyclicGenerator gen = resolve_generator(o);
  BuiltSet b = build_and_validate(gen);
  if (!b.partition.valid()) {
    std::cerr << "set is not a complete MUB family; no structure vector:\n"
              << b.partition.summary();
    return kValidationFailure;
  }
  if (!b.structure_ok) {
    std::cerr << b.structure_error << "\n";
    return kValidationFailure;
  }
  json out;
  out["set_type"] = cymub::set_type_name(b.set.set_type);
  out["structure_vector"] = b.set.structure->counts;
  json shapes = json::array();
  for (const auto& sh : cymub::all_shapes(b.set.qubits())) shapes.push_back(sh);
  out["shape_order"] = shapes;
  json parts = json::array();
  for (const auto& p : b.set.partitions) parts.push_back(p.to_string());
  out["partitions"] = parts;
  if (o.format == "table") {
    std::ostringstream os;
    os << "set type: " << out["set_type"].get<std::string>() << "\n";
    for (std::size_t i = 0; i < b.set.partitions.size(); ++i) {
      os << "class " << i << ": " << b.set.partitions[i].to_string() << "\n";
    }
    os << "structure vector: " << b.set.structure->to_string() << "\n";
    write_output(o.output, os.str());
  } else {
    write_output(o.output, out.dump(2) + "\n");
  }
  return kOk;
}

int cmd_synth(const CommonOpts& o, bool check, bool hcz, bool seed_circuit) {
  // accept raw symplectic matrices too
  cymub::Gf2Matrix c{1, 1};
  cymub::Gf2Matrix g0x{1, 1};
  if (!o.input.empty()) {
    json j = load_json_file(o.input);
    if (j.contains("rows") && j.contains("data")) {
      c = cymub::matrix_from_json(j);
      g0x = cymub::Gf2Matrix::zero(c.rows() / 2, c.rows() / 2);
    } else {
      cymub::CyclicGenerator gen = resolve_generator(o);
      c = gen.C;
      g0x = gen.seed_x_part();
    }
  } else {
    cymub::CyclicGenerator gen = resolve_generator(o);
    c = gen.C;
    g0x = gen.seed_x_part();
  }
  const cymub::Gf2Matrix target =
      seed_circuit ? cymub::seed_offset_symplectic(g0x) : c;
  cymub::Circuit circuit = cymub::synthesize(target);
  if (hcz) circuit = cymub::rewrite_cnots_to_hcz(circuit);
  if (check) {
    if (!(cymub::circuit_symplectic(circuit) == target)) {
      std::cerr << "round-trip check failed\n";
      return kValidationFailure;
    }
    if (circuit.n <= 5) {
      const cymub::CMatrix u = cymub::circuit_unitary(circuit);
      if (!u.is_unitary(cymub::kUnitaryTol)) {
        std::cerr << "unitarity check failed\n";
        return kValidationFailure;
      }
    }
    std::cerr << "checks passed\n";
  }
  write_output(o.output, cymub::export_circuit(circuit, o.format));
  return kOk;
}

int cmd_search(const CommonOpts& o, int n, const std::string& kind, int limit,
               std::uint64_t seed, int budget_ms) {
  cymub::SearchQuery q{n, parse_kind(kind), limit, seed};
  if (budget_ms > 0) q.budget = std::chrono::milliseconds(budget_ms);
  auto triples = cymub::find_triples(q);
  json out;
  out["n"] = n;
  out["kind"] = kind;
  out["outcome"] = triples.empty() ? "none found" : "ok";
  json list = json::array();
  for (const auto& t : triples) list.push_back(cymub::triple_to_json(t));
  out["triples"] = list;
  write_output(o.output, out.dump(2) + "\n");
  return kOk;
}

int cmd_export(const CommonOpts& o, const std::string& name) {
  namespace fs = std::filesystem;
  const std::string dir = o.output.empty() ? "." : o.output;
  std::error_code ec;
  fs::create_directories(dir, ec);
  auto write_fixture = [&](const cymub::Fixture& f) {
    json j;
    j["name"] = f.name;
    j["note"] = f.note;
    if (f.triple) {
      j.update(cymub::triple_to_json(*f.triple));
      if (!f.g0x.is_zero()) j["G0x"] = cymub::matrix_to_json(f.g0x);
    } else {
      j["C"] = cymub::matrix_to_json(*f.explicit_c);
      j["G0x"] = cymub::matrix_to_json(f.g0x);
      j["n"] = f.n;
    }
    const std::string path = dir + "/" + f.name + ".json";
    write_output(path, j.dump(2) + "\n");
    std::cout << path << "\n";
  };
  if (name == "all") {
    for (const auto& f : cymub::all_fixtures()) write_fixture(f);
  } else {
    try {
      write_fixture(cymub::get_fixture(name));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cyclic mutually unbiased bases toolkit"};
  app.require_subcommand(1);

  CommonOpts gen_o, ver_o, cls_o, syn_o, sea_o, exp_o;
  bool gen_search = false;
  int gen_n = 2, sea_n = 2;
  std::string gen_kind = "field", sea_kind = "field";
  int gen_limit = 1, sea_limit = 1, sea_budget = 0;
  std::uint64_t gen_seed = 1, sea_seed = 1;
  bool syn_check = false, syn_hcz = false, syn_seed_circuit = false;
  std::string exp_name = "all";

  auto* g = app.add_subcommand("generate", "build a MUB set and emit it");
  add_common(g, gen_o);
  g->add_flag("--search", gen_search, "pick the triple by search");
  g->add_option("--n", gen_n, "qubit count for --search");
  g->add_option("--kind", gen_kind, "set kind for --search");
  g->add_option("--limit", gen_limit, "search candidate limit");
  g->add_option("--seed", gen_seed, "search seed");

  auto* v = app.add_subcommand("verify", "validate a set and check Eq-level "
                                         "unbiasedness numerically");
  add_common(v, ver_o);

  auto* c = app.add_subcommand("classify", "entanglement structure of a set");
  add_common(c, cls_o);

  auto* s = app.add_subcommand("synth", "compile a generator into a circuit");
  add_common(s, syn_o, false);
  s->get_option("--format")->description("qasm or json");
  syn_o.format = "qasm";
  s->add_flag("--check", syn_check, "run round-trip checks first");
  s->add_flag("--hcz", syn_hcz, "rewrite CNOTs into H/CZ form");
  s->add_flag("--seed-circuit", syn_seed_circuit,
              "emit the seed offset circuit instead of the generator");

  auto* se = app.add_subcommand("search", "find valid generator triples");
  add_common(se, sea_o, false);
  se->add_option("--n", sea_n, "qubit count")->required();
  se->add_option("--kind", sea_kind, "field, group, or semigroup")->required();
  se->add_option("--limit", sea_limit, "max triples to return");
  se->add_option("--seed", sea_seed, "seed for heuristic mode");
  se->add_option("--budget-ms", sea_budget, "time budget in milliseconds");

  auto* e = app.add_subcommand("export", "write fixture JSON files");
  e->add_option("--fixture", exp_name, "fixture name or 'all'");
  e->add_option("--output", exp_o.output, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (g->parsed()) {
      return cmd_generate(gen_o, gen_search, gen_n, gen_kind, gen_limit,
                          gen_seed);
    }
    if (v->parsed()) return cmd_verify(ver_o);
    if (c->parsed()) return cmd_classify(cls_o);
    if (s->parsed()) return cmd_synth(syn_o, syn_check, syn_hcz, syn_seed_circuit);
    if (se->parsed()) {
      return cmd_search(sea_o, sea_n, sea_kind, sea_limit, sea_seed, sea_budget);
    }
    if (e->parsed()) return cmd_export(exp_o, exp_name);
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsageError;
  } catch (const cymub::NotSymplecticError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kValidationFailure;
  } catch (const cymub::InvalidTripleError& err) {
    std::cerr << "error: " << err.what() << "\n" << err.report.summary();
    return kValidationFailure;
  } catch (const cymub::InvalidGeneratorError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kValidationFailure;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kValidationFailure;
  }
  return kUsageError;
}
