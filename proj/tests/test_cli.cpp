// End-to-end tests of the command line tool. The binary path arrives via the
// CYMUB_CLI environment variable set by CTest.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "gtest/gtest.h"

namespace {

using nlohmann::json;

struct RunResult {
  int exit_code;
  std::string out;
};

std::string cli_path() {
  const char* p = std::getenv("CYMUB_CLI");
  if (!p) throw std::runtime_error("CYMUB_CLI not set");
  return p;
}

RunResult run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd =
      cli_path() + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  std::array<char, 4096> buf;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) {
    out.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string temp_path(const std::string& name) {
  return std::string(::testing::TempDir()) + "/" + name;
}

TEST(Cli, GenerateField3) {
  RunResult r = run("generate --fixture field3");
  EXPECT_EQ(r.exit_code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["set_type"], "field");
  EXPECT_EQ(j["structure_vector"], (json::array({3, 0, 6})));
  EXPECT_TRUE(j["valid"].get<bool>());
}

TEST(Cli, GenerateOffset3) {
  RunResult r = run("generate --fixture offset3");
  EXPECT_EQ(r.exit_code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["structure_vector"], (json::array({0, 9, 0})));
}

TEST(Cli, GenerateBySearch) {
  RunResult r = run("generate --search --n 2 --kind field");
  EXPECT_EQ(r.exit_code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["d"], 4);
  EXPECT_EQ(j["classes"].size(), 5u);
  EXPECT_TRUE(j["valid"].get<bool>());
}

TEST(Cli, GenerateSemigroup3FailsHonestly) {
  RunResult r = run("generate --fixture semigroup3");
  EXPECT_EQ(r.exit_code, 1);
  const json j = json::parse(r.out);
  EXPECT_FALSE(j["valid"].get<bool>());
  EXPECT_FALSE(j["triple_validation"]["valid"].get<bool>());
}

TEST(Cli, GenerateIdempotentOutputs) {
  const std::string p1 = temp_path("gen1.json");
  const std::string p2 = temp_path("gen2.json");
  EXPECT_EQ(run("generate --fixture group3 --output " + p1).exit_code, 0);
  EXPECT_EQ(run("generate --fixture group3 --output " + p2).exit_code, 0);
  std::ifstream f1(p1), f2(p2);
  std::string s1((std::istreambuf_iterator<char>(f1)),
                 std::istreambuf_iterator<char>());
  std::string s2((std::istreambuf_iterator<char>(f2)),
                 std::istreambuf_iterator<char>());
  EXPECT_FALSE(s1.empty());
  EXPECT_EQ(s1, s2);
}

TEST(Cli, VerifyGroup3PassesNumerically) {
  RunResult r = run("verify --fixture group3");
  EXPECT_EQ(r.exit_code, 0);
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_LT(j["unbiasedness"]["worst_deviation"].get<double>(), 1e-9);
  EXPECT_TRUE(j["cyclicity"]["passed"].get<bool>());
}

TEST(Cli, VerifySemigroup3Fails) {
  RunResult r = run("verify --fixture semigroup3");
  EXPECT_EQ(r.exit_code, 1);
  const json j = json::parse(r.out);
  EXPECT_FALSE(j["passed"].get<bool>());
}

TEST(Cli, VerifyTamperedSetFails) {
  // generate a set, flip one class element, verify must fail with exit 1
  const std::string path = temp_path("tampered.json");
  EXPECT_EQ(run("generate --fixture field3 --output " + path).exit_code, 0);
  json j;
  {
    std::ifstream in(path);
    in >> j;
  }
  std::string label = j["classes"][2]["elements"][1];
  label[0] = label[0] == 'Z' ? 'X' : 'Z';
  j["classes"][2]["elements"][1] = label;
  {
    std::ofstream out(path);
    out << j.dump(2);
  }
  RunResult r = run("verify --input " + path, true);
  EXPECT_NE(r.exit_code, 0);
}

TEST(Cli, ClassifyFixtures) {
  RunResult r = run("classify --fixture group3");
  EXPECT_EQ(r.exit_code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["structure_vector"], (json::array({2, 3, 4})));
  EXPECT_EQ(j["partitions"][0], "1|2|3");

  r = run("classify --fixture semigroup3fix");
  EXPECT_EQ(r.exit_code, 0);
  j = json::parse(r.out);
  EXPECT_EQ(j["structure_vector"], (json::array({1, 6, 2})));
}

TEST(Cli, SynthField3QasmHasSevenGateLines) {
  RunResult r = run("synth --fixture field3 --format qasm");
  EXPECT_EQ(r.exit_code, 0);
  int gate_lines = 0;
  std::istringstream is(r.out);
  std::string line;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (line.rfind("OPENQASM", 0) == 0) header_seen = true;
    if (line.rfind("h q[", 0) == 0 || line.rfind("s q[", 0) == 0 ||
        line.rfind("cz q[", 0) == 0 || line.rfind("cx q[", 0) == 0) {
      ++gate_lines;
    }
  }
  EXPECT_TRUE(header_seen);
  EXPECT_EQ(gate_lines, 7);
}

TEST(Cli, SynthOffsetWithCheckAndJson) {
  RunResult r = run("synth --fixture offset3 --check --format json");
  EXPECT_EQ(r.exit_code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["n"], 3);
  EXPECT_GT(j["gates"].size(), 0u);
}

TEST(Cli, SynthHczLeavesNoCnot) {
  RunResult r = run("synth --fixture group3 --hcz --format json");
  EXPECT_EQ(r.exit_code, 0);
  for (const auto& g : json::parse(r.out)["gates"]) {
    EXPECT_NE(g["kind"], "CNOT");
  }
}

TEST(Cli, SynthNonSymplecticInputFails) {
  const std::string path = temp_path("bad_C.json");
  {
    // identity with one extra 1: not symplectic
    json m;
    m["rows"] = 6;
    m["cols"] = 6;
    json data = json::array();
    for (int i = 0; i < 6; ++i) {
      json row = json::array();
      for (int k = 0; k < 6; ++k) row.push_back(i == k ? 1 : 0);
      data.push_back(row);
    }
    data[0][1] = 1;
    m["data"] = data;
    std::ofstream out(path);
    out << m.dump();
  }
  RunResult r = run("synth --input " + path, true);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("C^T J C"), std::string::npos);
}

TEST(Cli, SearchJsonShape) {
  RunResult r = run("search --n 3 --kind group --limit 2");
  EXPECT_EQ(r.exit_code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["outcome"], "ok");
  EXPECT_EQ(j["triples"].size(), 2u);
  EXPECT_EQ(j["triples"][0]["n"], 3);
}

TEST(Cli, SearchNoneFound) {
  RunResult r = run("search --n 2 --kind semigroup --limit 2");
  EXPECT_EQ(r.exit_code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["outcome"], "none found");
  EXPECT_TRUE(j["triples"].empty());
}

TEST(Cli, ExportWritesFixtureFiles) {
  const std::string dir = temp_path("fixtures_out");
  RunResult r = run("export --fixture all --output " + dir);
  EXPECT_EQ(r.exit_code, 0);
  json j;
  std::ifstream in(dir + "/offset3.json");
  ASSERT_TRUE(in.good());
  in >> j;
  EXPECT_EQ(j["name"], "offset3");
  EXPECT_EQ(j["C"]["rows"], 6);
  // exported triple fixtures feed straight back into generate
  RunResult r2 = run("generate --input " + dir + "/field3.json");
  EXPECT_EQ(r2.exit_code, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("generate --fixture nosuch", true).exit_code, 2);
  EXPECT_EQ(run("generate", true).exit_code, 2);
  EXPECT_EQ(run("frobnicate", true).exit_code, 2);
  EXPECT_EQ(run("search --n 3", true).exit_code, 2);  // missing --kind
  const std::string path = temp_path("garbage.json");
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  EXPECT_EQ(run("verify --input " + path, true).exit_code, 2);
}

TEST(Cli, TableModeIsHumanReadable) {
  RunResult r = run("classify --fixture field3 --format table");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("structure vector: (3,0,6)"), std::string::npos);
}

}  // namespace
