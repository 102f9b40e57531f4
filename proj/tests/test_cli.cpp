// Copyright 2026 The mcroute Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mcroute/cli.hpp"

using namespace mcroute;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / "mcroute_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const auto path = scratch() / name;
  std::ofstream(path) << text;
  return path.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string ghz8() {
  std::string q = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[8];\nh q[0];\n";
  for (int i = 0; i < 7; ++i) q += "cx q[" + std::to_string(i) + "],q[" + std::to_string(i + 1) + "];\n";
  return write("ghz8.qasm", q);
}

}  // namespace

TEST_CASE("route is byte-identical across runs") {
  const auto circuit = ghz8();
  const auto a = cli({"route", "--arch", "grid:2x2,2x2,1", "--circuit", circuit, "--seed", "7"});
  const auto b = cli({"route", "--arch", "grid:2x2,2x2,1", "--circuit", circuit, "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"metrics\"") != std::string::npos);
}

TEST_CASE("route then verify") {
  const auto circuit = ghz8();
  const auto out = (scratch() / "ghz8.json").string();
  const auto csv = (scratch() / "summary.csv").string();
  fs::remove(csv);
  const auto r = cli({"route", "--arch", "grid:2x2,2x2,1", "--circuit", circuit, "--seed", "3",
                      "--out", out, "--csv", csv, "--trials", "3", "--initial-opt", "bidirectional"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("circuit,arch,seed", 0) == 0);
  CHECK(slurp(csv).rfind("circuit,arch,seed", 0) == 0);
  const auto v = cli({"verify", "--schedule", out, "--circuit", circuit, "--arch", "grid:2x2,2x2,1"});
  CHECK(v.code == 0);
  CHECK(v.out.find("ok") == 0);

  // The same schedule does not implement a different circuit.
  const auto bad = cli({"verify", "--schedule", out, "--circuit", "qft:8", "--arch", "grid:2x2,2x2,1"});
  CHECK(bad.code == 4);
  CHECK(bad.out.find("violation") != std::string::npos);
}

TEST_CASE("greedy mapper and text output") {
  const auto r = cli({"route", "--arch", "grid:2x1,3x3,1", "--circuit", "qft:8", "--mapper", "greedy",
                      "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("# initial layout") == 0);
  CHECK(r.out.find("] telegate") == std::string::npos);
}

TEST_CASE("deadlock exit code names the full cores") {
  const auto arch = write("line3.json",
                          R"({"cores": [
      {"qubits": [0,1,2,3], "comm_qubits": [3], "edges": [[0,1],[1,2],[2,3]]},
      {"qubits": [4,5,6,7], "comm_qubits": [4,7], "edges": [[4,5],[5,6],[6,7]]},
      {"qubits": [8,9,10,11], "comm_qubits": [8], "edges": [[8,9],[9,10],[10,11]]}],
    "links": [[3,4],[7,8]]})");
  const auto circuit = write("remote.qasm", "qreg q[9];\ncx q[0],q[1];\n");
  const auto r = cli({"route", "--arch", arch, "--circuit", circuit, "--initial-layout",
                      "0,11,1,2,5,6,7,9,10"});
  CHECK(r.code == 2);
  CHECK(r.err.find("full cores [0,1,2]") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("error exit codes") {
  CHECK(cli({}).code == 1);
  CHECK(cli({"frobnicate"}).code == 1);
  CHECK(cli({"route", "--arch", "grid:2x1,2x2,1"}).code == 1);
  CHECK(cli({"route", "--arch", "missing.json", "--circuit", "ghz:4"}).code == 1);
  CHECK(cli({"route", "--arch", "grid:2x1,2x2,1", "--circuit", "ghz:4", "--mapper", "magic"}).code == 1);
  const auto full = cli({"route", "--arch", "grid:2x1,2x2,1", "--circuit", "ghz:7"});
  CHECK(full.code == 3);
  CHECK_FALSE(full.err.empty());
  const auto bad_qasm = write("bad.qasm", "qreg q[2];\ncx q[0] q[1];\n");
  const auto parse = cli({"route", "--arch", "grid:2x1,2x2,1", "--circuit", bad_qasm});
  CHECK(parse.code == 1);
  CHECK(parse.err.find("line 2") != std::string::npos);
}

TEST_CASE("oracle subcommand") {
  const auto circuit = write("pair.qasm", "qreg q[2];\ncx q[0],q[1];\n");
  const auto out = (scratch() / "witness.json").string();
  const auto r = cli({"oracle", "--arch", "grid:2x1,2x2,1", "--circuit", circuit, "--initial-layout",
                      "0,7", "--out", out});
  CHECK(r.code == 0);
  CHECK(r.out.find("intercore=1") == 0);
  CHECK(cli({"verify", "--schedule", out, "--circuit", circuit, "--arch", "grid:2x1,2x2,1"}).code == 0);
  const auto t = cli({"oracle", "--arch", "grid:2x1,2x2,1", "--circuit", circuit, "--initial-layout",
                      "0,7", "--max-ops", "1"});
  CHECK(t.code == 5);
}

TEST_CASE("bench and gen-arch") {
  const auto r = cli({"bench", "--arch", "grid:2x2,3x3,1", "--circuit", "qft:10", "ghz:12", "--seed", "2", "1"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string header, first, second;
  std::getline(lines, header);
  std::getline(lines, first);
  std::getline(lines, second);
  CHECK(first.rfind("ghz:12,\"grid:2x2,3x3,1\",1,", 0) == 0);
  CHECK(second.rfind("ghz:12,\"grid:2x2,3x3,1\",2,", 0) == 0);
  CHECK(r.out.find("# geomean") != std::string::npos);

  const auto g = cli({"gen-arch", "grid:2x1,2x2,1"});
  CHECK(g.code == 0);
  CHECK(g.out.find("\"links\":[[3,6]]") != std::string::npos);
}
