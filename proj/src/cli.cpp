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

#include "mcroute/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

#include "mcroute/architecture.hpp"
#include "mcroute/baseline.hpp"
#include "mcroute/benchmarks.hpp"
#include "mcroute/circuit.hpp"
#include "mcroute/errors.hpp"
#include "mcroute/initial_layout.hpp"
#include "mcroute/oracle.hpp"
#include "mcroute/router.hpp"
#include "mcroute/schedule.hpp"
#include "mcroute/verifier.hpp"

namespace mcroute {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write '" + path + "'");
  out << text;
}

// A path to a QASM/JSON file, or a generator spec such as `qft:26`.
CircuitDag load_circuit_source(const std::string& source) {
  if (fs::exists(source)) return load_circuit(source);
  if (source.find(':') != std::string::npos) return bench::make(source);
  throw PreconditionError("cannot open circuit '" + source + "'");
}

// Comma-separated physical qubits, or a file holding them.
std::vector<int> parse_layout(const std::string& text) {
  std::string body = fs::exists(text) ? read_file(text) : text;
  std::replace_if(body.begin(), body.end(), [](char c) { return c == ',' || c == '[' || c == ']'; },
                  ' ');
  std::istringstream in(body);
  std::vector<int> out;
  for (int p; in >> p;) out.push_back(p);
  if (!in.eof()) throw PreconditionError("bad initial layout '" + text + "'");
  return out;
}

struct RouteOptions {
  std::string arch;
  std::string circuit;
  std::uint64_t seed = 0;
  int trials = 1;
  std::string initial_opt = "none";
  std::string mapper = "heuristic";
  std::string initial_layout;
  std::string out;
  std::string csv;
  std::string format = "json";
  RouterParams params;
};

void add_param_flags(CLI::App* cmd, RouterParams& p) {
  cmd->add_option("--lookahead-k", p.lookahead_k, "Extended-set weight")->capture_default_str();
  cmd->add_option("--extended-size", p.extended_size, "Extended-set size")->capture_default_str();
  cmd->add_option("--decay", p.decay_delta, "Usage increment per touched qubit")
      ->capture_default_str();
  cmd->add_option("--capacity-penalty", p.capacity_penalty,
                  "Weight per full core a remote route passes through (default: physical qubit count)");
  cmd->add_option("--traffic", p.traffic_coeff, "Per-use link congestion weight")
      ->capture_default_str();
  cmd->add_option("--teleport-weight", p.teleport_base_weight, "Base link weight")
      ->capture_default_str();
  cmd->add_option("--max-stall", p.max_stall,
                  "Movement ops without progress before deadlock (default: 10 x physical qubits)");
  cmd->add_option("--release-after", p.release_after,
                  "Stalled ops before forcing the oldest front gate greedily, 0 disables "
                  "(default: max(8, physical qubits / 4), at most max-stall / 2)");
}

struct Trial {
  Schedule schedule;
  OpCounts counts;
  int depth = 0;
  std::uint64_t seed = 0;

  auto key() const { return std::tuple(counts.intercore(), counts.swaps, depth); }
};

Trial run_trial(const CircuitDag& dag, const Architecture& arch, const RouteOptions& o,
                std::uint64_t seed) {
  RouterParams params = o.params;
  params.seed = seed;
  Layout start = o.initial_layout.empty() ? Layout(initial_layout(arch, dag, seed))
                                          : Layout(arch, parse_layout(o.initial_layout));
  if (o.initial_opt == "bidirectional" && o.initial_layout.empty())
    start = optimize_initial(arch, dag, seed, params);
  RoutingResult result = o.mapper == "greedy" ? run_greedy(dag, start, seed, params.max_stall)
                                              : run(dag, start, params);
  Trial t;
  t.counts = result.schedule.counts();
  t.depth = compute_depth(result.schedule);
  t.seed = seed;
  t.schedule = std::move(result.schedule);
  return t;
}

// Best of `trials` runs with seeds seed, seed+1, ... ordered by
// (inter-core ops, swaps, depth). Rethrows the last failure if none succeeds.
Trial best_trial(const CircuitDag& dag, const Architecture& arch, const RouteOptions& o) {
  std::optional<Trial> best;
  std::exception_ptr failure;
  for (int i = 0; i < o.trials; ++i) {
    try {
      Trial t = run_trial(dag, arch, o, o.seed + static_cast<std::uint64_t>(i));
      if (!best || t.key() < best->key()) best = std::move(t);
    } catch (const DeadlockError&) {
      failure = std::current_exception();
    }
  }
  if (!best) std::rethrow_exception(failure);
  return std::move(*best);
}

int cmd_route(const RouteOptions& o, std::ostream& out) {
  const Architecture arch = load_architecture(o.arch);
  const CircuitDag dag = load_circuit_source(o.circuit);
  const auto started = std::chrono::steady_clock::now();
  Trial best = best_trial(dag, arch, o);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  const RunInfo info{o.circuit, o.arch, best.seed, ms};

  if (!o.csv.empty()) {
    const bool fresh = !fs::exists(o.csv) || fs::file_size(o.csv) == 0;
    std::ofstream csv(o.csv, std::ios::app | std::ios::binary);
    if (!csv) throw PreconditionError("cannot write '" + o.csv + "'");
    if (fresh) csv << csv_header();
    csv << emit(best.schedule, EmitFormat::csv_summary, info);
  }
  if (!o.out.empty()) {
    write_file(o.out, emit(best.schedule, EmitFormat::json, info));
    out << csv_header() << emit(best.schedule, EmitFormat::csv_summary, info);
    return kExitOk;
  }
  const EmitFormat format = o.format == "csv"    ? EmitFormat::csv_summary
                            : o.format == "text" ? EmitFormat::annotated_text
                                                 : EmitFormat::json;
  if (format == EmitFormat::csv_summary) out << csv_header();
  out << emit(best.schedule, format, info);
  return kExitOk;
}

struct VerifyOptions {
  std::string schedule;
  std::string circuit;
  std::string arch;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const Architecture arch = load_architecture(o.arch);
  const CircuitDag dag = load_circuit_source(o.circuit);
  const Schedule schedule = schedule_from_json(read_file(o.schedule));
  const auto report = verify(dag, arch, schedule);
  if (report.ok())
    out << "ok: " << schedule.ops.size() << " ops, no violations\n";
  else
    out << report.to_string() << report.violations.size() << " violation(s)\n";
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

struct OracleOptions {
  std::string arch;
  std::string circuit;
  std::uint64_t seed = 0;
  std::string initial_layout;
  std::string out;
  OracleLimits limits;
};

int cmd_oracle(const OracleOptions& o, std::ostream& out, std::ostream& err) {
  const Architecture arch = load_architecture(o.arch);
  const CircuitDag dag = load_circuit_source(o.circuit);
  const Layout start = o.initial_layout.empty() ? initial_layout(arch, dag, o.seed)
                                                : Layout(arch, parse_layout(o.initial_layout));
  const OracleResult r = solve_exact(dag, start, o.limits);
  if (!r.solved) {
    err << "oracle: no solution within limits; lower bound intercore=" << r.lower_bound.intercore
        << " swaps=" << r.lower_bound.swaps << " (" << r.states << " states)\n";
    return kExitOracleTimeout;
  }
  out << "intercore=" << r.cost.intercore << " swaps=" << r.cost.swaps << " states=" << r.states
      << "\n";
  if (!o.out.empty()) write_file(o.out, emit(r.witness, EmitFormat::json));
  return kExitOk;
}

struct BenchOptions {
  std::vector<std::string> archs;
  std::vector<std::string> circuits;
  std::vector<std::uint64_t> seeds{0};
  RouteOptions route;
};

int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
  struct Row {
    std::string circuit, arch;
    std::uint64_t seed;
    std::string line;
    Trial trial;
  };
  std::vector<Row> rows;
  int status = kExitOk;
  for (const auto& arch_source : o.archs) {
    const Architecture arch = load_architecture(arch_source);
    for (const auto& circuit : o.circuits) {
      const CircuitDag dag = load_circuit_source(circuit);
      for (std::uint64_t seed : o.seeds) {
        RouteOptions ro = o.route;
        ro.seed = seed;
        const auto started = std::chrono::steady_clock::now();
        try {
          Trial t = best_trial(dag, arch, ro);
          const double ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - started)
                                .count();
          auto line = emit(t.schedule, EmitFormat::csv_summary, {circuit, arch_source, seed, ms});
          rows.push_back({circuit, arch_source, seed, std::move(line), std::move(t)});
        } catch (const DeadlockError& e) {
          err << circuit << " on " << arch_source << " seed " << seed << ": " << e.what() << "\n";
          status = kExitDeadlock;
        } catch (const InfeasibleInstanceError& e) {
          err << circuit << " on " << arch_source << ": " << e.what() << "\n";
          if (status == kExitOk) status = kExitInfeasible;
        }
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.circuit, a.arch, a.seed) < std::tie(b.circuit, b.arch, b.seed);
  });
  out << csv_header();
  for (const auto& r : rows) out << r.line;

  std::map<std::string, std::array<std::vector<double>, 4>> per_arch;
  for (const auto& r : rows) {
    auto& v = per_arch[r.arch];
    v[0].push_back(r.trial.counts.intercore());
    v[1].push_back(r.trial.counts.swaps);
    v[2].push_back(r.trial.depth);
    v[3].push_back(r.trial.counts.teledata);
  }
  out << std::fixed << std::setprecision(3);
  for (const auto& [arch, v] : per_arch)
    out << "# geomean " << arch << ": intercore=" << bench::shifted_geomean(v[0])
        << " swaps=" << bench::shifted_geomean(v[1]) << " depth=" << bench::shifted_geomean(v[2])
        << " teledata=" << bench::shifted_geomean(v[3]) << " runs=" << v[0].size() << "\n";
  return status;
}

int cmd_gen_arch(const std::string& spec, const std::string& path, std::ostream& out) {
  const Architecture arch = load_architecture(spec);
  if (path.empty())
    out << arch.to_json() << "\n";
  else
    write_file(path, arch.to_json() + "\n");
  return kExitOk;
}

void add_route_flags(CLI::App* cmd, RouteOptions& o) {
  cmd->add_option("--trials", o.trials, "Independent runs; the best is kept")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--initial-opt", o.initial_opt, "Initial layout refinement")
      ->check(CLI::IsMember({"none", "bidirectional"}))
      ->capture_default_str();
  cmd->add_option("--mapper", o.mapper, "Routing algorithm")
      ->check(CLI::IsMember({"heuristic", "greedy"}))
      ->capture_default_str();
  cmd->add_option("--initial-layout", o.initial_layout,
                  "Physical qubit per logical qubit, comma separated (or a file)");
  add_param_flags(cmd, o.params);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Layout synthesis for multi-core quantum architectures", "mcroute"};
  app.require_subcommand(1);

  RouteOptions route;
  auto* route_cmd = app.add_subcommand("route", "Route a circuit onto an architecture");
  route_cmd->add_option("--arch", route.arch, "Architecture JSON file or grid spec")->required();
  route_cmd->add_option("--circuit", route.circuit, "QASM/JSON file or generator spec")
      ->required();
  route_cmd->add_option("--seed", route.seed, "Random seed")->capture_default_str();
  route_cmd->add_option("--out", route.out, "Write schedule JSON here");
  route_cmd->add_option("--csv", route.csv, "Append a CSV summary row to this file");
  route_cmd->add_option("--format", route.format, "Stdout format when --out is not given")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  add_route_flags(route_cmd, route);

  VerifyOptions ver;
  auto* verify_cmd = app.add_subcommand("verify", "Check a schedule for legality");
  verify_cmd->add_option("--schedule", ver.schedule, "Schedule JSON")->required();
  verify_cmd->add_option("--circuit", ver.circuit, "QASM/JSON file or generator spec")
      ->required();
  verify_cmd->add_option("--arch", ver.arch, "Architecture JSON file or grid spec")->required();

  OracleOptions orc;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive optimum for a tiny instance");
  oracle_cmd->add_option("--arch", orc.arch, "Architecture JSON file or grid spec")->required();
  oracle_cmd->add_option("--circuit", orc.circuit, "QASM/JSON file or generator spec")
      ->required();
  oracle_cmd->add_option("--seed", orc.seed, "Seed for the initial layout")
      ->capture_default_str();
  oracle_cmd->add_option("--initial-layout", orc.initial_layout,
                         "Physical qubit per logical qubit, comma separated (or a file)");
  oracle_cmd->add_option("--max-ops", orc.limits.max_ops, "Longest op sequence considered")
      ->capture_default_str();
  oracle_cmd->add_option("--time-budget", orc.limits.time_budget_seconds, "Seconds")
      ->capture_default_str();
  oracle_cmd->add_option("--max-states", orc.limits.max_states, "State cap")
      ->capture_default_str();
  oracle_cmd->add_option("--out", orc.out, "Write the witness schedule JSON here");

  BenchOptions bch;
  auto* bench_cmd = app.add_subcommand("bench", "Run a circuit x architecture x seed matrix");
  bench_cmd->add_option("--arch", bch.archs, "Architectures")->required();
  bench_cmd->add_option("--circuit", bch.circuits, "Circuits")->required();
  bench_cmd->add_option("--seed", bch.seeds, "Seeds")->capture_default_str();
  add_route_flags(bench_cmd, bch.route);

  std::string gen_spec, gen_out;
  auto* gen_cmd = app.add_subcommand("gen-arch", "Write a generated architecture as JSON");
  gen_cmd->add_option("spec", gen_spec, "Grid spec, e.g. grid:2x2,3x3,1")->required();
  gen_cmd->add_option("--out", gen_out, "Output file (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*route_cmd) return cmd_route(route, out);
    if (*verify_cmd) return cmd_verify(ver, out);
    if (*oracle_cmd) return cmd_oracle(orc, out, err);
    if (*bench_cmd) return cmd_bench(bch, out, err);
    if (*gen_cmd) return cmd_gen_arch(gen_spec, gen_out, out);
  } catch (const DeadlockError& e) {
    err << e.what() << "\n";
    return kExitDeadlock;
  } catch (const InfeasibleInstanceError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace mcroute
