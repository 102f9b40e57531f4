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

#include "mcroute/benchmarks.hpp"

#include <charconv>
#include <cmath>
#include <random>
#include <set>

#include "mcroute/errors.hpp"

namespace mcroute::bench {

namespace {

void require(int n, int minimum, const char* family) {
  if (n < minimum)
    throw PreconditionError(std::string(family) + " needs at least " + std::to_string(minimum) +
                            " qubits");
}

void cphase(CircuitDag& c, int a, int b) {
  c.add_single("rz", a);
  c.add_gate("cx", a, b);
  c.add_single("rz", b);
  c.add_gate("cx", a, b);
  c.add_single("rz", b);
}

void toffoli(CircuitDag& c, int a, int b, int t) {
  c.add_single("h", t);
  c.add_gate("cx", b, t);
  c.add_single("tdg", t);
  c.add_gate("cx", a, t);
  c.add_single("t", t);
  c.add_gate("cx", b, t);
  c.add_single("tdg", t);
  c.add_gate("cx", a, t);
  c.add_single("t", b);
  c.add_single("t", t);
  c.add_single("h", t);
  c.add_gate("cx", a, b);
  c.add_single("t", a);
  c.add_single("tdg", b);
  c.add_gate("cx", a, b);
}

void qft_on(CircuitDag& c, const std::vector<int>& qs, bool inverse) {
  const int n = static_cast<int>(qs.size());
  if (!inverse) {
    for (int i = 0; i < n; ++i) {
      c.add_single("h", qs[i]);
      for (int j = i + 1; j < n; ++j) cphase(c, qs[j], qs[i]);
    }
  } else {
    for (int i = n - 1; i >= 0; --i) {
      for (int j = n - 1; j > i; --j) cphase(c, qs[j], qs[i]);
      c.add_single("h", qs[i]);
    }
  }
}

std::vector<int> range(int from, int to) {
  std::vector<int> out;
  for (int i = from; i < to; ++i) out.push_back(i);
  return out;
}

}  // namespace

CircuitDag ghz(int n) {
  require(n, 2, "ghz");
  CircuitDag c(n);
  c.add_single("h", 0);
  for (int i = 0; i + 1 < n; ++i) c.add_gate("cx", i, i + 1);
  return c;
}

CircuitDag graph_state(int n, std::uint64_t seed) {
  require(n, 3, "graph");
  CircuitDag c(n);
  for (int i = 0; i < n; ++i) c.add_single("h", i);
  std::set<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int added = 0; added < n / 2;) {
    const int a = pick(rng);
    const int b = pick(rng);
    if (a == b || !edges.emplace(std::min(a, b), std::max(a, b)).second) continue;
    ++added;
  }
  for (const auto& [a, b] : edges) c.add_gate("cz", a, b);
  return c;
}

CircuitDag qft(int n) {
  require(n, 2, "qft");
  CircuitDag c(n);
  qft_on(c, range(0, n), false);
  return c;
}

CircuitDag cuccaro_adder(int n) {
  require(n, 4, "cuccaro");
  const int bits = (n - 2) / 2;
  CircuitDag c(n);
  // Qubit 0 is the carry-in, then interleaved b_i, a_i, and the carry-out last.
  auto a = [](int i) { return 2 + 2 * i; };
  auto b = [](int i) { return 1 + 2 * i; };
  const int cin = 0;
  const int cout = n - 1;
  auto maj = [&](int x, int y, int z) {
    c.add_gate("cx", z, y);
    c.add_gate("cx", z, x);
    toffoli(c, x, y, z);
  };
  auto uma = [&](int x, int y, int z) {
    toffoli(c, x, y, z);
    c.add_gate("cx", z, x);
    c.add_gate("cx", x, y);
  };
  maj(cin, b(0), a(0));
  for (int i = 1; i < bits; ++i) maj(a(i - 1), b(i), a(i));
  c.add_gate("cx", a(bits - 1), cout);
  for (int i = bits - 1; i >= 1; --i) uma(a(i - 1), b(i), a(i));
  uma(cin, b(0), a(0));
  return c;
}

CircuitDag draper_adder(int n) {
  require(n, 4, "draper");
  const int half = n / 2;
  CircuitDag c(n);
  const auto a = range(0, half);
  const auto b = range(half, 2 * half);
  qft_on(c, b, false);
  for (int i = 0; i < half; ++i)
    for (int j = i; j < half; ++j) cphase(c, a[static_cast<std::size_t>(j)],
                                          b[static_cast<std::size_t>(i)]);
  qft_on(c, b, true);
  return c;
}

CircuitDag qaoa(int n) {
  require(n, 2, "qaoa");
  CircuitDag c(n);
  for (int i = 0; i < n; ++i) c.add_single("h", i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      c.add_gate("cx", i, j);
      c.add_single("rz", j);
      c.add_gate("cx", i, j);
    }
  for (int i = 0; i < n; ++i) c.add_single("rx", i);
  return c;
}

CircuitDag amplitude_estimation(int n) {
  require(n, 3, "ae");
  CircuitDag c(n);
  const int target = n - 1;
  c.add_single("ry", target);
  for (int i = 0; i < target; ++i) {
    c.add_single("h", i);
    c.add_gate("cx", i, target);
    c.add_single("ry", target);
    c.add_gate("cx", i, target);
  }
  qft_on(c, range(0, target), true);
  return c;
}

CircuitDag qnn(int n) {
  require(n, 2, "qnn");
  CircuitDag c(n);
  for (int i = 0; i < n; ++i) {
    c.add_single("h", i);
    c.add_single("p", i);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      c.add_gate("cx", i, j);
      c.add_single("p", j);
      c.add_gate("cx", i, j);
    }
  for (int round = 0; round < 2; ++round) {
    for (int i = 0; i < n; ++i) c.add_single("ry", i);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) c.add_gate("cx", i, j);
  }
  for (int i = 0; i < n; ++i) c.add_single("ry", i);
  return c;
}

CircuitDag random_circuit(int n, int two_qubit_gates, std::uint64_t seed) {
  require(n, 2, "random");
  CircuitDag c(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::bernoulli_distribution single(0.3);
  for (int g = 0; g < two_qubit_gates; ++g) {
    const int a = pick(rng);
    int b = pick(rng);
    while (b == a) b = pick(rng);
    if (single(rng)) c.add_single("sx", a);
    c.add_gate("cx", a, b);
  }
  return c;
}

namespace {

std::vector<long long> numbers(std::string_view rest, std::string_view spec) {
  std::vector<long long> out;
  while (!rest.empty()) {
    const auto colon = rest.find(':');
    const auto part = rest.substr(0, colon);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size())
      throw PreconditionError("bad circuit spec '" + std::string(spec) + "'");
    out.push_back(value);
    if (colon == std::string_view::npos) break;
    rest.remove_prefix(colon + 1);
  }
  return out;
}

}  // namespace

CircuitDag make(std::string_view spec) {
  const auto colon = spec.find(':');
  const auto family = spec.substr(0, colon);
  const auto args =
      colon == std::string_view::npos ? std::vector<long long>{} : numbers(spec.substr(colon + 1), spec);
  auto arg = [&](std::size_t i, long long fallback) {
    return i < args.size() ? args[i] : fallback;
  };
  if (args.empty()) throw PreconditionError("circuit spec '" + std::string(spec) + "' needs a qubit count");
  const int n = static_cast<int>(args[0]);
  if (family == "ghz") return ghz(n);
  if (family == "graph") return graph_state(n, static_cast<std::uint64_t>(arg(1, 0)));
  if (family == "qft") return qft(n);
  if (family == "cuccaro") return cuccaro_adder(n);
  if (family == "draper") return draper_adder(n);
  if (family == "qaoa") return qaoa(n);
  if (family == "ae") return amplitude_estimation(n);
  if (family == "qnn") return qnn(n);
  if (family == "random")
    return random_circuit(n, static_cast<int>(arg(1, 10LL * n)), static_cast<std::uint64_t>(arg(2, 0)));
  throw PreconditionError("unknown circuit family '" + std::string(family) + "'");
}

std::vector<std::string> families() {
  return {"ae", "cuccaro", "draper", "ghz", "graph", "qaoa", "qft", "qnn", "random"};
}

double shifted_geomean(std::span<const double> values) {
  if (values.empty()) return 0.0;
  double sum = 0.0;
  for (double v : values) sum += std::log1p(v);
  return std::expm1(sum / static_cast<double>(values.size()));
}

}  // namespace mcroute::bench
