// Copyright 2026 The semisym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "semisym/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "semisym/bench.hpp"
#include "semisym/encoders.hpp"
#include "semisym/graph.hpp"
#include "semisym/parse_error.hpp"
#include "semisym/qubo.hpp"
#include "semisym/reducer.hpp"
#include "semisym/solver.hpp"
#include "semisym/verifier.hpp"

namespace semisym {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Writes to `path`, or to `fallback` when the path is empty.
void emit(const std::string& path, const std::string& content, std::ostream& fallback) {
  if (path.empty()) {
    fallback << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

template <typename Parser>
auto loadFile(const std::string& path, Parser parse) {
  try {
    return parse(readFile(path));
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::size_t parseBudget(const std::string& text) {
  if (text == "max" || text == "unlimited") return kUnlimitedAncillas;
  std::size_t pos = 0;
  const unsigned long long value = std::stoull(text, &pos);
  if (pos != text.size()) throw std::invalid_argument("bad ancilla budget '" + text + "'");
  return static_cast<std::size_t>(value);
}

struct Options {
  // gen-graph
  std::size_t vertices = 0;
  double pEdge = 0.5;
  std::uint64_t seed = 1;
  std::string permute;
  // encode
  std::string problem;
  std::string graph;
  std::string graph2;
  std::size_t colors = 3;
  std::string penalty;
  std::string map;
  // reduce / verify / solve / stats
  std::string in;
  std::string out;
  std::string ancillas = "max";
  std::string z = "safe";
  std::string trace;
  std::string original;
  std::string reduced;
  std::string method = "exhaustive";
  std::size_t sweeps = 1000;
  std::size_t restarts = 20;
  std::uint64_t layers = 1;
  std::size_t enumCap = kDefaultEnumerationCap;
  std::size_t ancillaCap = kDefaultAncillaCap;
  // bench
  std::string sizes = "6..12";
  std::size_t seeds = 3;
  std::string budgets = "0,5,10";
  std::size_t verifyCap = 16;
  std::string emitDir;
};

ProblemInstance loadInstance(const Options& o, ProblemKind kind) {
  ProblemInstance instance;
  instance.kind = kind;
  if (o.graph.empty()) throw std::invalid_argument("--graph is required");
  instance.graph = loadFile(o.graph, parseEdgeList);
  if (kind == ProblemKind::GraphIsomorphism) {
    if (o.graph2.empty()) throw std::invalid_argument("isomorphism needs --graph2");
    instance.graph2 = loadFile(o.graph2, parseEdgeList);
  }
  if (kind == ProblemKind::GraphColoring) instance.colors = o.colors;
  return instance;
}

int runGenGraph(const Options& o, std::ostream& out) {
  Graph g;
  if (!o.permute.empty()) {
    const Graph base = loadFile(o.permute, parseEdgeList);
    g = permuteGraph(base, randomPermutation(base.numVertices(), o.seed));
  } else {
    if (o.vertices == 0) throw std::invalid_argument("gen-graph needs --vertices or --permute");
    g = erdosRenyi(o.vertices, o.pEdge, o.seed);
  }
  emit(o.out, formatEdgeList(g), out);
  return kExitOk;
}

int runEncode(const Options& o, std::ostream& out) {
  const ProblemInstance instance = loadInstance(o, parseProblemKind(o.problem));
  std::optional<Rational> penalty;
  if (!o.penalty.empty()) penalty = parseRational(o.penalty);
  const Encoding enc = encode(instance, penalty);
  emit(o.out, formatQubo(enc.qubo), out);
  if (!o.map.empty()) emit(o.map, formatVariableMap(enc.map), out);
  return kExitOk;
}

int runReduce(const Options& o, std::ostream& out) {
  const QuboMatrix q = loadFile(o.in, parseQubo);
  const Reduction red = factorSemiSymmetries(q, parseBudget(o.ancillas), ZMode::parse(o.z));
  emit(o.out, formatQubo(red.qubo), out);
  if (!o.trace.empty()) emit(o.trace, formatTrace(red.trace), out);
  return kExitOk;
}

int runVerify(const Options& o, std::ostream& out, std::ostream& err) {
  const QuboMatrix q = loadFile(o.original, parseQubo);
  const QuboMatrix qmod = loadFile(o.reduced, parseQubo);
  const ReductionTrace trace = loadFile(o.trace, parseTrace);
  const bool replays = formatQubo(replayTrace(q, trace)) == formatQubo(qmod);
  const EquivalenceReport report = verifyEquivalence(q, qmod, trace, o.enumCap, o.ancillaCap);
  std::ostringstream text;
  text << "traceReplays: " << (replays ? "true" : "false") << '\n' << renderReport(report);
  emit(o.out, text.str(), out);
  if (!replays) err << "reduced matrix does not match the replayed trace\n";
  return replays && report.passed() ? kExitOk : kExitCheckFailed;
}

int runSolve(const Options& o, std::ostream& out) {
  const QuboMatrix q = loadFile(o.in, parseQubo);
  SolveResult result;
  std::optional<QuboMatrix> original;
  std::optional<ReductionTrace> trace;
  if (!o.trace.empty()) {
    trace = loadFile(o.trace, parseTrace);
    if (o.original.empty()) throw std::invalid_argument("--trace needs --original");
    original = loadFile(o.original, parseQubo);
  }
  if (o.method == "exhaustive") {
    result = exhaustiveSolve(q, o.enumCap);
  } else if (o.method == "sa") {
    AnnealOptions opts;
    opts.sweeps = o.sweeps;
    opts.restarts = o.restarts;
    opts.seed = o.seed;
    const QuboMatrix& reference = original ? *original : q;
    if (reference.size() <= o.enumCap) {
      opts.referenceEnergy = exhaustiveSolve(reference, o.enumCap).bestEnergy;
    }
    if (trace) {
      opts.successEnergy = [&](const Assignment& xmod) {
        return energy(*original, projectAssignment(*trace, xmod));
      };
    }
    result = simulatedAnneal(q, opts);
  } else {
    throw std::invalid_argument("unknown method '" + o.method + "' (expected exhaustive or sa)");
  }

  std::ostringstream text;
  text << "method: " << methodName(result.method) << '\n'
       << "energy: " << formatRational(result.bestEnergy) << '\n'
       << "assignment: " << result.bestAssignment.toString() << '\n'
       << "samples: " << result.samples << '\n';
  if (result.successFraction) {
    text << "successFraction: " << std::fixed << std::setprecision(4) << *result.successFraction
         << '\n';
  }
  Assignment decoded = result.bestAssignment;
  if (trace) {
    decoded = projectAssignment(*trace, result.bestAssignment);
    text << "projected: " << decoded.toString() << '\n'
         << "originalEnergy: " << formatRational(energy(*original, decoded)) << '\n';
  }
  if (!o.map.empty()) {
    const VariableMap map = loadFile(o.map, parseVariableMap);
    const ProblemInstance instance = loadInstance(o, map.kind());
    text << decodeAndValidate(map, instance, decoded).describe() << '\n';
  }
  emit(o.out, text.str(), out);
  return kExitOk;
}

int runStats(const Options& o, std::ostream& out) {
  const QuboMatrix q = loadFile(o.in, parseQubo);
  const QuboStats s = stats(q, o.layers);
  std::ostringstream text;
  text << "variables: " << s.numVariables << ", couplings: " << s.numCouplings
       << ", cnot: " << s.cnotCount << ", zz-layers: " << s.zzLayerCount
       << ", density: " << std::fixed << std::setprecision(6) << s.density << '\n';
  emit(o.out, text.str(), out);
  return kExitOk;
}

int runBench(const Options& o, std::ostream& out) {
  BenchConfig config;
  config.problem = parseProblemKind(o.problem);
  const auto dots = o.sizes.find("..");
  if (dots == std::string::npos) {
    config.minVertices = config.maxVertices = std::stoul(o.sizes);
  } else {
    config.minVertices = std::stoul(o.sizes.substr(0, dots));
    config.maxVertices = std::stoul(o.sizes.substr(dots + 2));
  }
  config.seedsPerSize = o.seeds;
  config.baseSeed = o.seed;
  config.budgets.clear();
  std::stringstream list(o.budgets);
  for (std::string item; std::getline(list, item, ',');) config.budgets.push_back(parseBudget(item));
  config.zMode = ZMode::parse(o.z);
  config.edgeProbability = o.pEdge;
  config.colors = o.colors;
  if (!o.penalty.empty()) config.penalty = parseRational(o.penalty);
  config.verifyCap = o.verifyCap;
  config.annealSweeps = o.sweeps;
  config.annealRestarts = o.restarts;
  if (!o.emitDir.empty()) config.emitDirectory = o.emitDir;
  emit(o.out, formatBenchCsv(runBenchmark(config)), out);
  return kExitOk;
}

}  // namespace

int cliMain(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Encode graph problems as QUBOs and factor out semi-symmetries", "semisym"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen-graph", "Generate a seeded G(n,p) graph or relabel one");
  gen->add_option("--vertices", o.vertices, "Vertex count");
  gen->add_option("--pedge", o.pEdge, "Edge probability")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", o.seed, "Generator seed");
  gen->add_option("--permute", o.permute, "Relabel this edge list with a seeded permutation");
  gen->add_option("--out", o.out, "Output edge list (default stdout)");

  auto* enc = app.add_subcommand("encode", "Build a problem QUBO");
  enc->add_option("--problem", o.problem, "maxclique | hamilton | coloring | isomorphism")
      ->required();
  enc->add_option("--graph", o.graph, "Edge list")->required();
  enc->add_option("--graph2", o.graph2, "Second edge list (isomorphism)");
  enc->add_option("--colors", o.colors, "Color count (coloring)");
  enc->add_option("--penalty", o.penalty, "Penalty A (default 3 or numVariables+1)");
  enc->add_option("--out", o.out, "Output .qubo (default stdout)");
  enc->add_option("--map", o.map, "Output variable map");

  auto* red = app.add_subcommand("reduce", "Factor semi-symmetries into ancillas");
  red->add_option("--in", o.in, "Input .qubo")->required();
  red->add_option("--ancillas", o.ancillas, "Ancilla budget or 'max'");
  red->add_option("--z", o.z, "safe | tight | positive value");
  red->add_option("--out", o.out, "Output .qubo (default stdout)");
  red->add_option("--trace", o.trace, "Output trace file");

  auto* ver = app.add_subcommand("verify", "Exhaustively check a reduction");
  ver->add_option("--original", o.original, "Original .qubo")->required();
  ver->add_option("--reduced", o.reduced, "Reduced .qubo")->required();
  ver->add_option("--trace", o.trace, "Trace file")->required();
  ver->add_option("--enum-cap", o.enumCap, "Largest original size to enumerate");
  ver->add_option("--ancilla-cap", o.ancillaCap, "Largest ancilla count to enumerate");
  ver->add_option("--out", o.out, "Report file (default stdout)");

  auto* sol = app.add_subcommand("solve", "Minimize a QUBO");
  sol->add_option("--in", o.in, "Input .qubo")->required();
  sol->add_option("--method", o.method, "exhaustive | sa");
  sol->add_option("--sweeps", o.sweeps, "Annealing sweeps per restart");
  sol->add_option("--restarts", o.restarts, "Annealing restarts");
  sol->add_option("--seed", o.seed, "Annealing seed");
  sol->add_option("--enum-cap", o.enumCap, "Largest size for exhaustive search");
  sol->add_option("--trace", o.trace, "Trace of a reduced input; projects the result");
  sol->add_option("--original", o.original, "Original .qubo for --trace");
  sol->add_option("--map", o.map, "Variable map; decodes the result");
  sol->add_option("--graph", o.graph, "Edge list for decoding");
  sol->add_option("--graph2", o.graph2, "Second edge list for decoding");
  sol->add_option("--out", o.out, "Output file (default stdout)");

  auto* st = app.add_subcommand("stats", "Coupling and circuit-cost statistics");
  st->add_option("--in", o.in, "Input .qubo")->required();
  st->add_option("--p", o.layers, "QAOA layer count")->check(CLI::PositiveNumber);
  st->add_option("--out", o.out, "Output file (default stdout)");

  auto* bench = app.add_subcommand("bench", "Run a seeded benchmark sweep and write CSV");
  bench->add_option("--problem", o.problem, "maxclique | hamilton | coloring | isomorphism")
      ->required();
  bench->add_option("--sizes", o.sizes, "Vertex range a..b");
  bench->add_option("--seeds", o.seeds, "Seeds per size");
  bench->add_option("--seed", o.seed, "First seed");
  bench->add_option("--budgets", o.budgets, "Comma-separated ancilla budgets, 'max' allowed");
  bench->add_option("--z", o.z, "safe | tight | positive value");
  bench->add_option("--pedge", o.pEdge, "Edge probability")->check(CLI::Range(0.0, 1.0));
  bench->add_option("--colors", o.colors, "Color count (coloring)");
  bench->add_option("--penalty", o.penalty, "Penalty A");
  bench->add_option("--verify-cap", o.verifyCap, "Largest original size to verify");
  bench->add_option("--sweeps", o.sweeps, "Annealing sweeps per restart");
  bench->add_option("--restarts", o.restarts, "Annealing restarts");
  bench->add_option("--emit-dir", o.emitDir, "Directory for .qubo/.trace artifacts");
  bench->add_option("--out", o.out, "Output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return runGenGraph(o, out);
    if (*enc) return runEncode(o, out);
    if (*red) return runReduce(o, out);
    if (*ver) return runVerify(o, out, err);
    if (*sol) return runSolve(o, out);
    if (*st) return runStats(o, out);
    if (*bench) {
      // lighter annealing defaults than `solve`
      if (bench->count("--sweeps") == 0) o.sweeps = 200;
      if (bench->count("--restarts") == 0) o.restarts = 10;
      if (bench->count("--z") == 0) o.z = "tight";
      return runBench(o, out);
    }
  } catch (const std::exception& e) {
    err << "semisym: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace semisym
