// Copyright 2026 Minorcast Contributors
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

#include "minorcast/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "minorcast/decomposition.hpp"
#include "minorcast/lp_export.hpp"
#include "minorcast/monolithic.hpp"
#include "minorcast/topology.hpp"
#include "minorcast/verify.hpp"
#include "minorcast/version.hpp"

namespace minorcast {

namespace {

using nlohmann::ordered_json;

class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitTimeout = 3;

// The reference search refuses larger targets; documented cap.
constexpr int kOracleTargetCap = 10;

long parse_long(const std::string& text, const std::string& what) {
  char* end = nullptr;
  const long value = std::strtol(text.c_str(), &end, 10);
  if (end == text.c_str() || *end != '\0')
    throw CliError("expected an integer for " + what + ", got '" + text + "'");
  return value;
}

double parse_double(const std::string& text, const std::string& what) {
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0')
    throw CliError("expected a number for " + what + ", got '" + text + "'");
  return value;
}

std::uint64_t parse_seed(const std::string& text, const std::string& what) {
  char* end = nullptr;
  const unsigned long long value = std::strtoull(text.c_str(), &end, 10);
  if (end == text.c_str() || *end != '\0')
    throw CliError("expected a seed for " + what + ", got '" + text + "'");
  return value;
}

// --seed flag beats MINORCAST_SEED beats 0.
std::uint64_t default_seed(bool seed_given, std::uint64_t seed_flag) {
  if (seed_given) return seed_flag;
  if (const char* env = std::getenv("MINORCAST_SEED"))
    return parse_seed(env, "MINORCAST_SEED");
  return 0;
}

// Key=value pairs of a generator spec; every key must be consumed.
class SpecArgs {
 public:
  SpecArgs(const std::string& family, const std::string& body)
      : family_(family) {
    std::stringstream stream(body);
    std::string item;
    while (std::getline(stream, item, ',')) {
      if (item.empty()) continue;
      const auto eq = item.find('=');
      if (eq == std::string::npos)
        throw CliError("malformed '" + family_ + "' spec item '" + item +
                       "', expected key=value");
      const std::string key = item.substr(0, eq);
      if (!pairs_.emplace(key, item.substr(eq + 1)).second)
        throw CliError("duplicate key '" + key + "' in '" + family_ +
                       "' spec");
    }
  }

  long take_long(const std::string& key, long fallback) {
    auto it = pairs_.find(key);
    if (it == pairs_.end()) return fallback;
    const long value = parse_long(it->second, "'" + key + "'");
    pairs_.erase(it);
    return value;
  }

  double take_double(const std::string& key, double fallback) {
    auto it = pairs_.find(key);
    if (it == pairs_.end()) return fallback;
    const double value = parse_double(it->second, "'" + key + "'");
    pairs_.erase(it);
    return value;
  }

  std::uint64_t take_seed(std::uint64_t fallback) {
    auto it = pairs_.find("seed");
    if (it == pairs_.end()) return fallback;
    const std::uint64_t value = parse_seed(it->second, "'seed'");
    pairs_.erase(it);
    return value;
  }

  bool has(const std::string& key) const { return pairs_.count(key) > 0; }

  void finish() const {
    if (!pairs_.empty())
      throw CliError("unknown key '" + pairs_.begin()->first + "' in '" +
                     family_ + "' spec");
  }

 private:
  std::string family_;
  std::map<std::string, std::string> pairs_;
};

}  // namespace

Graph resolve_graph(const std::string& arg, std::uint64_t default_seed) {
  const auto colon = arg.find(':');
  if (colon == std::string::npos) return load_graph_file(arg);
  const std::string family = arg.substr(0, colon);
  SpecArgs spec(family, arg.substr(colon + 1));
  if (family == "chimera") {
    ChimeraSpec c;
    c.L = static_cast<int>(spec.take_long("L", c.L));
    c.M = static_cast<int>(spec.take_long("M", c.M));
    c.N = static_cast<int>(spec.take_long("N", c.N));
    spec.finish();
    return gen_chimera(c);
  }
  if (family == "pegasus") {
    PegasusSpec p;
    p.L = static_cast<int>(spec.take_long("L", p.L));
    p.M = static_cast<int>(spec.take_long("M", p.M));
    p.N = static_cast<int>(spec.take_long("N", p.N));
    p.O = static_cast<int>(spec.take_long("O", p.O));
    spec.finish();
    return gen_pegasus(p);
  }
  if (family == "er") {
    if (!spec.has("nu") || !spec.has("p"))
      throw CliError("'er' spec needs nu= and p=");
    ErdosRenyiSpec e;
    e.nu = static_cast<int>(spec.take_long("nu", 0));
    e.p = spec.take_double("p", 0.0);
    e.seed = spec.take_seed(default_seed);
    spec.finish();
    return gen_erdos_renyi(e);
  }
  if (family == "structured") {
    StructuredSpec s;
    s.zeta = static_cast<int>(spec.take_long("zeta", s.zeta));
    s.p_inter = spec.take_double("p_inter", s.p_inter);
    s.p_intra = spec.take_double("p_intra", s.p_intra);
    s.cells = static_cast<int>(spec.take_long("cells", s.cells));
    s.seed = spec.take_seed(default_seed);
    spec.finish();
    return gen_structured(s).graph;
  }
  throw CliError("unknown generator family '" + family + "'");
}

namespace {

Objective parse_objective(const std::string& text) {
  if (text == "min-size" || text == "min_size") return Objective::min_size;
  if (text == "feasible" || text == "feasibility")
    return Objective::feasibility;
  throw CliError("unknown objective '" + text +
                 "', expected min-size or feasible");
}

void write_text_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError("cannot open '" + path + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw CliError("failed writing '" + path + "'");
}

ordered_json models_to_json(const Embedding& embedding) {
  ordered_json models = ordered_json::object();
  for (const auto& [y, model] : embedding.vertex_models)
    models[std::to_string(y)] = model;
  return models;
}

struct EmbedConfig {
  std::string target;
  std::string source;
  std::string method = "monolithic";
  std::string objective = "min-size";
  int k = 0;
  double time_limit = 0.0;
  std::int64_t node_limit = 0;
  bool seed_given = false;
  std::uint64_t seed = 0;
  std::string output;
};

// Runs one embedding task and renders the result JSON. Shared by the
// embed/oracle subcommands and the bench harness.
struct EmbedRun {
  EmbedResult result;
  ordered_json json;
  int exit_code = kExitOk;
};

EmbedRun run_embed(const EmbedConfig& cfg) {
  const std::uint64_t seed = default_seed(cfg.seed_given, cfg.seed);
  const Objective objective = parse_objective(cfg.objective);
  EmbedProblem problem;
  problem.target = resolve_graph(cfg.target, seed);
  problem.source = resolve_graph(cfg.source, seed);
  problem.k = cfg.k;
  problem.objective = objective;
  problem.limits.time_limit_s = cfg.time_limit;
  problem.limits.node_limit = cfg.node_limit;

  EmbedRun run;
  const auto start = std::chrono::steady_clock::now();
  bool k_restricted = false;
  if (cfg.method == "monolithic") {
    run.result = solve_monolithic(problem);
    k_restricted = true;
  } else if (cfg.method == "decomposition") {
    run.result = solve_decomposition(problem);
    k_restricted = cfg.k > 0;
  } else if (cfg.method == "oracle") {
    const int m = problem.source.num_vertices();
    const int n = problem.target.num_vertices();
    run.result.trivially_infeasible = m > n;
    std::optional<Embedding> found =
        m > n ? std::nullopt
              : oracle_min_embedding(problem.target, problem.source,
                                     kOracleTargetCap);
    if (found) {
      run.result.embedding = std::move(found);
      run.result.outcome.status = SolveStatus::optimal;
      run.result.outcome.objective_value = run.result.embedding->total_size();
      run.result.outcome.best_bound = *run.result.outcome.objective_value;
    } else {
      run.result.outcome.status = SolveStatus::infeasible;
      run.result.outcome.best_bound = kPosInf;
    }
  } else {
    throw CliError("unknown method '" + cfg.method + "'");
  }
  const double wall_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();

  // Never report an embedding that does not check out from first
  // principles, regardless of what the solver believes.
  if (run.result.embedding) {
    const VerifyReport report = verify_embedding(
        *run.result.embedding, problem.target, problem.source);
    if (!report.ok())
      throw InternalConsistencyError("result failed re-verification: " +
                                     report.violations.front().message);
  }

  const SolveOutcome& outcome = run.result.outcome;
  ordered_json& out = run.json;
  out["tool"] = kToolName;
  out["version"] = kToolVersion;
  out["method"] = cfg.method;
  out["objective"] = to_string(objective);
  out["status"] = to_string(outcome.status);
  if (cfg.method == "oracle") {
    out["k"] = nullptr;
    out["k_restricted"] = false;
  } else {
    out["k"] = run.result.k;
    out["k_restricted"] = k_restricted;
  }
  out["trivially_infeasible"] = run.result.trivially_infeasible;
  if (run.result.embedding)
    out["size"] = run.result.embedding->total_size();
  else
    out["size"] = nullptr;
  if (outcome.objective_value)
    out["objective_value"] = *outcome.objective_value;
  else
    out["objective_value"] = nullptr;
  if (outcome.best_bound == kPosInf || outcome.best_bound == kNegInf)
    out["best_bound"] = nullptr;
  else
    out["best_bound"] = outcome.best_bound;
  if (outcome.objective_value && outcome.best_bound != kPosInf &&
      outcome.best_bound != kNegInf && *outcome.objective_value > 0) {
    out["gap"] = static_cast<double>(*outcome.objective_value -
                                     outcome.best_bound) /
                 static_cast<double>(*outcome.objective_value);
  } else {
    out["gap"] = nullptr;
  }
  out["seed"] = seed;
  out["source"] = cfg.source;
  out["target"] = cfg.target;
  if (run.result.embedding)
    out["vertex_models"] = models_to_json(*run.result.embedding);
  else
    out["vertex_models"] = nullptr;
  out["stats"] = ordered_json{{"nodes", outcome.stats.nodes},
                              {"propagations", outcome.stats.propagations},
                              {"iterations", run.result.iterations},
                              {"cuts", run.result.cuts},
                              {"wall_time_ms", wall_ms}};

  switch (outcome.status) {
    case SolveStatus::infeasible:
      run.exit_code = kExitInfeasible;
      break;
    case SolveStatus::timeout:
      run.exit_code = kExitTimeout;
      break;
    default:
      run.exit_code = kExitOk;
  }
  return run;
}

int cmd_embed(const EmbedConfig& cfg) {
  EmbedRun run = run_embed(cfg);
  write_text_output(cfg.output, run.json.dump(2) + "\n");
  return run.exit_code;
}

struct GenConfig {
  std::string family;
  int L = 4, M = 1, N = 1, O = 3;
  int nu = 0;
  bool nu_given = false;
  double p = 0.5;
  bool p_given = false;
  int zeta = 0;
  double p_inter = 0.5;
  double p_intra = 0.5;
  int cells = 2;
  bool seed_given = false;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_gen(const GenConfig& cfg) {
  const std::uint64_t seed = default_seed(cfg.seed_given, cfg.seed);
  Graph graph;
  ordered_json meta;
  meta["tool"] = kToolName;
  meta["version"] = kToolVersion;
  meta["family"] = cfg.family;
  ordered_json params = ordered_json::object();

  if (cfg.family == "chimera") {
    graph = gen_chimera({cfg.L, cfg.M, cfg.N});
    params["L"] = cfg.L;
    params["M"] = cfg.M;
    params["N"] = cfg.N;
  } else if (cfg.family == "pegasus") {
    graph = gen_pegasus({cfg.L, cfg.M, cfg.N, cfg.O});
    params["L"] = cfg.L;
    params["M"] = cfg.M;
    params["N"] = cfg.N;
    params["O"] = cfg.O;
  } else if (cfg.family == "er") {
    if (!cfg.nu_given || !cfg.p_given)
      throw CliError("gen er needs --nu and --p");
    graph = gen_erdos_renyi({cfg.nu, cfg.p, seed});
    params["nu"] = cfg.nu;
    params["p"] = cfg.p;
    params["seed"] = seed;
  } else if (cfg.family == "structured") {
    StructuredSpec spec{cfg.zeta, cfg.p_inter, cfg.p_intra, cfg.cells, seed};
    StructuredGraph out = gen_structured(spec);
    graph = out.graph;
    params["zeta"] = cfg.zeta;
    params["p_inter"] = cfg.p_inter;
    params["p_intra"] = cfg.p_intra;
    params["cells"] = cfg.cells;
    params["seed"] = seed;
    meta["parameters"] = params;
    meta["num_vertices"] = graph.num_vertices();
    meta["num_edges"] = graph.num_edges();
    meta["witness"] = out.witness;
    meta["attachment_forced"] = out.attachment_forced;
    meta["retries"] = out.retries;
    meta["chimera"] = ordered_json{
        {"L", 4},
        {"M", cfg.cells == 4 ? 2 : 1},
        {"N", 2},
        {"num_vertices", out.chimera.num_vertices()},
        {"num_edges", out.chimera.num_edges()}};
  } else {
    throw CliError("unknown family '" + cfg.family +
                   "', expected chimera, pegasus, er, or structured");
  }

  if (cfg.family != "structured") {
    meta["parameters"] = params;
    meta["num_vertices"] = graph.num_vertices();
    meta["num_edges"] = graph.num_edges();
  }

  save_graph_file(graph, cfg.output);
  write_text_output(cfg.output + ".meta.json", meta.dump(2) + "\n");
  return kExitOk;
}

struct ExportConfig {
  std::string target;
  std::string source;
  std::string method = "monolithic";
  std::string objective = "min-size";
  int k = 0;
  bool seed_given = false;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_export(const ExportConfig& cfg) {
  const std::uint64_t seed = default_seed(cfg.seed_given, cfg.seed);
  const Graph target = resolve_graph(cfg.target, seed);
  const Graph source = resolve_graph(cfg.source, seed);
  const Objective objective = parse_objective(cfg.objective);
  BuiltModel built;
  if (cfg.method == "monolithic") {
    built = build_monolithic(target, source, cfg.k > 0 ? cfg.k : 3, objective);
  } else if (cfg.method == "decomposition" || cfg.method == "master") {
    built = build_master(target, source,
                         cfg.k > 0 ? cfg.k : target.num_vertices(), objective);
  } else {
    throw CliError("export supports methods monolithic and decomposition");
  }
  write_text_output(cfg.output, export_lp(built.model));
  return kExitOk;
}

struct VerifyConfig {
  std::string embedding_path;
  std::string target;
  std::string source;
  bool seed_given = false;
  std::uint64_t seed = 0;
};

Embedding load_embedding_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError("cannot open '" + path + "'");
  ordered_json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw CliError("cannot parse '" + path + "': " + e.what());
  }
  if (!doc.contains("vertex_models") || !doc["vertex_models"].is_object())
    throw CliError("'" + path + "' has no vertex_models object");
  Embedding emb;
  for (const auto& [key, value] : doc["vertex_models"].items()) {
    const int y = static_cast<int>(parse_long(key, "vertex_models key"));
    if (!value.is_array())
      throw CliError("vertex_models[" + key + "] is not an array");
    std::vector<int> model;
    for (const auto& entry : value) {
      if (!entry.is_number_integer())
        throw CliError("vertex_models[" + key + "] has a non-integer entry");
      model.push_back(entry.get<int>());
    }
    emb.vertex_models[y] = std::move(model);
  }
  return emb;
}

int cmd_verify(const VerifyConfig& cfg) {
  const std::uint64_t seed = default_seed(cfg.seed_given, cfg.seed);
  const Graph target = resolve_graph(cfg.target, seed);
  const Graph source = resolve_graph(cfg.source, seed);
  const Embedding emb = load_embedding_json(cfg.embedding_path);
  const VerifyReport report = verify_embedding(emb, target, source);
  if (report.ok()) {
    std::cout << "valid: size " << emb.total_size() << "\n";
    return kExitOk;
  }
  for (const Violation& v : report.violations)
    std::cout << to_string(v.kind) << ": " << v.message << "\n";
  return kExitInfeasible;
}

struct BenchConfig {
  std::string manifest;
  std::string output;
  int jobs = 1;
};

std::string csv_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  return buffer;
}

// One manifest row -> one CSV line; failures become status "error" rows so
// the harness always completes.
std::string bench_row(const ordered_json& row, size_t index) {
  std::string id = "row" + std::to_string(index);
  if (row.contains("id")) {
    if (row["id"].is_string())
      id = row["id"].get<std::string>();
    else
      id = row["id"].dump();
  }
  EmbedConfig cfg;
  std::string line;
  try {
    if (!row.contains("target") || !row.contains("source"))
      throw CliError("manifest row needs target and source");
    cfg.target = row["target"].get<std::string>();
    cfg.source = row["source"].get<std::string>();
    if (row.contains("method")) cfg.method = row["method"].get<std::string>();
    if (row.contains("objective"))
      cfg.objective = row["objective"].get<std::string>();
    if (row.contains("k")) cfg.k = row["k"].get<int>();
    if (row.contains("time_limit"))
      cfg.time_limit = row["time_limit"].get<double>();
    if (row.contains("node_limit"))
      cfg.node_limit = row["node_limit"].get<std::int64_t>();
    if (row.contains("seed")) {
      cfg.seed = row["seed"].get<std::uint64_t>();
      cfg.seed_given = true;
    }

    const auto start = std::chrono::steady_clock::now();
    EmbedRun run = run_embed(cfg);
    const double time_ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - start)
            .count();

    const SolveOutcome& outcome = run.result.outcome;
    line = id + "," + cfg.method + "," +
           to_string(parse_objective(cfg.objective)) + "," +
           to_string(outcome.status) + ",";
    if (run.result.embedding)
      line += std::to_string(run.result.embedding->total_size());
    line += ",";
    if (outcome.best_bound != kPosInf && outcome.best_bound != kNegInf)
      line += std::to_string(outcome.best_bound);
    line += ",";
    if (!run.json["gap"].is_null())
      line += csv_double(run.json["gap"].get<double>());
    line += "," + csv_double(time_ms) + "," +
            std::to_string(run.result.iterations) + "," +
            std::to_string(run.result.cuts);
  } catch (const std::exception& e) {
    std::string reason = e.what();
    for (char& c : reason)
      if (c == ',' || c == '\n') c = ';';
    line = id + "," + cfg.method + ",,error,,,,,,0";
    std::cerr << "bench row " << id << " failed: " << reason << "\n";
  }
  return line;
}

int cmd_bench(const BenchConfig& cfg) {
  std::ifstream in(cfg.manifest);
  if (!in) throw CliError("cannot open '" + cfg.manifest + "'");
  ordered_json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw CliError("cannot parse '" + cfg.manifest + "': " + e.what());
  }
  const ordered_json* rows = &doc;
  if (doc.is_object()) {
    if (!doc.contains("runs") || !doc["runs"].is_array())
      throw CliError("manifest object needs a runs array");
    rows = &doc["runs"];
  } else if (!doc.is_array()) {
    throw CliError("manifest must be an array or an object with runs");
  }

  const size_t count = rows->size();
  std::vector<std::string> lines(count);
  std::atomic<size_t> next{0};
  const int jobs =
      std::max(1, std::min<int>(cfg.jobs, static_cast<int>(count)));
  auto worker = [&] {
    for (;;) {
      const size_t idx = next.fetch_add(1);
      if (idx >= count) return;
      lines[idx] = bench_row((*rows)[idx], idx);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::string csv = "id,method,objective,status,size,bound,gap,time_ms,"
                    "iterations,cuts\n";
  for (const std::string& line : lines) csv += line + "\n";
  write_text_output(cfg.output, csv);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"minor-embedding toolkit: compute, prove optimal, or prove "
               "infeasible minor embeddings of a source graph into a target "
               "graph",
               kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  GenConfig gen;
  CLI::App* gen_cmd =
      app.add_subcommand("gen", "Generate a graph file plus metadata");
  gen_cmd->add_option("family", gen.family, "chimera|pegasus|er|structured")
      ->required();
  gen_cmd->add_option("-L", gen.L, "cell shore size");
  gen_cmd->add_option("-M", gen.M, "cell grid rows");
  gen_cmd->add_option("-N", gen.N, "cell grid columns");
  gen_cmd->add_option("-O", gen.O, "stacked layers");
  auto* nu_opt = gen_cmd->add_option("--nu", gen.nu, "vertex count");
  auto* p_opt = gen_cmd->add_option("--p", gen.p, "edge probability");
  gen_cmd->add_option("--zeta", gen.zeta, "contracted edges");
  gen_cmd->add_option("--p-inter", gen.p_inter,
                      "biclique cross-edge probability");
  gen_cmd->add_option("--p-intra", gen.p_intra,
                      "attachment coupler probability");
  gen_cmd->add_option("--cells", gen.cells, "blocks: 2 or 4");
  auto* gen_seed = gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("-o,--output", gen.output, "graph file to write")
      ->required();

  EmbedConfig embed;
  CLI::App* embed_cmd =
      app.add_subcommand("embed", "Solve one embedding instance");
  embed_cmd->add_option("--target", embed.target, "target graph file or spec")
      ->required();
  embed_cmd->add_option("--source", embed.source, "source graph file or spec")
      ->required();
  embed_cmd
      ->add_option("--method", embed.method,
                   "monolithic|decomposition|oracle")
      ->check(CLI::IsMember({"monolithic", "decomposition", "oracle"}));
  embed_cmd->add_option("--objective", embed.objective, "min-size|feasible");
  embed_cmd->add_option("-k,--k", embed.k,
                        "fiber size cap; 0 = method default");
  embed_cmd->add_option("--time-limit", embed.time_limit,
                        "wall-clock budget in seconds; 0 = none");
  embed_cmd->add_option("--node-limit", embed.node_limit,
                        "search node budget; 0 = none");
  auto* embed_seed = embed_cmd->add_option("--seed", embed.seed,
                                           "seed for generator specs");
  embed_cmd->add_option("-o,--output", embed.output,
                        "embedding JSON path (default stdout)");

  EmbedConfig oracle;
  oracle.method = "oracle";
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "Reference exhaustive search (small targets only)");
  oracle_cmd
      ->add_option("--target", oracle.target, "target graph file or spec")
      ->required();
  oracle_cmd
      ->add_option("--source", oracle.source, "source graph file or spec")
      ->required();
  auto* oracle_seed = oracle_cmd->add_option("--seed", oracle.seed,
                                             "seed for generator specs");
  oracle_cmd->add_option("-o,--output", oracle.output,
                         "embedding JSON path (default stdout)");

  ExportConfig exp;
  CLI::App* export_cmd =
      app.add_subcommand("export", "Write a model in LP text format");
  export_cmd->add_option("--target", exp.target, "target graph file or spec")
      ->required();
  export_cmd->add_option("--source", exp.source, "source graph file or spec")
      ->required();
  export_cmd->add_option("--method", exp.method,
                         "monolithic|decomposition");
  export_cmd->add_option("--objective", exp.objective, "min-size|feasible");
  export_cmd->add_option("-k,--k", exp.k, "fiber size cap; 0 = method default");
  auto* export_seed =
      export_cmd->add_option("--seed", exp.seed, "seed for generator specs");
  export_cmd->add_option("-o,--output", exp.output,
                         "LP file path (default stdout)");

  VerifyConfig verify;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Check an embedding JSON from first principles");
  verify_cmd
      ->add_option("--embedding", verify.embedding_path, "embedding JSON")
      ->required();
  verify_cmd->add_option("--target", verify.target, "target graph file or spec")
      ->required();
  verify_cmd->add_option("--source", verify.source, "source graph file or spec")
      ->required();
  auto* verify_seed = verify_cmd->add_option("--seed", verify.seed,
                                             "seed for generator specs");

  BenchConfig bench;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Run a manifest of instances to CSV");
  bench_cmd->add_option("--manifest", bench.manifest, "manifest JSON file")
      ->required();
  bench_cmd->add_option("-o,--output", bench.output,
                        "CSV path (default stdout)");
  bench_cmd->add_option("--jobs", bench.jobs, "parallel workers")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> argv_storage;
  argv_storage.push_back(kToolName);
  for (const std::string& a : args) argv_storage.push_back(a);
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()),
              const_cast<char**>(argv.data()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*gen_cmd) {
      gen.nu_given = nu_opt->count() > 0;
      gen.p_given = p_opt->count() > 0;
      gen.seed_given = gen_seed->count() > 0;
      return cmd_gen(gen);
    }
    if (*embed_cmd) {
      embed.seed_given = embed_seed->count() > 0;
      return cmd_embed(embed);
    }
    if (*oracle_cmd) {
      oracle.seed_given = oracle_seed->count() > 0;
      return cmd_embed(oracle);
    }
    if (*export_cmd) {
      exp.seed_given = export_seed->count() > 0;
      return cmd_export(exp);
    }
    if (*verify_cmd) {
      verify.seed_given = verify_seed->count() > 0;
      return cmd_verify(verify);
    }
    if (*bench_cmd) return cmd_bench(bench);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace minorcast
