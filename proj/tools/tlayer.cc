// Copyright 2026 The tlayer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// tlayer: command-line front end for generation, reduction, expansion and
// benchmarking of T-layer circuits.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "tlayer/algorithms.h"
#include "tlayer/benchmark.h"
#include "tlayer/errors.h"
#include "tlayer/expansion.h"
#include "tlayer/generator.h"
#include "tlayer/report.h"
#include "tlayer/serialize.h"
#include "tlayer/version.h"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace tlayer;

namespace {

constexpr size_t kQuickMaxQubits = 40;
constexpr size_t kDefaultMaxCells = 200000;

// Exit codes.
constexpr int kOk = 0;
constexpr int kFailure = 1;  // runtime error or failed verification
constexpr int kUsage = 2;

struct RunConfig {
  std::string subcommand;
  uint64_t seed = 0;
  std::string seed_source = "default";
  bool quick = false;
  std::string format = "csv";
  int verbosity = 0;
  size_t jobs = 1;

  std::string in, out, log, expect, dataset, records;
  std::string algo = "lookahead";
  std::vector<std::string> algos{"greedy", "dnc", "graph", "lookahead"};
  size_t k = kDefaultLookaheadK;
  size_t factor = 0;
  size_t exact_cap = kDefaultExactCap;
  size_t max_cells = kDefaultMaxCells;
  std::string axis = "expansion";
  std::string range;
  std::string f_range = "2..8";
  bool timings = false;

  size_t max_qubits() const { return quick ? kQuickMaxQubits : 100; }

  // Jobs is left out on purpose: outputs do not depend on it.
  json to_json() const {
    json j{{"tool", "tlayer"}, {"version", kVersion}, {"subcommand", subcommand}, {"seed", seed},
           {"seed_source", seed_source}, {"quick", quick}, {"verbosity", verbosity}};
    json paths = json::object();
    for (auto [name, value] : {std::pair{"in", &in}, {"out", &out}, {"log", &log}, {"expect", &expect},
                               {"dataset", &dataset}, {"records", &records}}) {
      if (!value->empty()) paths[name] = *value;
    }
    j["paths"] = paths;
    if (subcommand == "bench") {
      j["algorithms"] = algos;
      j["k"] = k;
      j["exact_cap"] = exact_cap;
    } else if (subcommand == "sweep") {
      j["axis"] = axis;
      j["range"] = range;
      j["algorithm"] = algo;
      if (axis == "expansion") {
        j["k"] = k;
      } else {
        j["f_range"] = f_range;
      }
      j["max_cells"] = max_cells;
      j["exact_cap"] = exact_cap;
    } else if (subcommand == "generate") {
      j["max_qubits"] = max_qubits();
    }
    return j;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void log_info(const RunConfig& cfg, const std::string& msg) {
  if (cfg.verbosity > 0) std::cerr << "tlayer: " << msg << "\n";
}

uint64_t parse_u64(const std::string& s, const std::string& what) {
  size_t pos = 0;
  uint64_t v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size() || s[0] == '-') throw UsageError(what + ": not an unsigned integer: '" + s + "'");
  return v;
}

// "A..B" inclusive, or a single value.
std::vector<size_t> parse_range(const std::string& s, const std::string& what) {
  size_t dots = s.find("..");
  uint64_t a, b;
  if (dots == std::string::npos) {
    a = b = parse_u64(s, what);
  } else {
    a = parse_u64(s.substr(0, dots), what);
    b = parse_u64(s.substr(dots + 2), what);
  }
  if (a > b) throw UsageError(what + ": empty range '" + s + "'");
  std::vector<size_t> out;
  for (uint64_t v = a; v <= b; ++v) out.push_back(v);
  return out;
}

Algorithm algorithm_from(const std::string& name) {
  std::optional<Algorithm> a = parse_algorithm(name);
  if (!a) throw UsageError("unknown algorithm '" + name + "' (expected greedy, dnc, graph, lookahead or exact)");
  return *a;
}

void prepare_run_dir(const RunConfig& cfg, const fs::path& dir) {
  fs::create_directories(dir);
  write_file(dir / "run_config.json", cfg.to_json().dump(2) + "\n");
}

Dataset dataset_for(const RunConfig& cfg) {
  if (!cfg.dataset.empty()) {
    log_info(cfg, "loading dataset " + cfg.dataset);
    return load_dataset(cfg.dataset);
  }
  log_info(cfg, "generating dataset with seed " + std::to_string(cfg.seed));
  return build_dataset(cfg.seed, cfg.max_qubits(), cfg.jobs);
}

// Prints a table to stdout in the requested format.
void emit(const RunConfig& cfg, const std::string& csv, const json& j) {
  if (cfg.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << csv;
  }
}

int cmd_generate(const RunConfig& cfg) {
  if (cfg.out.empty()) throw UsageError("generate: --out is required");
  Dataset d = build_dataset(cfg.seed, cfg.max_qubits(), cfg.jobs);
  write_dataset(cfg.out, d);
  write_file(fs::path(cfg.out) / "run_config.json", cfg.to_json().dump(2) + "\n");
  json summary{{"circuits", d.entries.size()}, {"digest", d.digest}, {"out", cfg.out}};
  emit(cfg, "circuits,digest\n" + std::to_string(d.entries.size()) + "," + d.digest + "\n", summary);
  return kOk;
}

int cmd_reduce(const RunConfig& cfg) {
  if (cfg.in.empty()) throw UsageError("reduce: --in is required");
  Algorithm algo = algorithm_from(cfg.algo);
  Circuit c = load_circuit(cfg.in);
  ReduceOptions opts{cfg.k, cfg.exact_cap};

  Reduction r;
  std::optional<Circuit> expanded;
  if (cfg.factor != 0) {
    ExpandedReduction er = reduce_with_expansion(c, cfg.factor, algo, opts);
    expanded = std::move(er.expanded);
    r = std::move(er.reduction);
  } else {
    r = reduce(c, algo, opts);
  }
  if (!cfg.out.empty()) save_circuit(cfg.out, r.circuit);
  if (!cfg.log.empty()) write_file(cfg.log, merge_log_to_json(r.result.merge_log).dump(2) + "\n");
  if (expanded && !cfg.log.empty()) {
    // The log applies to the expanded circuit; keep it next to the log.
    save_circuit(fs::path(cfg.log).replace_extension(".expanded.tcir.json"), *expanded);
  }

  json summary{{"algorithm", to_string(algo)},
               {"initial_depth", r.result.initial_depth},
               {"final_depth", r.result.final_depth},
               {"percent_reduction", format_fixed(r.result.percent_reduction)},
               {"merges", r.result.merge_log.size()}};
  if (expanded) {
    summary["factor"] = cfg.factor;
    summary["expanded_depth"] = expanded->depth();
  }
  std::ostringstream csv;
  csv << "algorithm,initial_depth,final_depth,percent_reduction,merges\n"
      << to_string(algo) << "," << r.result.initial_depth << "," << r.result.final_depth << ","
      << format_fixed(r.result.percent_reduction) << "," << r.result.merge_log.size() << "\n";
  emit(cfg, csv.str(), summary);
  return kOk;
}

int cmd_expand(const RunConfig& cfg) {
  if (cfg.in.empty() || cfg.out.empty()) throw UsageError("expand: --in and --out are required");
  if (cfg.factor == 0) throw UsageError("expand: --factor is required");
  Circuit c = load_circuit(cfg.in);
  ExpansionSpec spec;
  Circuit e = expand(c, cfg.factor, &spec);
  save_circuit(cfg.out, e);
  json summary{{"factor", spec.factor},
               {"original_depth", spec.original_depth},
               {"expanded_depth", e.depth()},
               {"padding_rows_used", spec.padding_rows_used}};
  std::ostringstream csv;
  csv << "factor,original_depth,expanded_depth,padding_rows_used\n"
      << spec.factor << "," << spec.original_depth << "," << e.depth() << "," << spec.padding_rows_used << "\n";
  emit(cfg, csv.str(), summary);
  return kOk;
}

int cmd_bench(const RunConfig& cfg) {
  if (cfg.out.empty()) throw UsageError("bench: --out is required");
  RunOptions opts;
  opts.algorithms.clear();
  for (const std::string& name : cfg.algos) opts.algorithms.push_back(algorithm_from(name));
  opts.reduce = {cfg.k, cfg.exact_cap};
  opts.jobs = cfg.jobs;

  fs::path dir = cfg.out;
  prepare_run_dir(cfg, dir);
  Dataset d = dataset_for(cfg);
  log_info(cfg, "running " + std::to_string(d.entries.size()) + " circuits");
  std::vector<ExperimentRecord> records = run_dataset(d.entries, opts);

  BestAlgorithmTable table = best_algorithm_table(records);
  std::vector<ClassBreakdownRow> classes = reducibility_by_class(records);
  write_file(dir / "records.jsonl", records_to_jsonl(records));
  write_file(dir / "table3.csv", best_algorithm_csv(table));
  write_file(dir / "class_breakdown.csv", class_breakdown_csv(classes));
  json meta = report_metadata(table);
  meta["dataset_digest"] = d.digest;
  meta["master_seed"] = d.master_seed;
  write_file(dir / "report_meta.json", meta.dump(2) + "\n");
  if (cfg.format == "json") {
    write_file(dir / "table3.json", best_algorithm_json(table).dump(2) + "\n");
    write_file(dir / "class_breakdown.json", class_breakdown_json(classes).dump(2) + "\n");
  }
  if (cfg.timings) write_file(dir / "timings.csv", timings_csv(records));
  emit(cfg, best_algorithm_csv(table), best_algorithm_json(table));
  return kOk;
}

int cmd_sweep(const RunConfig& cfg) {
  if (cfg.out.empty()) throw UsageError("sweep: --out is required");
  if (cfg.range.empty()) throw UsageError("sweep: --range is required");
  if (cfg.axis != "expansion" && cfg.axis != "partition") {
    throw UsageError("sweep: --axis must be expansion or partition, got '" + cfg.axis + "'");
  }
  SweepOptions opts;
  opts.algorithm = algorithm_from(cfg.algo);
  opts.exact_cap = cfg.exact_cap;
  opts.max_cells = cfg.max_cells;
  opts.jobs = cfg.jobs;
  if (cfg.axis == "expansion") {
    opts.factors = parse_range(cfg.range, "--range");
    opts.ks = {cfg.k};
  } else {
    opts.ks = parse_range(cfg.range, "--range");
    opts.factors = parse_range(cfg.f_range, "--f-range");
  }

  fs::path dir = cfg.out;
  prepare_run_dir(cfg, dir);
  Dataset d = dataset_for(cfg);
  std::vector<ExperimentRecord> records;
  if (!cfg.records.empty()) {
    records = records_from_jsonl(read_file(cfg.records));
  } else {
    log_info(cfg, "classifying reducibility with the heuristics");
    RunOptions ro;
    ro.reduce.k = kDefaultLookaheadK;
    ro.jobs = cfg.jobs;
    records = run_dataset(d.entries, ro);
    write_file(dir / "records.jsonl", records_to_jsonl(records));
  }
  std::vector<DatasetEntry> targets = non_reducible_entries(d.entries, records);
  log_info(cfg, "sweeping " + std::to_string(targets.size()) + " non-reducible circuits");
  std::vector<SweepObservation> obs = run_sweep(targets, opts);
  SweepResult s = fold_sweep(obs);

  write_file(dir / "sweep.csv", sweep_csv(s));
  write_file(dir / "table4.csv", partition_table_csv(s));
  write_file(dir / "sweep_observations.csv", sweep_observations_csv(obs));
  if (cfg.format == "json") {
    write_file(dir / "sweep.json", sweep_json(s).dump(2) + "\n");
    write_file(dir / "table4.json", partition_table_json(s).dump(2) + "\n");
  }
  emit(cfg, partition_table_csv(s), partition_table_json(s));
  return kOk;
}

int cmd_classify(const RunConfig& cfg) {
  if (cfg.in.empty()) throw UsageError("classify: --in is required");
  DatasetStats stats;
  if (!cfg.dataset.empty()) {
    stats = stats_from_manifest(json::parse(read_file(fs::path(cfg.dataset) / "manifest.json")));
  } else {
    // Tertiles of the seeded grid follow from its parameters alone.
    std::vector<size_t> counts;
    std::vector<double> densities;
    for (const CircuitParams& p : parameter_grid(cfg.seed, cfg.max_qubits())) {
      counts.push_back(p.n_columns);
      densities.push_back(static_cast<double>(p.n_tgates) / static_cast<double>(p.n_qubits * p.n_columns));
    }
    stats = compute_stats(counts, densities);
  }
  Circuit c = load_circuit(cfg.in);
  ClassLabel label = classify(c, stats);
  json out{{"label", label.str()},
           {"n_qubits", c.n_qubits},
           {"n_columns", c.depth()},
           {"t_count", c.t_count()},
           {"density", t_gate_density(c)}};
  std::ostringstream csv;
  csv << "label,n_qubits,n_columns,t_count,density\n"
      << label.str() << "," << c.n_qubits << "," << c.depth() << "," << c.t_count() << ","
      << format_fixed(t_gate_density(c)) << "\n";
  emit(cfg, csv.str(), out);
  return kOk;
}

int cmd_verify_log(const RunConfig& cfg) {
  if (cfg.in.empty() || cfg.log.empty() || cfg.expect.empty()) {
    throw UsageError("verify-log: --in, --log and --expect are required");
  }
  Circuit in = load_circuit(cfg.in);
  Circuit expected = load_circuit(cfg.expect);
  MergeLog log;
  try {
    log = merge_log_from_json(json::parse(read_file(cfg.log)));
  } catch (const json::exception& e) {
    throw ParseError(cfg.log + ": " + e.what());
  }
  Circuit got;
  try {
    got = replay(in, log);
  } catch (const ReplayError& e) {
    std::cerr << "tlayer: verify-log: FAIL: " << e.what() << "\n";
    return kFailure;
  }
  if (got != expected) {
    std::cerr << "tlayer: verify-log: FAIL: replay gives " << got.depth() << " columns that differ from "
              << cfg.expect << " (" << expected.depth() << " columns)\n";
    return kFailure;
  }
  std::cout << "verify-log: OK (" << log.size() << " merges, " << in.depth() << " -> " << got.depth()
            << " columns)\n";
  return kOk;
}

void resolve_seed(RunConfig& cfg, bool seed_given) {
  if (seed_given) {
    cfg.seed_source = "flag";
    return;
  }
  if (const char* env = std::getenv("TLAYER_SEED"); env && *env) {
    cfg.seed = parse_u64(env, "TLAYER_SEED");
    cfg.seed_source = "env";
  }
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Generate, reduce and benchmark T-layer circuits."};
  app.set_version_flag("--version", std::string("tlayer ") + kVersion);
  app.require_subcommand(1);

  auto* seed_opt = app.add_option("--seed", cfg.seed, "Master seed (falls back to $TLAYER_SEED, then 0)");
  app.add_option("--jobs", cfg.jobs, "Worker threads for bench and sweep")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Table format on stdout")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--quick", cfg.quick, "Use the q <= 40 subgrid");
  app.add_flag("-v,--verbose", cfg.verbosity, "Progress on stderr");

  auto* gen = app.add_subcommand("generate", "Write the seeded dataset as .tcir.json files plus manifest.json");
  gen->add_option("--out", cfg.out, "Dataset directory");

  auto* red = app.add_subcommand("reduce", "Reduce one circuit");
  red->add_option("--algo", cfg.algo, "greedy, dnc, graph, lookahead or exact");
  red->add_option("--k", cfg.k, "Lookahead partition size");
  red->add_option("--in", cfg.in, "Input circuit");
  red->add_option("--out", cfg.out, "Output circuit");
  red->add_option("--log", cfg.log, "Merge log output (JSON)");
  red->add_option("--expand", cfg.factor, "Expand by this factor first");
  red->add_option("--exact-cap", cfg.exact_cap, "Largest column count exact search accepts");

  auto* exp = app.add_subcommand("expand", "Split every column over qubit blocks");
  exp->add_option("--factor", cfg.factor, "Expansion factor (>= 2)");
  exp->add_option("--in", cfg.in, "Input circuit");
  exp->add_option("--out", cfg.out, "Output circuit");

  auto* bench = app.add_subcommand("bench", "Run the heuristics over a dataset");
  bench->add_option("--dataset", cfg.dataset, "Dataset directory (default: generate from --seed)");
  bench->add_option("--algos", cfg.algos, "Comma-separated algorithms")->delimiter(',');
  bench->add_option("--k", cfg.k, "Lookahead partition size");
  bench->add_option("--exact-cap", cfg.exact_cap, "Largest column count exact search accepts");
  bench->add_option("--out", cfg.out, "Run directory");
  bench->add_flag("--timings", cfg.timings, "Also write wall-clock timings.csv");

  auto* sweep = app.add_subcommand("sweep", "Expansion or partition-size sweep over non-reducible circuits");
  sweep->add_option("--axis", cfg.axis, "expansion (range over f) or partition (range over k)");
  sweep->add_option("--range", cfg.range, "A..B inclusive");
  sweep->add_option("--f-range", cfg.f_range, "Factors tried per k on the partition axis");
  sweep->add_option("--k", cfg.k, "Lookahead partition size on the expansion axis");
  sweep->add_option("--algo", cfg.algo, "Algorithm after expansion");
  sweep->add_option("--exact-cap", cfg.exact_cap, "Largest column count exact search accepts");
  sweep->add_option("--dataset", cfg.dataset, "Dataset directory (default: generate from --seed)");
  sweep->add_option("--records", cfg.records, "records.jsonl from a previous bench run");
  sweep->add_option("--max-cells", cfg.max_cells, "Skip trials with qubits * depth * f above this; 0 = no cap");
  sweep->add_option("--out", cfg.out, "Run directory");

  auto* cls = app.add_subcommand("classify", "Print the depth-density-qubit class of a circuit");
  cls->add_option("--in", cfg.in, "Input circuit");
  cls->add_option("--dataset", cfg.dataset, "Take tertile cuts from this dataset's manifest");

  auto* ver = app.add_subcommand("verify-log", "Replay a merge log and compare with the expected output");
  ver->add_option("--in", cfg.in, "Input circuit");
  ver->add_option("--log", cfg.log, "Merge log (JSON)");
  ver->add_option("--expect", cfg.expect, "Expected output circuit");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    resolve_seed(cfg, seed_opt->count() > 0);
    cfg.subcommand = app.get_subcommands().front()->get_name();
    if (cfg.subcommand == "generate") return cmd_generate(cfg);
    if (cfg.subcommand == "reduce") return cmd_reduce(cfg);
    if (cfg.subcommand == "expand") return cmd_expand(cfg);
    if (cfg.subcommand == "bench") return cmd_bench(cfg);
    if (cfg.subcommand == "sweep") return cmd_sweep(cfg);
    if (cfg.subcommand == "classify") return cmd_classify(cfg);
    return cmd_verify_log(cfg);
  } catch (const UsageError& e) {
    std::cerr << "tlayer: " << e.what() << "\n";
    return kUsage;
  } catch (const SizeCapError& e) {
    std::cerr << "tlayer: size cap: " << e.what() << "\n";
    return kFailure;
  } catch (const ParseError& e) {
    std::cerr << "tlayer: malformed input: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "tlayer: error: " << e.what() << "\n";
    return kFailure;
  }
}
