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

#include "tlayer/report.h"

#include <cstdio>
#include <sstream>

#include "tlayer/errors.h"
#include "tlayer/serialize.h"

namespace tlayer {

using nlohmann::json;

std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

namespace {

json params_to_json(const CircuitParams& p) {
  return json{{"n_qubits", p.n_qubits}, {"n_columns", p.n_columns}, {"n_tgates", p.n_tgates}, {"seed", p.seed}};
}

CircuitParams params_from_json(const json& j) {
  return {j.at("n_qubits").get<size_t>(), j.at("n_columns").get<size_t>(), j.at("n_tgates").get<size_t>(),
          j.at("seed").get<uint64_t>()};
}

ClassLabel label_from_json(const json& j) {
  auto l = ClassLabel::parse(j.get<std::string>());
  if (!l) throw ParseError("unknown class label " + j.dump());
  return *l;
}

}  // namespace

json record_to_json(const ExperimentRecord& r) {
  json results = json::array();
  for (const AlgorithmOutcome& o : r.results) {
    json jo{{"algorithm", to_string(o.algorithm)},
            {"initial_depth", o.initial_depth},
            {"final_depth", o.final_depth},
            {"percent_reduction", o.percent_reduction},
            {"merges", o.merges},
            {"replay_verified", o.replay_verified}};
    if (!o.ok()) jo["error"] = o.error;
    results.push_back(std::move(jo));
  }
  return json{{"id", r.id},
              {"params", params_to_json(r.params)},
              {"label", r.label.str()},
              {"reducible", r.reducible},
              {"results", std::move(results)}};
}

ExperimentRecord record_from_json(const json& j) {
  ExperimentRecord r;
  r.id = j.at("id").get<size_t>();
  r.params = params_from_json(j.at("params"));
  r.label = label_from_json(j.at("label"));
  r.reducible = j.at("reducible").get<bool>();
  for (const json& jo : j.at("results")) {
    AlgorithmOutcome o;
    auto algo = parse_algorithm(jo.at("algorithm").get<std::string>());
    if (!algo) throw ParseError("unknown algorithm " + jo.at("algorithm").dump());
    o.algorithm = *algo;
    o.initial_depth = jo.at("initial_depth").get<size_t>();
    o.final_depth = jo.at("final_depth").get<size_t>();
    o.percent_reduction = jo.at("percent_reduction").get<double>();
    o.merges = jo.at("merges").get<size_t>();
    o.replay_verified = jo.at("replay_verified").get<bool>();
    if (jo.contains("error")) o.error = jo["error"].get<std::string>();
    r.results.push_back(std::move(o));
  }
  return r;
}

std::string records_to_jsonl(std::span<const ExperimentRecord> records) {
  std::string out;
  for (const ExperimentRecord& r : records) {
    out += record_to_json(r).dump();
    out.push_back('\n');
  }
  return out;
}

std::vector<ExperimentRecord> records_from_jsonl(std::string_view text) {
  std::vector<ExperimentRecord> out;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty()) continue;
    try {
      out.push_back(record_from_json(json::parse(line)));
    } catch (const json::exception& e) {
      throw ParseError("records line " + std::to_string(line_no) + ": " + e.what());
    } catch (const ParseError& e) {
      throw ParseError("records line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::string timings_csv(std::span<const ExperimentRecord> records) {
  std::ostringstream out;
  out << "id,algorithm,elapsed_ms\n";
  for (const ExperimentRecord& r : records) {
    for (const AlgorithmOutcome& o : r.results) {
      out << r.id << ',' << to_string(o.algorithm) << ','
          << format_fixed(std::chrono::duration<double, std::milli>(o.elapsed).count()) << '\n';
    }
  }
  return out.str();
}

std::string best_algorithm_csv(const BestAlgorithmTable& t) {
  std::ostringstream out;
  out << "algorithm,tie_cases,tie_percent,tie_avg_reduction,strict_cases,strict_percent,strict_avg_reduction,"
         "avg_reduction_all_reducible,reducible,total\n";
  for (const BestAlgorithmRow& r : t.rows) {
    out << to_string(r.algorithm) << ',' << r.tie_cases << ',' << format_fixed(r.tie_percent) << ','
        << format_fixed(r.tie_avg_reduction) << ',' << r.strict_cases << ',' << format_fixed(r.strict_percent) << ','
        << format_fixed(r.strict_avg_reduction) << ',' << format_fixed(r.avg_reduction_all_reducible) << ','
        << t.reducible << ',' << t.total << '\n';
  }
  return out.str();
}

json best_algorithm_json(const BestAlgorithmTable& t) {
  json rows = json::array();
  for (const BestAlgorithmRow& r : t.rows) {
    rows.push_back({{"algorithm", to_string(r.algorithm)},
                    {"tie_cases", r.tie_cases},
                    {"tie_percent", format_fixed(r.tie_percent)},
                    {"tie_avg_reduction", format_fixed(r.tie_avg_reduction)},
                    {"strict_cases", r.strict_cases},
                    {"strict_percent", format_fixed(r.strict_percent)},
                    {"strict_avg_reduction", format_fixed(r.strict_avg_reduction)},
                    {"avg_reduction_all_reducible", format_fixed(r.avg_reduction_all_reducible)}});
  }
  return json{{"total", t.total}, {"reducible", t.reducible}, {"rows", rows}};
}

std::string class_breakdown_csv(std::span<const ClassBreakdownRow> rows) {
  std::ostringstream out;
  out << "label,total,non_reducible,percent_non_reducible,share_of_non_reducible\n";
  for (const ClassBreakdownRow& r : rows) {
    out << r.label.str() << ',' << r.total << ',' << r.non_reducible << ',' << format_fixed(r.percent_non_reducible)
        << ',' << format_fixed(r.share_of_non_reducible) << '\n';
  }
  return out.str();
}

json class_breakdown_json(std::span<const ClassBreakdownRow> rows) {
  json out = json::array();
  for (const ClassBreakdownRow& r : rows) {
    out.push_back({{"label", r.label.str()},
                   {"total", r.total},
                   {"non_reducible", r.non_reducible},
                   {"percent_non_reducible", format_fixed(r.percent_non_reducible)},
                   {"share_of_non_reducible", format_fixed(r.share_of_non_reducible)}});
  }
  return out;
}

std::string sweep_csv(const SweepResult& s) {
  std::ostringstream out;
  out << "k,factor,label,attempted,newly_reducible,success_percent,avg_reduction\n";
  for (const SweepCell& c : s.cells) {
    out << c.k << ',' << c.factor << ",ALL," << c.attempted << ',' << c.newly_reducible << ','
        << format_fixed(c.success_percent) << ',' << format_fixed(c.avg_reduction) << '\n';
    for (const ClassLabel& l : ClassLabel::all()) {
      const SweepClassCell& cc = c.by_class[l.index()];
      if (cc.attempted == 0) continue;
      double success = 100.0 * static_cast<double>(cc.reduced) / static_cast<double>(cc.attempted);
      out << c.k << ',' << c.factor << ',' << l.str() << ',' << cc.attempted << ',' << cc.reduced << ','
          << format_fixed(success) << ',' << format_fixed(cc.avg_reduction) << '\n';
    }
  }
  return out.str();
}

json sweep_json(const SweepResult& s) {
  json cells = json::array();
  for (const SweepCell& c : s.cells) {
    json classes = json::object();
    for (const ClassLabel& l : ClassLabel::all()) {
      const SweepClassCell& cc = c.by_class[l.index()];
      if (cc.attempted == 0) continue;
      classes[l.str()] = {{"attempted", cc.attempted},
                          {"reduced", cc.reduced},
                          {"avg_reduction", format_fixed(cc.avg_reduction)}};
    }
    cells.push_back({{"k", c.k},
                     {"factor", c.factor},
                     {"attempted", c.attempted},
                     {"newly_reducible", c.newly_reducible},
                     {"success_percent", format_fixed(c.success_percent)},
                     {"avg_reduction", format_fixed(c.avg_reduction)},
                     {"by_class", classes}});
  }
  return json{{"cells", cells}, {"per_k", partition_table_json(s)}};
}

std::string partition_table_csv(const SweepResult& s) {
  std::ostringstream out;
  out << "k,attempted,succeeded,success_percent,avg_reduction\n";
  for (const SweepKRow& r : s.per_k) {
    out << r.k << ',' << r.attempted << ',' << r.succeeded << ',' << format_fixed(r.success_percent) << ','
        << format_fixed(r.avg_reduction) << '\n';
  }
  return out.str();
}

json partition_table_json(const SweepResult& s) {
  json out = json::array();
  for (const SweepKRow& r : s.per_k) {
    out.push_back({{"k", r.k},
                   {"attempted", r.attempted},
                   {"succeeded", r.succeeded},
                   {"success_percent", format_fixed(r.success_percent)},
                   {"avg_reduction", format_fixed(r.avg_reduction)}});
  }
  return out;
}

std::string sweep_observations_csv(std::span<const SweepObservation> obs) {
  std::ostringstream out;
  out << "circuit_id,label,k,factor,original_depth,expanded_depth,final_depth,percent_reduction,status\n";
  for (const SweepObservation& o : obs) {
    const char* status = o.skipped ? "skipped" : !o.error.empty() ? "error" : "ok";
    out << o.circuit_id << ',' << o.label.str() << ',' << o.k << ',' << o.factor << ',' << o.original_depth << ','
        << o.expanded_depth << ',' << o.final_depth << ',' << format_fixed(o.percent_reduction) << ',' << status
        << '\n';
  }
  return out.str();
}

json report_metadata(const BestAlgorithmTable& t) {
  json priority = json::array();
  for (Algorithm a : t.priority) priority.push_back(to_string(a));
  return json{
      {"tie_policy",
       "tie_* columns credit every algorithm reaching a circuit's best final depth; strict_* columns credit only the "
       "first of strict_priority"},
      {"strict_priority", priority},
      {"rounding", "percentages rounded to " + std::to_string(kReportDecimals) +
                       " decimals; strict_percent and share_of_non_reducible sum to 100 up to that rounding"},
      {"reducible_definition", "some algorithm ends with fewer columns than it started with"},
      {"sweep_baseline", "percent reduction after expansion is measured against the unexpanded depth"},
  };
}

std::string circuit_file_name(const DatasetEntry& e) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "c%04zu_q%zu_c%zu_t%zu", e.id, e.params.n_qubits, e.params.n_columns,
                e.params.n_tgates);
  return std::string(buf) + std::string(kCircuitExtension);
}

json dataset_manifest(const Dataset& d) {
  json circuits = json::array();
  for (const DatasetEntry& e : d.entries) {
    circuits.push_back({{"id", e.id},
                        {"file", circuit_file_name(e)},
                        {"params", params_to_json(e.params)},
                        {"label", e.label.str()},
                        {"density", t_gate_density(e.circuit)}});
  }
  return json{{"version", 1},
              {"master_seed", d.master_seed},
              {"max_qubits", d.max_qubits},
              {"count", d.entries.size()},
              {"digest", d.digest},
              {"stats",
               {{"depth_low", d.stats.depth_low},
                {"depth_high", d.stats.depth_high},
                {"density_low", d.stats.density_low},
                {"density_high", d.stats.density_high}}},
              {"circuits", circuits}};
}

void write_dataset(const std::filesystem::path& dir, const Dataset& d) {
  std::filesystem::create_directories(dir);
  for (const DatasetEntry& e : d.entries) save_circuit(dir / circuit_file_name(e), e.circuit);
  write_file(dir / "manifest.json", dataset_manifest(d).dump(2) + "\n");
}

DatasetStats stats_from_manifest(const json& manifest) {
  const json& s = manifest.at("stats");
  return {s.at("depth_low").get<size_t>(), s.at("depth_high").get<size_t>(), s.at("density_low").get<double>(),
          s.at("density_high").get<double>()};
}

Dataset load_dataset(const std::filesystem::path& dir) {
  json manifest;
  try {
    manifest = json::parse(read_file(dir / "manifest.json"));
  } catch (const json::exception& e) {
    throw ParseError((dir / "manifest.json").string() + ": " + e.what());
  }
  Dataset d;
  try {
    d.master_seed = manifest.at("master_seed").get<uint64_t>();
    d.max_qubits = manifest.at("max_qubits").get<size_t>();
    d.stats = stats_from_manifest(manifest);
    for (const json& jc : manifest.at("circuits")) {
      DatasetEntry e;
      e.id = jc.at("id").get<size_t>();
      e.params = params_from_json(jc.at("params"));
      e.label = label_from_json(jc.at("label"));
      e.circuit = load_circuit(dir / jc.at("file").get<std::string>());
      d.entries.push_back(std::move(e));
    }
  } catch (const json::exception& e) {
    throw ParseError((dir / "manifest.json").string() + ": " + e.what());
  }
  d.digest = dataset_digest(d.entries);
  std::string expected = manifest.value("digest", "");
  if (d.digest != expected) {
    throw ParseError("dataset digest mismatch in " + dir.string() + ": manifest " + expected + ", files " + d.digest);
  }
  return d;
}

}  // namespace tlayer
