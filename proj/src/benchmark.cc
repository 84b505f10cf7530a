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

#include "tlayer/benchmark.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "tlayer/expansion.h"
#include "tlayer/serialize.h"

namespace tlayer {

void parallel_for(size_t count, size_t jobs, const std::function<void(size_t)>& fn) {
  jobs = std::max<size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  {
    std::vector<std::jthread> workers;
    for (size_t w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (size_t i = next++; i < count; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(failure_mu);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

std::string dataset_digest(std::span<const DatasetEntry> entries) {
  uint64_t h = fnv1a64("");
  for (const DatasetEntry& e : entries) h = fnv1a64(serialize(e.circuit), h);
  return hex64(h);
}

Dataset build_dataset(uint64_t master_seed, size_t max_qubits, size_t jobs) {
  Dataset d;
  d.master_seed = master_seed;
  d.max_qubits = max_qubits;
  std::vector<CircuitParams> grid = parameter_grid(master_seed, max_qubits);
  d.entries.resize(grid.size());
  parallel_for(grid.size(), jobs, [&](size_t i) {
    d.entries[i].id = i;
    d.entries[i].params = grid[i];
    d.entries[i].circuit = generate(grid[i]);
  });

  std::vector<size_t> counts;
  std::vector<double> densities;
  for (const DatasetEntry& e : d.entries) {
    counts.push_back(e.circuit.depth());
    densities.push_back(t_gate_density(e.circuit));
  }
  d.stats = compute_stats(counts, densities);
  for (DatasetEntry& e : d.entries) e.label = classify(e.circuit, d.stats);
  d.digest = dataset_digest(d.entries);
  return d;
}

size_t ExperimentRecord::best_final_depth() const {
  size_t best = initial_depth();
  for (const AlgorithmOutcome& r : results) {
    if (r.ok()) best = std::min(best, r.final_depth);
  }
  return best;
}

ExperimentRecord run_one(const DatasetEntry& entry, const RunOptions& opts) {
  ExperimentRecord rec;
  rec.id = entry.id;
  rec.params = entry.params;
  rec.params.n_columns = entry.circuit.depth();
  rec.label = entry.label;
  for (Algorithm algo : opts.algorithms) {
    AlgorithmOutcome out;
    out.algorithm = algo;
    out.initial_depth = entry.circuit.depth();
    out.final_depth = out.initial_depth;
    try {
      Reduction r = reduce(entry.circuit, algo, opts.reduce);
      out.final_depth = r.result.final_depth;
      out.percent_reduction = r.result.percent_reduction;
      out.merges = r.result.merge_log.size();
      out.elapsed = r.result.elapsed;
      out.replay_verified = is_well_formed(r.circuit) && replay(entry.circuit, r.result.merge_log) == r.circuit;
      if (!out.replay_verified) out.error = "merge log does not replay to the output circuit";
    } catch (const std::exception& e) {
      out.error = e.what();
    }
    if (!out.ok()) {
      out.final_depth = out.initial_depth;
      out.percent_reduction = 0.0;
    }
    rec.results.push_back(std::move(out));
  }
  rec.reducible = rec.best_final_depth() < rec.initial_depth();
  return rec;
}

std::vector<ExperimentRecord> run_dataset(std::span<const DatasetEntry> entries, const RunOptions& opts) {
  std::vector<ExperimentRecord> records(entries.size());
  parallel_for(entries.size(), opts.jobs, [&](size_t i) { records[i] = run_one(entries[i], opts); });
  return records;
}

const BestAlgorithmRow* BestAlgorithmTable::row(Algorithm a) const {
  for (const BestAlgorithmRow& r : rows) {
    if (r.algorithm == a) return &r;
  }
  return nullptr;
}

std::vector<Algorithm> default_priority() {
  return {Algorithm::kExact, Algorithm::kLookahead, Algorithm::kGraph, Algorithm::kDnc, Algorithm::kGreedy};
}

namespace {

double percent(size_t part, size_t whole) {
  return whole == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(whole);
}

double mean(double sum, size_t n) { return n == 0 ? 0.0 : sum / static_cast<double>(n); }

}  // namespace

BestAlgorithmTable best_algorithm_table(std::span<const ExperimentRecord> records, std::span<const Algorithm> priority) {
  BestAlgorithmTable t;
  t.total = records.size();
  t.priority = priority.empty() ? default_priority() : std::vector<Algorithm>(priority.begin(), priority.end());

  // Algorithms in first-seen order.
  std::vector<Algorithm> algos;
  for (const ExperimentRecord& r : records) {
    for (const AlgorithmOutcome& o : r.results) {
      if (std::find(algos.begin(), algos.end(), o.algorithm) == algos.end()) algos.push_back(o.algorithm);
    }
  }
  struct Acc {
    double tie_sum = 0, strict_sum = 0, all_sum = 0;
  };
  std::vector<Acc> acc(algos.size());
  for (Algorithm a : algos) t.rows.push_back({.algorithm = a});
  auto slot = [&](Algorithm a) { return static_cast<size_t>(std::find(algos.begin(), algos.end(), a) - algos.begin()); };

  for (const ExperimentRecord& r : records) {
    if (!r.reducible) continue;
    ++t.reducible;
    size_t best = r.best_final_depth();
    const AlgorithmOutcome* strict = nullptr;
    size_t strict_rank = SIZE_MAX;
    for (const AlgorithmOutcome& o : r.results) {
      size_t s = slot(o.algorithm);
      acc[s].all_sum += o.percent_reduction;
      if (!o.ok() || o.final_depth != best) continue;
      ++t.rows[s].tie_cases;
      acc[s].tie_sum += o.percent_reduction;
      auto it = std::find(t.priority.begin(), t.priority.end(), o.algorithm);
      size_t rank = static_cast<size_t>(it - t.priority.begin());
      if (rank < strict_rank) {
        strict_rank = rank;
        strict = &o;
      }
    }
    if (strict) {
      size_t s = slot(strict->algorithm);
      ++t.rows[s].strict_cases;
      acc[s].strict_sum += strict->percent_reduction;
    }
  }
  for (size_t s = 0; s < t.rows.size(); ++s) {
    BestAlgorithmRow& row = t.rows[s];
    row.tie_percent = percent(row.tie_cases, t.reducible);
    row.tie_avg_reduction = mean(acc[s].tie_sum, row.tie_cases);
    row.strict_percent = percent(row.strict_cases, t.reducible);
    row.strict_avg_reduction = mean(acc[s].strict_sum, row.strict_cases);
    row.avg_reduction_all_reducible = mean(acc[s].all_sum, t.reducible);
  }
  return t;
}

std::vector<ClassBreakdownRow> reducibility_by_class(std::span<const ExperimentRecord> records) {
  std::vector<ClassBreakdownRow> rows;
  for (const ClassLabel& l : ClassLabel::all()) rows.push_back({.label = l});
  size_t non_reducible = 0;
  for (const ExperimentRecord& r : records) {
    ClassBreakdownRow& row = rows[r.label.index()];
    ++row.total;
    if (!r.reducible) {
      ++row.non_reducible;
      ++non_reducible;
    }
  }
  for (ClassBreakdownRow& row : rows) {
    row.percent_non_reducible = percent(row.non_reducible, row.total);
    row.share_of_non_reducible = percent(row.non_reducible, non_reducible);
  }
  return rows;
}

std::vector<SweepObservation> run_sweep(std::span<const DatasetEntry> circuits, const SweepOptions& opts) {
  const size_t per_circuit = opts.ks.size() * opts.factors.size();
  std::vector<SweepObservation> obs(circuits.size() * per_circuit);
  parallel_for(obs.size(), opts.jobs, [&](size_t i) {
    const DatasetEntry& e = circuits[i / per_circuit];
    size_t k = opts.ks[i % per_circuit / opts.factors.size()];
    size_t f = opts.factors[i % opts.factors.size()];
    SweepObservation& o = obs[i];
    o.circuit_id = e.id;
    o.label = e.label;
    o.k = k;
    o.factor = f;
    o.original_depth = e.circuit.depth();
    o.final_depth = o.original_depth;
    if (opts.max_cells != 0 && e.circuit.n_qubits * e.circuit.depth() * f > opts.max_cells) {
      o.skipped = true;
      return;
    }
    try {
      ExpandedReduction r = reduce_with_expansion(e.circuit, f, opts.algorithm, {k, std::max(k, opts.exact_cap)});
      o.expanded_depth = r.expanded.depth();
      o.final_depth = r.reduction.result.final_depth;
      o.percent_reduction = r.reduction.result.percent_reduction;
    } catch (const std::exception& ex) {
      o.error = ex.what();
    }
  });
  return obs;
}

SweepResult fold_sweep(std::span<const SweepObservation> observations) {
  std::map<std::pair<size_t, size_t>, SweepCell> cells;
  std::map<std::pair<size_t, size_t>, double> cell_sums;
  std::map<std::pair<size_t, size_t>, std::array<double, 27>> class_sums;
  // Per (k, circuit): attempted?, best reduction if any.
  std::map<std::pair<size_t, size_t>, std::optional<double>> per_circuit;

  for (const SweepObservation& o : observations) {
    if (o.skipped) continue;
    auto key = std::make_pair(o.k, o.factor);
    SweepCell& cell = cells[key];
    cell.k = o.k;
    cell.factor = o.factor;
    ++cell.attempted;
    SweepClassCell& cc = cell.by_class[o.label.index()];
    ++cc.attempted;
    auto& best = per_circuit[{o.k, o.circuit_id}];
    if (o.reduced()) {
      ++cell.newly_reducible;
      cell_sums[key] += o.percent_reduction;
      ++cc.reduced;
      class_sums[key][o.label.index()] += o.percent_reduction;
      best = best ? std::max(*best, o.percent_reduction) : o.percent_reduction;
    }
  }

  SweepResult out;
  for (auto& [key, cell] : cells) {
    cell.success_percent = percent(cell.newly_reducible, cell.attempted);
    cell.avg_reduction = mean(cell_sums[key], cell.newly_reducible);
    for (size_t l = 0; l < 27; ++l) {
      cell.by_class[l].avg_reduction = mean(class_sums[key][l], cell.by_class[l].reduced);
    }
    out.cells.push_back(cell);
  }

  std::map<size_t, SweepKRow> rows;
  std::map<size_t, double> row_sums;
  for (const auto& [key, best] : per_circuit) {
    SweepKRow& row = rows[key.first];
    row.k = key.first;
    ++row.attempted;
    if (best) {
      ++row.succeeded;
      row_sums[key.first] += *best;
    }
  }
  for (auto& [k, row] : rows) {
    row.success_percent = percent(row.succeeded, row.attempted);
    row.avg_reduction = mean(row_sums[k], row.succeeded);
    out.per_k.push_back(row);
  }
  return out;
}

std::vector<DatasetEntry> non_reducible_entries(std::span<const DatasetEntry> entries,
                                                std::span<const ExperimentRecord> records) {
  std::map<size_t, bool> reducible;
  for (const ExperimentRecord& r : records) reducible[r.id] = r.reducible;
  std::vector<DatasetEntry> out;
  for (const DatasetEntry& e : entries) {
    auto it = reducible.find(e.id);
    if (it != reducible.end() && !it->second) out.push_back(e);
  }
  return out;
}

SweepResult sweep_expansion(std::span<const DatasetEntry> non_reducible, std::vector<size_t> factors, Algorithm algo,
                            size_t k, size_t max_cells, size_t jobs) {
  SweepOptions opts;
  opts.factors = std::move(factors);
  opts.ks = {k};
  opts.algorithm = algo;
  opts.max_cells = max_cells;
  opts.jobs = jobs;
  return fold_sweep(run_sweep(non_reducible, opts));
}

SweepResult sweep_partition(std::span<const DatasetEntry> non_reducible, std::vector<size_t> ks,
                            std::vector<size_t> factors, size_t max_cells, size_t jobs) {
  SweepOptions opts;
  opts.factors = std::move(factors);
  opts.ks = std::move(ks);
  opts.max_cells = max_cells;
  opts.jobs = jobs;
  return fold_sweep(run_sweep(non_reducible, opts));
}

}  // namespace tlayer
