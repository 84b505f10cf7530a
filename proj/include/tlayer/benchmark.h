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

#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tlayer/algorithms.h"
#include "tlayer/circuit.h"
#include "tlayer/generator.h"

namespace tlayer {

// Runs fn(0..count-1) on up to `jobs` threads. Results must be written to
// per-index slots so output order never depends on scheduling.
void parallel_for(size_t count, size_t jobs, const std::function<void(size_t)>& fn);

struct DatasetEntry {
  size_t id = 0;
  CircuitParams params;
  ClassLabel label;
  Circuit circuit;
};

struct Dataset {
  uint64_t master_seed = 0;
  size_t max_qubits = 100;
  DatasetStats stats;
  std::vector<DatasetEntry> entries;
  // fnv1a64 over the serialized circuits in id order, as 16 hex digits.
  std::string digest;
};

// Generates the parameter grid (optionally truncated to max_qubits) and
// labels every circuit against tertiles computed over the whole result.
Dataset build_dataset(uint64_t master_seed, size_t max_qubits = 100, size_t jobs = 1);
std::string dataset_digest(std::span<const DatasetEntry> entries);

// Outcome of one algorithm on one circuit. The merge log is replayed and
// then dropped to bound memory; `replay_verified` records the check.
struct AlgorithmOutcome {
  Algorithm algorithm = Algorithm::kGreedy;
  size_t initial_depth = 0;
  size_t final_depth = 0;
  double percent_reduction = 0.0;
  size_t merges = 0;
  bool replay_verified = false;
  std::chrono::nanoseconds elapsed{0};
  // Nonempty when the algorithm threw; final_depth then equals initial_depth.
  std::string error;

  bool ok() const { return error.empty(); }
};

struct ExperimentRecord {
  size_t id = 0;
  CircuitParams params;
  ClassLabel label;
  std::vector<AlgorithmOutcome> results;
  // Some successful algorithm ended below the initial depth.
  bool reducible = false;

  size_t initial_depth() const { return params.n_columns; }
  // Smallest final depth over successful results (initial depth if none).
  size_t best_final_depth() const;
};

struct RunOptions {
  std::vector<Algorithm> algorithms{std::begin(kHeuristics), std::end(kHeuristics)};
  ReduceOptions reduce;
  size_t jobs = 1;
};

// Every circuit through every requested algorithm. Records come back in
// entry order regardless of `jobs`. Failures are recorded per result.
std::vector<ExperimentRecord> run_dataset(std::span<const DatasetEntry> entries, const RunOptions& opts);
ExperimentRecord run_one(const DatasetEntry& entry, const RunOptions& opts);

// Best-algorithm tally over reducible records.
//
// Tie credit: every algorithm reaching the record's best final depth wins it.
// Strict priority: only the first such algorithm in `priority` wins.
struct BestAlgorithmRow {
  Algorithm algorithm = Algorithm::kGreedy;
  size_t tie_cases = 0;
  double tie_percent = 0.0;
  // Mean percent reduction over the circuits it won (tie credit).
  double tie_avg_reduction = 0.0;
  size_t strict_cases = 0;
  double strict_percent = 0.0;
  double strict_avg_reduction = 0.0;
  // Mean percent reduction over all reducible circuits.
  double avg_reduction_all_reducible = 0.0;
};

struct BestAlgorithmTable {
  size_t total = 0;
  size_t reducible = 0;
  std::vector<Algorithm> priority;
  std::vector<BestAlgorithmRow> rows;

  const BestAlgorithmRow* row(Algorithm a) const;
};

// lookahead > graph > dnc > greedy, with exact ahead of all of them.
std::vector<Algorithm> default_priority();

BestAlgorithmTable best_algorithm_table(std::span<const ExperimentRecord> records,
                                        std::span<const Algorithm> priority = {});

struct ClassBreakdownRow {
  ClassLabel label;
  size_t total = 0;
  size_t non_reducible = 0;
  // non_reducible / total.
  double percent_non_reducible = 0.0;
  // non_reducible / (all non-reducible circuits); sums to 100 over rows.
  double share_of_non_reducible = 0.0;
};

// All 27 labels in index order, including empty ones.
std::vector<ClassBreakdownRow> reducibility_by_class(std::span<const ExperimentRecord> records);

// One (circuit, k, f) trial of expansion followed by reduction.
struct SweepObservation {
  size_t circuit_id = 0;
  ClassLabel label;
  size_t k = 0;
  size_t factor = 0;
  size_t original_depth = 0;
  size_t expanded_depth = 0;
  size_t final_depth = 0;
  double percent_reduction = 0.0;
  // Over the cell cap; excluded from every aggregate.
  bool skipped = false;
  std::string error;

  bool reduced() const { return !skipped && error.empty() && final_depth < original_depth; }
};

struct SweepOptions {
  std::vector<size_t> factors;
  std::vector<size_t> ks{kDefaultLookaheadK};
  Algorithm algorithm = Algorithm::kLookahead;
  size_t exact_cap = kDefaultExactCap;
  // Skip trials with n_qubits * depth * factor above this; 0 disables.
  size_t max_cells = 0;
  size_t jobs = 1;
};

// Trials ordered by circuit, then k, then factor.
std::vector<SweepObservation> run_sweep(std::span<const DatasetEntry> circuits, const SweepOptions& opts);

struct SweepClassCell {
  size_t attempted = 0;
  size_t reduced = 0;
  double avg_reduction = 0.0;  // over reduced trials
};

struct SweepCell {
  size_t k = 0;
  size_t factor = 0;
  size_t attempted = 0;
  size_t newly_reducible = 0;
  double success_percent = 0.0;
  double avg_reduction = 0.0;  // over newly reducible trials
  std::array<SweepClassCell, 27> by_class{};
};

// Per-k row in the layout of the partition-size table: a circuit succeeds
// when some factor reduces it; the reduction averaged is its best one.
struct SweepKRow {
  size_t k = 0;
  size_t attempted = 0;
  size_t succeeded = 0;
  double success_percent = 0.0;
  double avg_reduction = 0.0;
};

struct SweepResult {
  std::vector<SweepCell> cells;  // ordered by k, then factor
  std::vector<SweepKRow> per_k;
};

SweepResult fold_sweep(std::span<const SweepObservation> observations);

// Restricts to non-reducible records, runs the sweep and folds it.
std::vector<DatasetEntry> non_reducible_entries(std::span<const DatasetEntry> entries,
                                                std::span<const ExperimentRecord> records);
SweepResult sweep_expansion(std::span<const DatasetEntry> non_reducible, std::vector<size_t> factors,
                            Algorithm algo, size_t k, size_t max_cells = 0, size_t jobs = 1);
SweepResult sweep_partition(std::span<const DatasetEntry> non_reducible, std::vector<size_t> ks,
                            std::vector<size_t> factors, size_t max_cells = 0, size_t jobs = 1);

}  // namespace tlayer
