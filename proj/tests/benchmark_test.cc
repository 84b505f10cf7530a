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

#include <atomic>
#include <filesystem>
#include <numeric>

#include "gtest/gtest.h"
#include "test_util.h"
#include "tlayer/errors.h"
#include "tlayer/report.h"
#include "tlayer/serialize.h"

using namespace tlayer;
using test::circuit;

namespace {

DatasetEntry entry(size_t id, const Circuit& c, ClassLabel label = {}) {
  DatasetEntry e;
  e.id = id;
  e.params = {c.n_qubits, c.depth(), c.t_count(), 0};
  e.label = label;
  e.circuit = c;
  return e;
}

AlgorithmOutcome outcome(Algorithm a, size_t initial, size_t final_depth) {
  AlgorithmOutcome o;
  o.algorithm = a;
  o.initial_depth = initial;
  o.final_depth = final_depth;
  o.percent_reduction = percent_reduction(initial, final_depth);
  o.replay_verified = true;
  return o;
}

ExperimentRecord record(size_t id, size_t initial, std::initializer_list<std::pair<Algorithm, size_t>> finals) {
  ExperimentRecord r;
  r.id = id;
  r.params = {2, initial, initial, id};
  for (auto [a, d] : finals) r.results.push_back(outcome(a, initial, d));
  r.reducible = r.best_final_depth() < initial;
  return r;
}

std::vector<DatasetEntry> small_dataset(uint64_t seed) {
  Dataset d = build_dataset(seed, 20);
  std::vector<DatasetEntry> out;
  for (size_t i = 0; i < d.entries.size(); i += 9) out.push_back(d.entries[i]);
  return out;
}

}  // namespace

TEST(benchmark, two_mergeable_columns_all_reduce) {
  ExperimentRecord r = run_one(entry(0, circuit({"+XI", "+IZ"})), {});
  ASSERT_EQ(r.results.size(), 4u);
  EXPECT_TRUE(r.reducible);
  for (const AlgorithmOutcome& o : r.results) {
    EXPECT_TRUE(o.ok());
    EXPECT_TRUE(o.replay_verified);
    EXPECT_EQ(o.final_depth, 1u);
    EXPECT_DOUBLE_EQ(o.percent_reduction, 50.0);
    EXPECT_EQ(o.merges, 1u);
  }
}

TEST(benchmark, single_column_is_not_reducible) {
  ExperimentRecord r = run_one(entry(0, circuit({"+XY"})), {});
  EXPECT_FALSE(r.reducible);
  EXPECT_EQ(r.best_final_depth(), 1u);
}

TEST(benchmark, exact_over_cap_is_recorded_not_thrown) {
  Circuit c;
  c.n_qubits = 13;
  for (size_t i = 0; i < 13; ++i) {
    Column k(Sign::kPlus, std::vector<PauliLetter>(13, PauliLetter::I));
    k.letters[i] = PauliLetter::X;
    c.columns.push_back(k);
  }
  RunOptions opts;
  opts.algorithms = {Algorithm::kExact, Algorithm::kGreedy};
  ExperimentRecord r = run_one(entry(0, c), opts);
  EXPECT_FALSE(r.results[0].ok());
  EXPECT_EQ(r.results[0].final_depth, 13u);
  EXPECT_TRUE(r.results[1].ok());
  EXPECT_TRUE(r.reducible);
}

TEST(benchmark, best_table_single_winner_and_ties) {
  std::vector<ExperimentRecord> recs{
      // Lookahead alone is best.
      record(0, 10, {{Algorithm::kGreedy, 8}, {Algorithm::kDnc, 9}, {Algorithm::kGraph, 8}, {Algorithm::kLookahead, 5}}),
      // Greedy and graph tie.
      record(1, 10, {{Algorithm::kGreedy, 6}, {Algorithm::kDnc, 9}, {Algorithm::kGraph, 6}, {Algorithm::kLookahead, 7}}),
      // Not reducible: excluded.
      record(2, 4, {{Algorithm::kGreedy, 4}, {Algorithm::kDnc, 4}, {Algorithm::kGraph, 4}, {Algorithm::kLookahead, 4}}),
  };
  BestAlgorithmTable t = best_algorithm_table(recs);
  EXPECT_EQ(t.total, 3u);
  EXPECT_EQ(t.reducible, 2u);
  EXPECT_EQ(t.row(Algorithm::kLookahead)->tie_cases, 1u);
  EXPECT_EQ(t.row(Algorithm::kLookahead)->strict_cases, 1u);
  EXPECT_DOUBLE_EQ(t.row(Algorithm::kLookahead)->strict_avg_reduction, 50.0);
  EXPECT_EQ(t.row(Algorithm::kGreedy)->tie_cases, 1u);
  EXPECT_EQ(t.row(Algorithm::kGraph)->tie_cases, 1u);
  // Graph outranks greedy.
  EXPECT_EQ(t.row(Algorithm::kGraph)->strict_cases, 1u);
  EXPECT_EQ(t.row(Algorithm::kGreedy)->strict_cases, 0u);
  EXPECT_EQ(t.row(Algorithm::kDnc)->tie_cases, 0u);
  EXPECT_DOUBLE_EQ(t.row(Algorithm::kDnc)->avg_reduction_all_reducible, 10.0);
  size_t strict = 0;
  for (const BestAlgorithmRow& row : t.rows) strict += row.strict_cases;
  EXPECT_EQ(strict, t.reducible);
}

TEST(benchmark, best_table_custom_priority) {
  std::vector<ExperimentRecord> recs{record(0, 4, {{Algorithm::kGreedy, 2}, {Algorithm::kGraph, 2}})};
  std::vector<Algorithm> prio{Algorithm::kGreedy, Algorithm::kGraph};
  BestAlgorithmTable t = best_algorithm_table(recs, prio);
  EXPECT_EQ(t.row(Algorithm::kGreedy)->strict_cases, 1u);
  EXPECT_EQ(t.row(Algorithm::kGraph)->strict_cases, 0u);
  EXPECT_EQ(t.row(Algorithm::kExact), nullptr);
}

TEST(benchmark, class_breakdown_partitions_records) {
  std::vector<DatasetEntry> entries = small_dataset(5);
  std::vector<ExperimentRecord> recs = run_dataset(entries, {});
  std::vector<ClassBreakdownRow> rows = reducibility_by_class(recs);
  ASSERT_EQ(rows.size(), 27u);
  size_t total = 0, non = 0;
  double share = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].label, ClassLabel::all()[i]);
    EXPECT_LE(rows[i].non_reducible, rows[i].total);
    total += rows[i].total;
    non += rows[i].non_reducible;
    share += rows[i].share_of_non_reducible;
  }
  EXPECT_EQ(total, recs.size());
  size_t expected_non = 0;
  for (const ExperimentRecord& r : recs) expected_non += !r.reducible;
  EXPECT_EQ(non, expected_non);
  if (non > 0) {
    EXPECT_NEAR(share, 100.0, 1e-9);
  }
}

TEST(benchmark, results_do_not_depend_on_jobs) {
  std::vector<DatasetEntry> entries = small_dataset(1);
  RunOptions one;
  RunOptions many;
  many.jobs = 4;
  EXPECT_EQ(records_to_jsonl(run_dataset(entries, one)), records_to_jsonl(run_dataset(entries, many)));
}

TEST(benchmark, parallel_for_covers_every_index) {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), 3, [&](size_t i) { ++hits[i]; });
  for (auto& h : hits) EXPECT_EQ(h.load(), 1);
  EXPECT_THROW(parallel_for(10, 2, [](size_t i) {
                 if (i == 7) throw std::runtime_error("boom");
               }),
               std::runtime_error);
}

TEST(benchmark, dataset_is_deterministic) {
  Dataset a = build_dataset(3, 20);
  Dataset b = build_dataset(3, 20, 2);
  EXPECT_EQ(a.entries.size(), 450u);
  EXPECT_EQ(a.digest, b.digest);
  EXPECT_EQ(a.digest, dataset_digest(a.entries));
  EXPECT_NE(a.digest, build_dataset(4, 20).digest);
}

TEST(sweep, counting) {
  auto obs = [](size_t id, size_t k, size_t f, size_t orig, size_t fin) {
    SweepObservation o;
    o.circuit_id = id;
    o.k = k;
    o.factor = f;
    o.original_depth = orig;
    o.final_depth = fin;
    o.percent_reduction = percent_reduction(orig, fin);
    return o;
  };
  std::vector<SweepObservation> all{
      obs(0, 2, 2, 10, 12), obs(0, 2, 3, 10, 8), obs(1, 2, 2, 4, 3), obs(1, 2, 3, 4, 2),
      obs(2, 2, 2, 5, 5),   obs(2, 2, 3, 5, 6),
  };
  SweepObservation skipped = obs(3, 2, 2, 5, 5);
  skipped.skipped = true;
  all.push_back(skipped);
  SweepResult s = fold_sweep(all);
  ASSERT_EQ(s.cells.size(), 2u);
  EXPECT_EQ(s.cells[0].factor, 2u);
  EXPECT_EQ(s.cells[0].attempted, 3u);
  EXPECT_EQ(s.cells[0].newly_reducible, 1u);
  EXPECT_DOUBLE_EQ(s.cells[0].avg_reduction, 25.0);
  EXPECT_EQ(s.cells[1].newly_reducible, 2u);
  EXPECT_DOUBLE_EQ(s.cells[1].avg_reduction, 35.0);
  ASSERT_EQ(s.per_k.size(), 1u);
  EXPECT_EQ(s.per_k[0].attempted, 3u);
  EXPECT_EQ(s.per_k[0].succeeded, 2u);
  // Best per circuit: 20% and 50%.
  EXPECT_DOUBLE_EQ(s.per_k[0].avg_reduction, 35.0);
}

TEST(sweep, empty_input) {
  SweepResult s = fold_sweep({});
  EXPECT_TRUE(s.cells.empty());
  EXPECT_TRUE(s.per_k.empty());
  SweepOptions opts;
  opts.factors = {2};
  EXPECT_TRUE(run_sweep({}, opts).empty());
}

TEST(sweep, order_and_cap) {
  std::vector<DatasetEntry> entries{entry(4, circuit({"+XY", "-ZX"})), entry(9, circuit({"+XYZX"}))};
  SweepOptions opts;
  opts.factors = {2, 3};
  opts.ks = {2, 4};
  opts.max_cells = 8;
  std::vector<SweepObservation> obs = run_sweep(entries, opts);
  ASSERT_EQ(obs.size(), 8u);
  EXPECT_EQ(obs[0].circuit_id, 4u);
  EXPECT_EQ(obs[1].factor, 3u);
  EXPECT_EQ(obs[2].k, 4u);
  EXPECT_EQ(obs[4].circuit_id, 9u);
  // Cells are qubits * depth * f: 2 * 2 * 3 = 12 and 4 * 1 * 3 = 12 exceed
  // the cap, 2 * 2 * 2 and 4 * 1 * 2 do not.
  EXPECT_FALSE(obs[0].skipped);
  EXPECT_TRUE(obs[1].skipped);
  EXPECT_FALSE(obs[4].skipped);
  EXPECT_TRUE(obs[5].skipped);
  SweepResult s = fold_sweep(obs);
  ASSERT_EQ(s.per_k.size(), 2u);
  EXPECT_EQ(s.per_k[0].attempted, 2u);
}

TEST(report, jsonl_round_trip_reproduces_tables) {
  std::vector<DatasetEntry> entries = small_dataset(2);
  std::vector<ExperimentRecord> recs = run_dataset(entries, {});
  std::string jsonl = records_to_jsonl(recs);
  std::vector<ExperimentRecord> back = records_from_jsonl(jsonl);
  EXPECT_EQ(records_to_jsonl(back), jsonl);
  EXPECT_EQ(best_algorithm_csv(best_algorithm_table(back)), best_algorithm_csv(best_algorithm_table(recs)));
  EXPECT_EQ(class_breakdown_csv(reducibility_by_class(back)), class_breakdown_csv(reducibility_by_class(recs)));
}

TEST(report, bad_jsonl_names_the_line) {
  try {
    records_from_jsonl("{}\nnot json\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos) << e.what();
  }
}

TEST(report, fixed_formatting) {
  EXPECT_EQ(format_fixed(12.3456), "12.346");
  EXPECT_EQ(format_fixed(-0.0001), "0.000");
  EXPECT_EQ(format_fixed(0.0), "0.000");
}

TEST(report, dataset_write_and_load) {
  Dataset d = build_dataset(7, 20);
  d.entries.resize(20);
  d.digest = dataset_digest(d.entries);
  auto dir = std::filesystem::temp_directory_path() / "tlayer_dataset_test";
  std::filesystem::remove_all(dir);
  write_dataset(dir, d);
  Dataset back = load_dataset(dir);
  EXPECT_EQ(back.digest, d.digest);
  ASSERT_EQ(back.entries.size(), 20u);
  EXPECT_EQ(back.entries[5].circuit, d.entries[5].circuit);
  EXPECT_EQ(back.entries[5].label, d.entries[5].label);
  EXPECT_EQ(back.stats.depth_low, d.stats.depth_low);

  // Tampering is detected.
  std::filesystem::path victim = dir / circuit_file_name(d.entries[3]);
  Circuit c = load_circuit(victim);
  c.columns[0].phase = c.columns[0].phase * Sign::kMinus;
  save_circuit(victim, c);
  EXPECT_THROW(load_dataset(dir), ParseError);
  std::filesystem::remove_all(dir);
}
