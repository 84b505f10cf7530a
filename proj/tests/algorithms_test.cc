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

#include "tlayer/algorithms.h"

#include "gtest/gtest.h"
#include "test_util.h"
#include "tlayer/errors.h"

using namespace tlayer;
using test::circuit;
using test::col;

namespace {

constexpr Algorithm kAll[] = {Algorithm::kGreedy, Algorithm::kDnc, Algorithm::kGraph, Algorithm::kLookahead,
                              Algorithm::kExact};

// Four columns on four qubits where (1,3) and (2,4) merge, no other pair
// merges, and the two merged columns have opposite phases.
Circuit layering_example() { return circuit({"+XIII", "-IIYI", "+IZII", "-IIIX"}); }

void expect_sound(const Circuit& in, const Reduction& r) {
  EXPECT_TRUE(is_well_formed(r.circuit));
  EXPECT_EQ(replay(in, r.result.merge_log), r.circuit);
  EXPECT_EQ(r.result.initial_depth, in.depth());
  EXPECT_EQ(r.result.final_depth, r.circuit.depth());
  EXPECT_LE(r.result.final_depth, r.result.initial_depth);
  EXPECT_EQ(r.result.merge_log.size(), in.depth() - r.circuit.depth());
  EXPECT_DOUBLE_EQ(r.result.percent_reduction, percent_reduction(in.depth(), r.circuit.depth()));
}

}  // namespace

TEST(algorithms, names_round_trip) {
  for (Algorithm a : kAll) EXPECT_EQ(parse_algorithm(to_string(a)), a);
  EXPECT_FALSE(parse_algorithm("annealing"));
}

TEST(algorithms, single_column_is_untouched) {
  Circuit c = circuit({"+XZ"});
  for (Algorithm a : kAll) {
    Reduction r = reduce(c, a);
    EXPECT_EQ(r.circuit, c) << to_string(a);
    EXPECT_EQ(r.result.percent_reduction, 0.0);
    EXPECT_TRUE(r.result.merge_log.empty());
  }
}

TEST(algorithms, two_mergeable_columns) {
  Circuit c = circuit({"+XI", "+IZ"});
  for (Algorithm a : kAll) {
    Reduction r = reduce(c, a);
    EXPECT_EQ(r.circuit, circuit({"+XZ"})) << to_string(a);
    EXPECT_DOUBLE_EQ(r.result.percent_reduction, 50.0);
    expect_sound(c, r);
  }
}

TEST(algorithms, phase_inconsistent_pair_is_kept) {
  Circuit c = circuit({"+XI", "-IZ"});
  for (Algorithm a : kAll) EXPECT_EQ(reduce(c, a).circuit, c) << to_string(a);
}

TEST(greedy, continues_from_merged_column) {
  // After merging 0 and 1, the merged +XZI is compared with +IIY.
  Circuit c = circuit({"+XII", "+IZI", "+IIY", "-XYI"});
  Reduction r = reduce_greedy(c);
  EXPECT_EQ(r.circuit, circuit({"+XZY", "-XYI"}));
  MergeLog expected{{0, 1, col("+XZI")}, {0, 1, col("+XZY")}};
  EXPECT_EQ(r.result.merge_log, expected);
}

TEST(dnc, collapses_full_recursion_tree) {
  Circuit c = circuit({"+XIII", "+IXII", "+IIXI", "+IIIX"});
  Reduction r = reduce_dnc(c);
  EXPECT_EQ(r.circuit, circuit({"+XXXX"}));
  MergeLog expected{{0, 1, col("+XXII")}, {1, 2, col("+IIXX")}, {0, 1, col("+XXXX")}};
  EXPECT_EQ(r.result.merge_log, expected);
  expect_sound(c, r);
}

TEST(dnc, nothing_mergeable) {
  Circuit c = circuit({"+X", "+Z", "+X"});
  EXPECT_EQ(reduce_dnc(c).circuit, c);
}

TEST(dnc, never_reorders) {
  // The first and last columns merge, but never meet in the recursion.
  Circuit c = circuit({"+XI", "-IZ", "+IX"});
  EXPECT_EQ(reduce_dnc(c).circuit, c);
  EXPECT_EQ(exact_reduce(c).circuit.depth(), 2u);
}

TEST(dnc, repeats_until_fixpoint) {
  // First pass: [A,B] fails, C stays, [D,E] merges -> A B C DE. The second
  // pass pairs C with DE.
  Circuit c = circuit({"+XIII", "-ZIII", "+IXII", "+IIXI", "+IIIX"});
  Reduction r = reduce_dnc(c);
  expect_sound(c, r);
  EXPECT_EQ(r.circuit, circuit({"+XIII", "-ZIII", "+IXXX"}));
}

TEST(graph, identical_columns_are_rejected) {
  Circuit c = circuit({"+XZ", "+XZ"});
  EXPECT_EQ(reduce_graph(c).circuit, c);
}

TEST(graph, later_edges_follow_merged_columns) {
  // w(0,1) = 2 > w(1,2) = 1, so (0,1) merges first and edge (1,2) then
  // targets the merged column at position 0.
  Circuit c = circuit({"+XIII", "+IZII", "+IIYX"});
  EXPECT_EQ(equal_letter_count(c.columns[0], c.columns[1]), 2u);
  EXPECT_EQ(equal_letter_count(c.columns[1], c.columns[2]), 1u);
  Reduction r = reduce_graph(c);
  MergeLog expected{{0, 1, col("+XZII")}, {0, 1, col("+XZYX")}};
  EXPECT_EQ(r.result.merge_log, expected);
  EXPECT_EQ(r.circuit, circuit({"+XZYX"}));
}

TEST(graph, ties_prefer_smaller_left_index) {
  Circuit c = circuit({"+XII", "+IXI", "+XII"});
  Reduction r = reduce_graph(c);
  ASSERT_FALSE(r.result.merge_log.empty());
  EXPECT_EQ(r.result.merge_log[0], (MergeLogEntry{0, 1, col("+XXI")}));
  EXPECT_EQ(r.circuit, circuit({"+IXI"}));
}

TEST(graph, heavier_edges_first) {
  // w(0,1) = 0, w(1,2) = 2: the right pair merges first.
  Circuit c = circuit({"+XXXX", "+IIZI", "+IIIY"});
  EXPECT_EQ(equal_letter_count(c.columns[0], c.columns[1]), 0u);
  EXPECT_EQ(equal_letter_count(c.columns[1], c.columns[2]), 2u);
  Reduction r = reduce_graph(c);
  MergeLog expected{{1, 2, col("+IIZY")}};
  EXPECT_EQ(r.result.merge_log, expected);
}

TEST(mst, path_graph_keeps_every_edge) {
  std::vector<WeightedEdge> edges{{0, 1, 3}, {1, 2, 1}, {2, 3, 2}};
  auto tree = minimum_spanning_tree(4, edges);
  EXPECT_EQ(tree.size(), 3u);
}

TEST(mst, drops_heaviest_cycle_edge) {
  std::vector<WeightedEdge> edges{{0, 1, 1}, {1, 2, 2}, {0, 2, 5}, {2, 3, 1}};
  auto tree = minimum_spanning_tree(4, edges);
  size_t total = 0;
  for (const WeightedEdge& e : tree) total += e.weight;
  EXPECT_EQ(tree.size(), 3u);
  EXPECT_EQ(total, 4u);
}

TEST(lookahead, whole_circuit_window_is_exact) {
  Circuit c = layering_example();
  EXPECT_EQ(reduce_lookahead(c, 4).circuit.depth(), 2u);
  EXPECT_EQ(reduce_lookahead(c, 4).circuit, exact_reduce(c).circuit);
}

TEST(lookahead, small_windows_miss_distant_merges) {
  EXPECT_EQ(reduce_lookahead(layering_example(), 2).circuit.depth(), 4u);
}

TEST(lookahead, rejects_small_k) {
  EXPECT_THROW(reduce_lookahead(layering_example(), 1), ParameterError);
  EXPECT_THROW(reduce_lookahead(layering_example(), 0), ParameterError);
}

TEST(lookahead, windows_are_offset_in_log) {
  // Two windows of 2; only the second merges, at working positions (1, 2).
  Circuit c = circuit({"+XI", "-IZ", "+IX", "+ZI"});
  Reduction r = reduce_lookahead(c, 2);
  expect_sound(c, r);
  ASSERT_FALSE(r.result.merge_log.empty());
  EXPECT_EQ(r.result.merge_log[0], (MergeLogEntry{2, 3, col("+ZX")}));
}

TEST(exact, layering_example_reaches_two) {
  Circuit c = layering_example();
  Reduction r = exact_reduce(c);
  EXPECT_EQ(r.circuit.depth(), 2u);
  expect_sound(c, r);
  // The two merged layers cannot merge further.
  MergeOutcome m = merge_columns(r.circuit.columns[0], r.circuit.columns[1]);
  ASSERT_FALSE(m);
  EXPECT_EQ(m.rejection(), MergeRejection::kPhaseInconsistent);
  // Heuristics bound to adjacent pairs get nowhere.
  EXPECT_EQ(reduce_greedy(c).circuit.depth(), 4u);
  EXPECT_EQ(reduce_dnc(c).circuit.depth(), 4u);
  EXPECT_EQ(reduce_graph(c).circuit.depth(), 4u);
}

TEST(exact, no_mergeable_pair) {
  Circuit c = circuit({"+XY", "+ZX", "+YZ"});
  EXPECT_EQ(exact_reduce(c).circuit, c);
}

TEST(exact, size_cap) {
  Circuit c;
  c.n_qubits = 13;
  for (size_t i = 0; i < 13; ++i) {
    Column k(Sign::kPlus, std::vector<PauliLetter>(13, PauliLetter::I));
    k.letters[i] = PauliLetter::Z;
    c.columns.push_back(k);
  }
  EXPECT_THROW(exact_reduce(c), SizeCapError);
  EXPECT_THROW(reduce(c, Algorithm::kExact), SizeCapError);
  EXPECT_EQ(exact_reduce(c, 13).circuit.depth(), 1u);
}

TEST(exact, matches_unmemoized_brute_force) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    Circuit c = test::random_circuit(rng, 2 + rng() % 4, 2 + rng() % 5, 2 + rng() % 8);
    EXPECT_EQ(exact_reduce(c).circuit.depth(), test::brute_force_min_depth(c.columns)) << trial;
  }
}

TEST(algorithms, properties_on_random_circuits) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    Circuit c = test::random_circuit(rng, 2 + rng() % 4, 1 + rng() % 8, 1 + rng() % 8);
    size_t exact_depth = exact_reduce(c).circuit.depth();
    for (Algorithm a : kAll) {
      Reduction r = reduce(c, a);
      expect_sound(c, r);
      EXPECT_GE(r.circuit.depth(), exact_depth) << to_string(a);
      // Deterministic.
      EXPECT_EQ(reduce(c, a).circuit, r.circuit);
      // Fixpoint.
      Reduction again = reduce(r.circuit, a);
      EXPECT_TRUE(again.result.merge_log.empty()) << to_string(a) << " trial " << trial;
      EXPECT_EQ(again.circuit, r.circuit);
    }
    EXPECT_EQ(reduce_lookahead(c, std::max<size_t>(2, c.depth())).circuit.depth(), exact_depth);
  }
}
