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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tlayer/circuit.h"

namespace tlayer {

enum class Algorithm { kGreedy, kDnc, kGraph, kLookahead, kExact };

// "greedy", "dnc", "graph", "lookahead", "exact".
const char* to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);

// The four heuristics, in reporting order.
inline constexpr Algorithm kHeuristics[] = {Algorithm::kGreedy, Algorithm::kDnc, Algorithm::kGraph,
                                            Algorithm::kLookahead};

inline constexpr size_t kDefaultLookaheadK = 4;
inline constexpr size_t kDefaultExactCap = 12;

struct ReductionResult {
  Algorithm algorithm = Algorithm::kGreedy;
  size_t initial_depth = 0;
  size_t final_depth = 0;
  double percent_reduction = 0.0;
  MergeLog merge_log;
  std::chrono::nanoseconds elapsed{0};
};

struct Reduction {
  Circuit circuit;
  ReductionResult result;
};

// 100 * (initial - final) / initial; 0 for an empty circuit. May be negative.
double percent_reduction(size_t initial, size_t final_depth);

// Adjacent-pair sweeps, left to right. After a merge at i the sweep compares
// the merged column with its new right neighbour. Stops after a sweep with no
// merge.
Reduction reduce_greedy(const Circuit& c);

// Recursive halving; two halves are merged only when both reduced to a single
// column. Column order is never changed. Passes repeat until one performs no
// merge, so the output is a fixpoint.
Reduction reduce_dnc(const Circuit& c);

// Path graph over adjacent columns weighted by the number of positions with
// equal letters (I = I counts). Edges of its minimum spanning tree are tried
// in descending weight order (ties: smaller left index), each endpoint
// redirected to the column that absorbed it. Passes repeat until one
// performs no merge.
Reduction reduce_graph(const Circuit& c);

// Consecutive windows of k columns, each replaced by its exact reduction.
// Passes repeat until one leaves the column count unchanged; a circuit with
// at most k columns is therefore reduced exactly. Throws ParameterError for
// k < 2.
Reduction reduce_lookahead(const Circuit& c, size_t k = kDefaultLookaheadK);

// Minimum column count reachable by merging any pair of columns, found by a
// memoized depth-first search over column multisets. Throws SizeCapError
// when the circuit has more than `max_columns` columns.
Reduction exact_reduce(const Circuit& c, size_t max_columns = kDefaultExactCap);

struct ReduceOptions {
  size_t k = kDefaultLookaheadK;
  size_t exact_cap = kDefaultExactCap;
};

Reduction reduce(const Circuit& c, Algorithm algo, const ReduceOptions& opts = {});

// Kruskal's algorithm over an undirected weighted graph on `n` nodes.
struct WeightedEdge {
  size_t u = 0;
  size_t v = 0;
  size_t weight = 0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};
std::vector<WeightedEdge> minimum_spanning_tree(size_t n, std::vector<WeightedEdge> edges);

// Equal-letter positions of two columns, identity pairs included.
size_t equal_letter_count(const Column& a, const Column& b);

}  // namespace tlayer
