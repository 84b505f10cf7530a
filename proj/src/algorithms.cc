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

#include <algorithm>
#include <numeric>

#include "tlayer/errors.h"
#include "exact_search.h"

namespace tlayer {

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kGreedy:
      return "greedy";
    case Algorithm::kDnc:
      return "dnc";
    case Algorithm::kGraph:
      return "graph";
    case Algorithm::kLookahead:
      return "lookahead";
    case Algorithm::kExact:
      return "exact";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kGreedy, Algorithm::kDnc, Algorithm::kGraph, Algorithm::kLookahead,
                      Algorithm::kExact}) {
    if (name == to_string(a)) return a;
  }
  return std::nullopt;
}

double percent_reduction(size_t initial, size_t final_depth) {
  if (initial == 0) return 0.0;
  return 100.0 * (static_cast<double>(initial) - static_cast<double>(final_depth)) / static_cast<double>(initial);
}

size_t equal_letter_count(const Column& a, const Column& b) {
  size_t n = 0;
  for (size_t i = 0; i < a.size(); ++i) n += a.letters[i] == b.letters[i];
  return n;
}

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
 public:
  std::chrono::nanoseconds elapsed() const { return Clock::now() - start_; }

 private:
  Clock::time_point start_ = Clock::now();
};

Reduction finish(const Circuit& input, std::vector<Column> columns, MergeLog log, Algorithm algo, const Timer& t) {
  Reduction r;
  r.circuit.n_qubits = input.n_qubits;
  r.circuit.columns = std::move(columns);
  r.result.algorithm = algo;
  r.result.initial_depth = input.depth();
  r.result.final_depth = r.circuit.depth();
  r.result.percent_reduction = percent_reduction(r.result.initial_depth, r.result.final_depth);
  r.result.merge_log = std::move(log);
  r.result.elapsed = t.elapsed();
  return r;
}

void append_shifted(MergeLog& dst, const MergeLog& src, size_t offset) {
  for (const MergeLogEntry& e : src) dst.push_back({e.left + offset, e.right + offset, e.result});
}

// One divide-and-conquer pass over in[s..e]. `offset` is where this range's
// output begins in the working list, which is what the log records.
std::vector<Column> dnc_range(std::span<const Column> in, size_t s, size_t e, size_t offset, MergeLog& log) {
  if (s == e) return {in[s]};
  size_t mid = (s + e) / 2;
  std::vector<Column> left = dnc_range(in, s, mid, offset, log);
  std::vector<Column> right = dnc_range(in, mid + 1, e, offset + left.size(), log);
  if (left.size() == 1 && right.size() == 1) {
    MergeOutcome m = merge_columns(left[0], right[0]);
    if (m) {
      log.push_back({offset, offset + 1, m.column()});
      return {std::move(m.column())};
    }
  }
  left.insert(left.end(), std::make_move_iterator(right.begin()), std::make_move_iterator(right.end()));
  return left;
}

class DisjointSets {
 public:
  explicit DisjointSets(size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), size_t{0}); }

  size_t find(size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Attaches `child`'s set under `root`; both must be roots.
  void attach(size_t child, size_t root) { parent_[child] = root; }

 private:
  std::vector<size_t> parent_;
};

// Prefix counts of surviving columns, for translating original indices into
// working-list positions.
class Fenwick {
 public:
  explicit Fenwick(size_t n) : tree_(n + 1, 0) {
    for (size_t i = 0; i < n; ++i) add(i, 1);
  }

  void add(size_t i, long delta) {
    for (++i; i < tree_.size(); i += i & (~i + 1)) tree_[i] += delta;
  }

  // Sum over [0, i).
  size_t prefix(size_t i) const {
    long s = 0;
    for (; i > 0; i -= i & (~i + 1)) s += tree_[i];
    return static_cast<size_t>(s);
  }

 private:
  std::vector<long> tree_;
};

void graph_pass(std::vector<Column>& cols, MergeLog& log) {
  const size_t n = cols.size();
  std::vector<WeightedEdge> edges;
  edges.reserve(n);
  for (size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, equal_letter_count(cols[i], cols[i + 1])});

  std::vector<WeightedEdge> tree = minimum_spanning_tree(n, std::move(edges));
  std::stable_sort(tree.begin(), tree.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return std::min(a.u, a.v) < std::min(b.u, b.v);
  });

  DisjointSets owner(n);
  Fenwick alive(n);
  std::vector<bool> removed(n, false);
  size_t remaining = n;
  for (const WeightedEdge& e : tree) {
    if (remaining <= 1) break;
    size_t a = owner.find(e.u);
    size_t b = owner.find(e.v);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    MergeOutcome m = merge_columns(cols[a], cols[b]);
    if (!m) continue;
    log.push_back({alive.prefix(a), alive.prefix(b), m.column()});
    cols[a] = std::move(m.column());
    removed[b] = true;
    alive.add(b, -1);
    owner.attach(b, a);
    --remaining;
  }

  size_t w = 0;
  for (size_t i = 0; i < n; ++i) {
    if (removed[i]) continue;
    if (w != i) cols[w] = std::move(cols[i]);
    ++w;
  }
  cols.resize(w);
}

}  // namespace

std::vector<WeightedEdge> minimum_spanning_tree(size_t n, std::vector<WeightedEdge> edges) {
  std::stable_sort(edges.begin(), edges.end(),
                   [](const WeightedEdge& a, const WeightedEdge& b) { return a.weight < b.weight; });
  DisjointSets sets(n);
  std::vector<WeightedEdge> tree;
  for (const WeightedEdge& e : edges) {
    size_t a = sets.find(e.u);
    size_t b = sets.find(e.v);
    if (a == b) continue;
    sets.attach(b, a);
    tree.push_back(e);
    if (tree.size() + 1 == n) break;
  }
  return tree;
}

Reduction reduce_greedy(const Circuit& c) {
  Timer timer;
  std::vector<Column> cols = c.columns;
  MergeLog log;
  bool merged = true;
  while (merged && cols.size() > 1) {
    merged = false;
    size_t i = 0;
    while (i + 1 < cols.size()) {
      MergeOutcome m = merge_columns(cols[i], cols[i + 1]);
      if (!m) {
        ++i;
        continue;
      }
      log.push_back({i, i + 1, m.column()});
      cols[i] = std::move(m.column());
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(i + 1));
      merged = true;
    }
  }
  return finish(c, std::move(cols), std::move(log), Algorithm::kGreedy, timer);
}

Reduction reduce_dnc(const Circuit& c) {
  Timer timer;
  std::vector<Column> cols = c.columns;
  MergeLog log;
  while (cols.size() > 1) {
    size_t before = log.size();
    cols = dnc_range(cols, 0, cols.size() - 1, 0, log);
    if (log.size() == before) break;
  }
  return finish(c, std::move(cols), std::move(log), Algorithm::kDnc, timer);
}

Reduction reduce_graph(const Circuit& c) {
  Timer timer;
  std::vector<Column> cols = c.columns;
  MergeLog log;
  while (cols.size() > 1) {
    size_t before = log.size();
    graph_pass(cols, log);
    if (log.size() == before) break;
  }
  return finish(c, std::move(cols), std::move(log), Algorithm::kGraph, timer);
}

Reduction reduce_lookahead(const Circuit& c, size_t k) {
  if (k < 2) throw ParameterError("lookahead partition size k must be >= 2, got " + std::to_string(k));
  Timer timer;
  std::vector<Column> cols = c.columns;
  MergeLog log;
  while (!cols.empty()) {
    std::vector<Column> next;
    next.reserve(cols.size());
    for (size_t start = 0; start < cols.size(); start += k) {
      size_t end = std::min(start + k, cols.size());
      std::vector<Column> window(std::make_move_iterator(cols.begin() + static_cast<std::ptrdiff_t>(start)),
                                 std::make_move_iterator(cols.begin() + static_cast<std::ptrdiff_t>(end)));
      MergeLog window_log;
      exact_search::minimize(window, window_log);
      append_shifted(log, window_log, next.size());
      next.insert(next.end(), std::make_move_iterator(window.begin()), std::make_move_iterator(window.end()));
    }
    bool shrank = next.size() < cols.size();
    cols = std::move(next);
    if (!shrank) break;
  }
  return finish(c, std::move(cols), std::move(log), Algorithm::kLookahead, timer);
}

Reduction exact_reduce(const Circuit& c, size_t max_columns) {
  if (c.depth() > max_columns) {
    throw SizeCapError("exact search refused: " + std::to_string(c.depth()) + " columns exceeds the cap of " +
                       std::to_string(max_columns));
  }
  Timer timer;
  std::vector<Column> cols = c.columns;
  MergeLog log;
  exact_search::minimize(cols, log);
  return finish(c, std::move(cols), std::move(log), Algorithm::kExact, timer);
}

Reduction reduce(const Circuit& c, Algorithm algo, const ReduceOptions& opts) {
  switch (algo) {
    case Algorithm::kGreedy:
      return reduce_greedy(c);
    case Algorithm::kDnc:
      return reduce_dnc(c);
    case Algorithm::kGraph:
      return reduce_graph(c);
    case Algorithm::kLookahead:
      return reduce_lookahead(c, opts.k);
    case Algorithm::kExact:
      return exact_reduce(c, opts.exact_cap);
  }
  throw ParameterError("unknown algorithm");
}

}  // namespace tlayer
