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

#include "exact_search.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>

namespace tlayer::exact_search {
namespace {

// Search states are column multisets, held as sorted vectors. Any permutation
// of the same columns reaches the same set of merge results, so ordering the
// columns loses nothing.
using State = std::vector<Column>;

constexpr uint16_t kNoMove = UINT16_MAX;

struct Best {
  size_t depth = 0;
  // Pair to merge next, as positions in the sorted state.
  uint16_t i = kNoMove;
  uint16_t j = kNoMove;
};

std::string state_key(const State& s) {
  std::string key;
  key.reserve(s.size() * (s.empty() ? 1 : s[0].size() + 1));
  for (const Column& c : s) {
    key.push_back(sign_char(c.phase));
    for (PauliLetter l : c.letters) key.push_back(static_cast<char>('0' + static_cast<int>(l)));
  }
  return key;
}

class Search {
 public:
  size_t solve(const State& state) {
    std::string key = state_key(state);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second.depth;

    Best best{state.size()};
    for (size_t i = 0; i < state.size() && best.depth > 1; ++i) {
      for (size_t j = i + 1; j < state.size() && best.depth > 1; ++j) {
        MergeOutcome m = merge_columns(state[i], state[j]);
        if (!m) continue;
        State child;
        child.reserve(state.size() - 1);
        for (size_t x = 0; x < state.size(); ++x) {
          if (x != i && x != j) child.push_back(state[x]);
        }
        child.insert(std::upper_bound(child.begin(), child.end(), m.column()), std::move(m.column()));
        size_t depth = solve(child);
        if (depth < best.depth) best = {depth, static_cast<uint16_t>(i), static_cast<uint16_t>(j)};
      }
    }
    memo_.emplace(std::move(key), best);
    return best.depth;
  }

  const Best& lookup(const State& state) const { return memo_.at(state_key(state)); }

 private:
  std::unordered_map<std::string, Best> memo_;
};

}  // namespace

void minimize(std::vector<Column>& columns, MergeLog& log) {
  if (columns.size() < 2) return;

  // Sorted copy plus the permutation back to working positions.
  auto sorted_view = [&](std::vector<size_t>& order) {
    order.resize(columns.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return columns[a] < columns[b]; });
    State s;
    s.reserve(columns.size());
    for (size_t x : order) s.push_back(columns[x]);
    return s;
  };

  Search search;
  std::vector<size_t> order;
  State state = sorted_view(order);
  search.solve(state);

  // Follow the recorded best moves; every state on this path was solved.
  while (true) {
    const Best& best = search.lookup(state);
    if (best.i == kNoMove) break;
    size_t a = order[best.i];
    size_t b = order[best.j];
    size_t left = std::min(a, b);
    size_t right = std::max(a, b);
    MergeOutcome m = merge_columns(columns[left], columns[right]);
    log.push_back({left, right, m.column()});
    columns[left] = std::move(m.column());
    columns.erase(columns.begin() + static_cast<std::ptrdiff_t>(right));
    state = sorted_view(order);
  }
}

}  // namespace tlayer::exact_search
