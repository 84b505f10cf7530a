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

#include <cstddef>
#include <utility>
#include <vector>

#include "tlayer/algorithms.h"
#include "tlayer/circuit.h"

namespace tlayer {

struct ExpansionSpec {
  size_t factor = 2;
  size_t original_depth = 0;
  // Identity rows appended for the split and removed afterwards.
  size_t padding_rows_used = 0;
};

// Half-open qubit ranges of the f contiguous blocks over max(n_qubits, f)
// rows: block j covers [floor(j*N/f), floor((j+1)*N/f)). Ranges past
// n_qubits belong to padding rows.
std::vector<std::pair<size_t, size_t>> expansion_blocks(size_t n_qubits, size_t factor);

// Splits every column into one derived column per qubit block, in block
// order. A derived column keeps the source letters on its block, identity
// elsewhere, and the source sign. Derived columns with no T gate are dropped.
// Throws ParameterError for factor < 2.
Circuit expand(const Circuit& c, size_t factor, ExpansionSpec* spec = nullptr);

// expand() followed by `algo`. The returned result's percent_reduction uses
// the original (unexpanded) depth as baseline and may be negative; its
// initial_depth is the original depth and merge_log is relative to the
// expanded circuit.
struct ExpandedReduction {
  ExpansionSpec spec;
  Circuit expanded;
  Reduction reduction;
};
ExpandedReduction reduce_with_expansion(const Circuit& c, size_t factor, Algorithm algo,
                                        const ReduceOptions& opts = {});

}  // namespace tlayer
