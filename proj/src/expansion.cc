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

#include "tlayer/expansion.h"

#include <algorithm>

#include "tlayer/errors.h"

namespace tlayer {

std::vector<std::pair<size_t, size_t>> expansion_blocks(size_t n_qubits, size_t factor) {
  if (factor < 2) throw ParameterError("expansion factor must be >= 2, got " + std::to_string(factor));
  size_t rows = std::max(n_qubits, factor);
  std::vector<std::pair<size_t, size_t>> blocks;
  blocks.reserve(factor);
  for (size_t j = 0; j < factor; ++j) blocks.emplace_back(j * rows / factor, (j + 1) * rows / factor);
  return blocks;
}

Circuit expand(const Circuit& c, size_t factor, ExpansionSpec* spec) {
  auto blocks = expansion_blocks(c.n_qubits, factor);
  Circuit out;
  out.n_qubits = c.n_qubits;
  out.columns.reserve(c.depth() * std::min(factor, c.n_qubits));
  for (const Column& col : c.columns) {
    for (auto [lo, hi] : blocks) {
      // Padding rows hold identities only.
      hi = std::min(hi, c.n_qubits);
      if (lo >= hi) continue;
      Column derived(col.phase, std::vector<PauliLetter>(c.n_qubits, PauliLetter::I));
      bool any = false;
      for (size_t r = lo; r < hi; ++r) {
        derived.letters[r] = col.letters[r];
        any |= col.letters[r] != PauliLetter::I;
      }
      if (any) out.columns.push_back(std::move(derived));
    }
  }
  if (spec) {
    spec->factor = factor;
    spec->original_depth = c.depth();
    spec->padding_rows_used = factor > c.n_qubits ? factor - c.n_qubits : 0;
  }
  return out;
}

ExpandedReduction reduce_with_expansion(const Circuit& c, size_t factor, Algorithm algo, const ReduceOptions& opts) {
  ExpandedReduction out;
  out.expanded = expand(c, factor, &out.spec);
  out.reduction = reduce(out.expanded, algo, opts);
  ReductionResult& r = out.reduction.result;
  r.initial_depth = c.depth();
  r.percent_reduction = percent_reduction(c.depth(), r.final_depth);
  return out;
}

}  // namespace tlayer
