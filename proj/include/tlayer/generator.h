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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tlayer/circuit.h"

namespace tlayer {

struct CircuitParams {
  size_t n_qubits = 0;
  size_t n_columns = 0;
  size_t n_tgates = 0;
  uint64_t seed = 0;

  friend bool operator==(const CircuitParams&, const CircuitParams&) = default;
};

// Throws ParameterError unless
// max(n_qubits, n_columns) <= n_tgates <= n_qubits * n_columns.
void validate(const CircuitParams& p);

inline constexpr size_t kGridQubitValues = 10;
inline constexpr size_t kGridColumnValues = 15;
inline constexpr size_t kGridTValues = 15;
inline constexpr size_t kGridSize = kGridQubitValues * kGridColumnValues * kGridTValues;

// The 2,250-point benchmark grid. Qubits run over 10, 20, ..., 100; columns
// over 15 values linearly spaced on [1, 10q]; T gates over 15 values linearly
// spaced on [max(q, c), q*c]. Spaced values are rounded half away from zero;
// duplicates are kept. Seeds are derive_seed(master_seed, grid index).
//
// `max_qubits` truncates the qubit axis (the quick subgrid uses 40).
std::vector<CircuitParams> parameter_grid(uint64_t master_seed = 0, size_t max_qubits = 100);

// Random T-only circuit with exactly p.n_tgates non-identity cells and at
// least one per row and per column. Deterministic in p. Draw order from
// Rng(p.seed):
//   1. one sign per column, left to right (coin);
//   2. one row per column, left to right (below(q));
//   3. each row still empty, top to bottom: if fewer than n_tgates cells are
//      placed, add a cell in a uniform column of that row; otherwise pick a
//      uniform cell among rows holding >= 2 cells (row-major order) and move
//      it down its column into the empty row;
//   4. the remaining cells, sampled without replacement from the empty cells
//      in column-major order by a partial Fisher-Yates shuffle;
//   5. one letter per non-identity cell, column-major, uniform over {X, Y, Z}.
Circuit generate(const CircuitParams& p);

// Non-identity cells / (n_qubits * n_columns).
double t_gate_density(const Circuit& c);

enum class DepthClass : uint8_t { kShallow, kMedium, kDeep };
enum class DensityClass : uint8_t { kLow, kMedium, kHigh };
enum class QubitClass : uint8_t { kSmall, kMedium, kLarge };

struct ClassLabel {
  DepthClass depth = DepthClass::kShallow;
  DensityClass density = DensityClass::kLow;
  QubitClass qubits = QubitClass::kSmall;

  // "S-L-S", "D-H-L", ...
  std::string str() const;
  // Index in [0, 27).
  size_t index() const;
  static std::optional<ClassLabel> parse(std::string_view text);
  static std::array<ClassLabel, 27> all();

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

// Tertile cut points over a dataset. A value v is in the lowest class when
// v <= low, the highest when v > high, the middle otherwise.
struct DatasetStats {
  size_t depth_low = 0;
  size_t depth_high = 0;
  double density_low = 0.0;
  double density_high = 0.0;
};

// Cut points at the 1/3 and 2/3 nearest-rank percentiles. When there are at
// least three distinct values the cuts are nudged so each class is nonempty.
DatasetStats compute_stats(std::span<const size_t> column_counts, std::span<const double> densities);
DatasetStats compute_stats(std::span<const Circuit> circuits);

QubitClass qubit_class(size_t n_qubits);
ClassLabel classify(size_t n_columns, double density, size_t n_qubits, const DatasetStats& stats);
ClassLabel classify(const Circuit& c, const DatasetStats& stats);

}  // namespace tlayer
