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

#include "tlayer/generator.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "tlayer/errors.h"
#include "tlayer/rng.h"

namespace tlayer {

void validate(const CircuitParams& p) {
  if (p.n_qubits == 0 || p.n_columns == 0) throw ParameterError("n_qubits and n_columns must be positive");
  size_t lo = std::max(p.n_qubits, p.n_columns);
  size_t hi = p.n_qubits * p.n_columns;
  if (p.n_tgates < lo || p.n_tgates > hi) {
    throw ParameterError("n_tgates=" + std::to_string(p.n_tgates) + " outside [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "] for " + std::to_string(p.n_qubits) + " qubits x " +
                         std::to_string(p.n_columns) + " columns");
  }
}

namespace {

// i-th of `count` values linearly spaced on [lo, hi], rounded half away from zero.
size_t spaced(size_t lo, size_t hi, size_t i, size_t count) {
  double t = static_cast<double>(i) / static_cast<double>(count - 1);
  double v = static_cast<double>(lo) + t * static_cast<double>(hi - lo);
  return static_cast<size_t>(std::llround(v));
}

}  // namespace

std::vector<CircuitParams> parameter_grid(uint64_t master_seed, size_t max_qubits) {
  std::vector<CircuitParams> grid;
  grid.reserve(kGridSize);
  uint64_t index = 0;
  for (size_t qi = 1; qi <= kGridQubitValues; ++qi) {
    size_t q = 10 * qi;
    for (size_t ci = 0; ci < kGridColumnValues; ++ci) {
      size_t c = spaced(1, 10 * q, ci, kGridColumnValues);
      size_t lo = std::max(q, c);
      size_t hi = q * c;
      for (size_t ti = 0; ti < kGridTValues; ++ti, ++index) {
        size_t t = std::clamp(spaced(lo, hi, ti, kGridTValues), lo, hi);
        if (q <= max_qubits) grid.push_back({q, c, t, derive_seed(master_seed, index)});
      }
    }
  }
  return grid;
}

Circuit generate(const CircuitParams& p) {
  validate(p);
  const size_t q = p.n_qubits;
  const size_t c = p.n_columns;
  Rng rng(p.seed);

  std::vector<Sign> phases(c);
  for (Sign& s : phases) s = rng.coin() ? Sign::kMinus : Sign::kPlus;

  // occupied[r * c + j]
  std::vector<uint8_t> occupied(q * c, 0);
  std::vector<size_t> row_count(q, 0);
  size_t placed = 0;
  auto put = [&](size_t r, size_t j) {
    occupied[r * c + j] = 1;
    ++row_count[r];
    ++placed;
  };

  for (size_t j = 0; j < c; ++j) put(rng.below(q), j);

  for (size_t r = 0; r < q; ++r) {
    if (row_count[r] != 0) continue;
    if (placed < p.n_tgates) {
      put(r, rng.below(c));
      continue;
    }
    // placed == n_tgates >= q with an empty row, so some row holds >= 2 cells.
    std::vector<std::pair<size_t, size_t>> movable;
    for (size_t rr = 0; rr < q; ++rr) {
      if (row_count[rr] < 2) continue;
      for (size_t j = 0; j < c; ++j) {
        if (occupied[rr * c + j]) movable.emplace_back(rr, j);
      }
    }
    auto [from, j] = movable[rng.below(movable.size())];
    occupied[from * c + j] = 0;
    --row_count[from];
    --placed;
    put(r, j);
  }

  std::vector<size_t> empty;  // cell ids j * q + r, column-major
  empty.reserve(q * c - placed);
  for (size_t j = 0; j < c; ++j) {
    for (size_t r = 0; r < q; ++r) {
      if (!occupied[r * c + j]) empty.push_back(j * q + r);
    }
  }
  size_t remaining = p.n_tgates - placed;
  for (size_t i = 0; i < remaining; ++i) {
    size_t pick = i + rng.below(empty.size() - i);
    std::swap(empty[i], empty[pick]);
    size_t id = empty[i];
    put(id % q, id / q);
  }

  Circuit out;
  out.n_qubits = q;
  out.columns.reserve(c);
  static constexpr PauliLetter kLetters[] = {PauliLetter::X, PauliLetter::Y, PauliLetter::Z};
  for (size_t j = 0; j < c; ++j) {
    Column col(phases[j], std::vector<PauliLetter>(q, PauliLetter::I));
    for (size_t r = 0; r < q; ++r) {
      if (occupied[r * c + j]) col.letters[r] = kLetters[rng.below(3)];
    }
    out.columns.push_back(std::move(col));
  }
  return out;
}

double t_gate_density(const Circuit& c) {
  if (c.columns.empty() || c.n_qubits == 0) return 0.0;
  return static_cast<double>(c.t_count()) / static_cast<double>(c.n_qubits * c.columns.size());
}

std::string ClassLabel::str() const {
  static constexpr char kDepth[] = "SMD";
  static constexpr char kDensity[] = "LMH";
  static constexpr char kQubits[] = "SML";
  return {kDepth[static_cast<int>(depth)], '-', kDensity[static_cast<int>(density)], '-',
          kQubits[static_cast<int>(qubits)]};
}

size_t ClassLabel::index() const {
  return static_cast<size_t>(depth) * 9 + static_cast<size_t>(density) * 3 + static_cast<size_t>(qubits);
}

std::optional<ClassLabel> ClassLabel::parse(std::string_view text) {
  for (const ClassLabel& l : all()) {
    if (l.str() == text) return l;
  }
  return std::nullopt;
}

std::array<ClassLabel, 27> ClassLabel::all() {
  std::array<ClassLabel, 27> out;
  for (size_t i = 0; i < 27; ++i) {
    out[i] = {static_cast<DepthClass>(i / 9), static_cast<DensityClass>(i / 3 % 3), static_cast<QubitClass>(i % 3)};
  }
  return out;
}

namespace {

template <typename T>
std::pair<T, T> tertile_cuts(std::vector<T> values) {
  if (values.empty()) return {T{}, T{}};
  std::sort(values.begin(), values.end());
  size_t n = values.size();
  T low = values[(n + 2) / 3 - 1];
  T high = values[(2 * n + 2) / 3 - 1];

  std::vector<T> distinct = values;
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  size_t m = distinct.size();
  if (m >= 3) {
    low = std::min(low, distinct[m - 3]);
    T next_after_low = *std::upper_bound(distinct.begin(), distinct.end(), low);
    high = std::max(std::min(high, distinct[m - 2]), next_after_low);
  }
  return {low, high};
}

}  // namespace

DatasetStats compute_stats(std::span<const size_t> column_counts, std::span<const double> densities) {
  DatasetStats s;
  std::tie(s.depth_low, s.depth_high) = tertile_cuts(std::vector<size_t>(column_counts.begin(), column_counts.end()));
  std::tie(s.density_low, s.density_high) = tertile_cuts(std::vector<double>(densities.begin(), densities.end()));
  return s;
}

DatasetStats compute_stats(std::span<const Circuit> circuits) {
  std::vector<size_t> counts;
  std::vector<double> densities;
  for (const Circuit& c : circuits) {
    counts.push_back(c.depth());
    densities.push_back(t_gate_density(c));
  }
  return compute_stats(counts, densities);
}

QubitClass qubit_class(size_t n_qubits) {
  if (n_qubits <= 30) return QubitClass::kSmall;
  if (n_qubits <= 70) return QubitClass::kMedium;
  return QubitClass::kLarge;
}

ClassLabel classify(size_t n_columns, double density, size_t n_qubits, const DatasetStats& stats) {
  ClassLabel l;
  l.depth = n_columns <= stats.depth_low    ? DepthClass::kShallow
            : n_columns <= stats.depth_high ? DepthClass::kMedium
                                            : DepthClass::kDeep;
  l.density = density <= stats.density_low    ? DensityClass::kLow
              : density <= stats.density_high ? DensityClass::kMedium
                                              : DensityClass::kHigh;
  l.qubits = qubit_class(n_qubits);
  return l;
}

ClassLabel classify(const Circuit& c, const DatasetStats& stats) {
  return classify(c.depth(), t_gate_density(c), c.n_qubits, stats);
}

}  // namespace tlayer
