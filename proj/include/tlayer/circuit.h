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
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tlayer/pauli.h"

namespace tlayer {

// One T layer: a global sign and one letter per qubit.
//
// Cell i is the signed Pauli (phase * letters[i]) when letters[i] != I and
// +I otherwise; identity cells never inherit the column sign.
struct Column {
  Sign phase = Sign::kPlus;
  std::vector<PauliLetter> letters;

  Column() = default;
  Column(Sign phase, std::vector<PauliLetter> letters) : phase(phase), letters(std::move(letters)) {}

  // Builds a column from a compact letter string such as "XIZY".
  static Column from_string(Sign phase, std::string_view letters);

  size_t size() const { return letters.size(); }
  SignedPauli cell(size_t i) const;
  size_t support_size() const;
  bool is_identity() const { return support_size() == 0; }
  // "+XIZY".
  std::string str() const;

  friend bool operator==(const Column&, const Column&) = default;
  friend auto operator<=>(const Column&, const Column&) = default;
};

// An ordered list of columns over a fixed qubit count. T-depth is the column count.
struct Circuit {
  size_t n_qubits = 0;
  std::vector<Column> columns;

  size_t depth() const { return columns.size(); }
  size_t t_count() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

enum class MergeRejection { kNonCommuting, kPhaseInconsistent, kAllIdentity };

const char* to_string(MergeRejection r);

class MergeOutcome {
 public:
  MergeOutcome(Column merged) : value_(std::move(merged)) {}
  MergeOutcome(MergeRejection r) : value_(r) {}

  bool ok() const { return std::holds_alternative<Column>(value_); }
  explicit operator bool() const { return ok(); }
  const Column& column() const { return std::get<Column>(value_); }
  Column& column() { return std::get<Column>(value_); }
  MergeRejection rejection() const { return std::get<MergeRejection>(value_); }

 private:
  std::variant<Column, MergeRejection> value_;
};

// Records one successful merge. Indices refer to the working column list at
// the time of the merge: the result replaces `left` and `right` is erased.
struct MergeLogEntry {
  size_t left = 0;
  size_t right = 0;
  Column result;

  friend bool operator==(const MergeLogEntry&, const MergeLogEntry&) = default;
};

using MergeLog = std::vector<MergeLogEntry>;

// True iff every position holds commuting letters. Throws StructuralError on
// a width mismatch.
bool column_commutes(const Column& a, const Column& b);

// Element-wise product of two columns with the phase-consistency check.
// Throws StructuralError on a width mismatch.
MergeOutcome merge_columns(const Column& a, const Column& b);

bool is_well_formed(const Circuit& c);

// Applies a merge log to `input`. Throws ReplayError if any entry is out of
// range, rejected by merge_columns, or disagrees with its recorded result.
Circuit replay(const Circuit& input, std::span<const MergeLogEntry> log);

}  // namespace tlayer
