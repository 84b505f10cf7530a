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

#include "tlayer/circuit.h"

#include <algorithm>
#include <optional>

#include "tlayer/errors.h"

namespace tlayer {

Column Column::from_string(Sign phase, std::string_view letters) {
  Column c;
  c.phase = phase;
  c.letters.reserve(letters.size());
  for (char ch : letters) {
    auto l = parse_letter(ch);
    if (!l) throw ParseError(std::string("unknown Pauli letter '") + ch + "'");
    c.letters.push_back(*l);
  }
  return c;
}

SignedPauli Column::cell(size_t i) const {
  PauliLetter l = letters[i];
  return {l == PauliLetter::I ? Sign::kPlus : phase, l};
}

size_t Column::support_size() const {
  return letters.size() - static_cast<size_t>(std::count(letters.begin(), letters.end(), PauliLetter::I));
}

std::string Column::str() const {
  std::string out;
  out.reserve(letters.size() + 1);
  out.push_back(sign_char(phase));
  for (PauliLetter l : letters) out.push_back(letter_char(l));
  return out;
}

size_t Circuit::t_count() const {
  size_t n = 0;
  for (const Column& c : columns) n += c.support_size();
  return n;
}

const char* to_string(MergeRejection r) {
  switch (r) {
    case MergeRejection::kNonCommuting:
      return "NonCommuting";
    case MergeRejection::kPhaseInconsistent:
      return "PhaseInconsistent";
    case MergeRejection::kAllIdentity:
      return "AllIdentity";
  }
  return "?";
}

namespace {

void require_same_width(const Column& a, const Column& b) {
  if (a.size() != b.size()) {
    throw StructuralError("column widths differ: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
  }
}

}  // namespace

bool column_commutes(const Column& a, const Column& b) {
  require_same_width(a, b);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!letters_commute(a.letters[i], b.letters[i])) return false;
  }
  return true;
}

MergeOutcome merge_columns(const Column& a, const Column& b) {
  if (!column_commutes(a, b)) return MergeRejection::kNonCommuting;

  Column out;
  out.letters.resize(a.size(), PauliLetter::I);
  std::optional<Sign> shared;
  bool consistent = true;
  for (size_t i = 0; i < a.size(); ++i) {
    PhasedPauli p = multiply(a.cell(i), b.cell(i));
    if (p.letter == PauliLetter::I) continue;  // identity cells drop their sign
    out.letters[i] = p.letter;
    // Commuting letters always give a real phase.
    Sign s = *real_sign(p.phase);
    if (!shared) {
      shared = s;
    } else if (*shared != s) {
      consistent = false;
    }
  }
  if (!consistent) return MergeRejection::kPhaseInconsistent;
  if (!shared) return MergeRejection::kAllIdentity;
  out.phase = *shared;
  return out;
}

bool is_well_formed(const Circuit& c) {
  return std::all_of(c.columns.begin(), c.columns.end(), [&](const Column& col) {
    return col.size() == c.n_qubits && !col.is_identity();
  });
}

Circuit replay(const Circuit& input, std::span<const MergeLogEntry> log) {
  Circuit out = input;
  auto& cols = out.columns;
  for (size_t n = 0; n < log.size(); ++n) {
    const MergeLogEntry& e = log[n];
    std::string where = "merge log entry " + std::to_string(n);
    if (e.left >= e.right || e.right >= cols.size()) {
      throw ReplayError(where + ": indices (" + std::to_string(e.left) + ", " + std::to_string(e.right) +
                        ") invalid for " + std::to_string(cols.size()) + " columns");
    }
    MergeOutcome m = merge_columns(cols[e.left], cols[e.right]);
    if (!m) throw ReplayError(where + ": merge rejected (" + to_string(m.rejection()) + ")");
    if (m.column() != e.result) {
      throw ReplayError(where + ": result " + m.column().str() + " differs from recorded " + e.result.str());
    }
    cols[e.left] = std::move(m.column());
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(e.right));
  }
  return out;
}

}  // namespace tlayer
