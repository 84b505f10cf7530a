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

#include "tlayer/pauli.h"

namespace tlayer {

char letter_char(PauliLetter l) { return "IXYZ"[static_cast<int>(l)]; }

std::optional<PauliLetter> parse_letter(char c) {
  switch (c) {
    case 'I':
      return PauliLetter::I;
    case 'X':
      return PauliLetter::X;
    case 'Y':
      return PauliLetter::Y;
    case 'Z':
      return PauliLetter::Z;
    default:
      return std::nullopt;
  }
}

char sign_char(Sign s) { return s == Sign::kPlus ? '+' : '-'; }

std::optional<Sign> parse_sign(char c) {
  if (c == '+') return Sign::kPlus;
  if (c == '-') return Sign::kMinus;
  return std::nullopt;
}

std::string to_string(SignedPauli p) { return {sign_char(p.sign), letter_char(p.letter)}; }

std::string to_string(PhasedPauli p) {
  std::string out;
  auto k = static_cast<uint8_t>(p.phase);
  out.push_back(k < 2 ? '+' : '-');
  if (k & 1u) out.push_back('i');
  out.push_back(letter_char(p.letter));
  return out;
}

std::optional<PhasedPauli> parse_phased_pauli(std::string_view text) {
  if (text.size() < 2 || text.size() > 3) return std::nullopt;
  auto sign = parse_sign(text.front());
  auto letter = parse_letter(text.back());
  if (!sign || !letter) return std::nullopt;
  Phase phase = to_phase(*sign);
  if (text.size() == 3) {
    if (text[1] != 'i') return std::nullopt;
    phase = phase * Phase::kPlusI;
  }
  return PhasedPauli{phase, *letter};
}

}  // namespace tlayer
