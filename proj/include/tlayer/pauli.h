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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace tlayer {

// Single-qubit Pauli letter. The numeric values are part of the circuit
// encoding and must not change.
enum class PauliLetter : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

// A unit phase i^k, stored as k in [0, 4).
enum class Phase : uint8_t { kPlusOne = 0, kPlusI = 1, kMinusOne = 2, kMinusI = 3 };

// The real subset of Phase. Stored circuit cells only ever carry a Sign.
enum class Sign : uint8_t { kPlus = 0, kMinus = 1 };

constexpr Phase to_phase(Sign s) { return s == Sign::kPlus ? Phase::kPlusOne : Phase::kMinusOne; }

constexpr Phase operator*(Phase a, Phase b) {
  return static_cast<Phase>((static_cast<uint8_t>(a) + static_cast<uint8_t>(b)) & 3u);
}

constexpr Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<uint8_t>(a) ^ static_cast<uint8_t>(b));
}

constexpr bool is_real(Phase p) { return (static_cast<uint8_t>(p) & 1u) == 0; }

// Returns the sign of a real phase, or nullopt for +-i.
constexpr std::optional<Sign> real_sign(Phase p) {
  if (!is_real(p)) return std::nullopt;
  return p == Phase::kPlusOne ? Sign::kPlus : Sign::kMinus;
}

// A storable signed Pauli, +P or -P.
struct SignedPauli {
  Sign sign = Sign::kPlus;
  PauliLetter letter = PauliLetter::I;

  friend constexpr bool operator==(SignedPauli, SignedPauli) = default;
};

// A product result; the phase may be imaginary.
struct PhasedPauli {
  Phase phase = Phase::kPlusOne;
  PauliLetter letter = PauliLetter::I;

  friend constexpr bool operator==(PhasedPauli, PhasedPauli) = default;
};

// Letter part of a*b. Independent of signs.
constexpr PauliLetter letter_product(PauliLetter a, PauliLetter b) {
  if (a == PauliLetter::I) return b;
  if (b == PauliLetter::I) return a;
  if (a == b) return PauliLetter::I;
  // The remaining letter of {X, Y, Z}: 1 + 2 + 3 = 6.
  return static_cast<PauliLetter>(6 - static_cast<int>(a) - static_cast<int>(b));
}

constexpr bool letters_commute(PauliLetter a, PauliLetter b) {
  return a == b || a == PauliLetter::I || b == PauliLetter::I;
}

// Matrix product a*b. XY = iZ, YZ = iX, ZX = iY; reversed order picks up -i.
constexpr PhasedPauli multiply(SignedPauli a, SignedPauli b) {
  Phase phase = to_phase(a.sign * b.sign);
  if (!letters_commute(a.letter, b.letter)) {
    int ia = static_cast<int>(a.letter);
    int ib = static_cast<int>(b.letter);
    bool cyclic = ib == ia % 3 + 1;
    phase = phase * (cyclic ? Phase::kPlusI : Phase::kMinusI);
  }
  return {phase, letter_product(a.letter, b.letter)};
}

constexpr PhasedPauli multiply(PhasedPauli a, PhasedPauli b) {
  PhasedPauli r = multiply(SignedPauli{Sign::kPlus, a.letter}, SignedPauli{Sign::kPlus, b.letter});
  r.phase = r.phase * a.phase * b.phase;
  return r;
}

constexpr PhasedPauli to_phased(SignedPauli p) { return {to_phase(p.sign), p.letter}; }

char letter_char(PauliLetter l);
std::optional<PauliLetter> parse_letter(char c);

char sign_char(Sign s);
std::optional<Sign> parse_sign(char c);

// "+X", "-Z".
std::string to_string(SignedPauli p);
// "+X", "-Z", "+iY", "-iX".
std::string to_string(PhasedPauli p);
// Inverse of to_string for either form; nullopt on malformed text.
std::optional<PhasedPauli> parse_phased_pauli(std::string_view text);

}  // namespace tlayer
