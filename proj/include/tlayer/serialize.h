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

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "tlayer/circuit.h"

namespace tlayer {

// Circuit documents (.tcir.json):
//
//   {
//     "version": 1,
//     "n_qubits": 3,
//     "columns": [
//       {"phase": "+", "letters": "XIZ"},
//       {"phase": "-", "letters": "IYI"}
//     ]
//   }
//
// serialize() emits exactly this layout (one column per line) so that files
// diff cleanly and hash stably.
inline constexpr int kCircuitFormatVersion = 1;
inline constexpr std::string_view kCircuitExtension = ".tcir.json";

std::string serialize(const Circuit& c);
// Throws ParseError naming the offending line or field.
Circuit deserialize(std::string_view text);

nlohmann::json column_to_json(const Column& c);
Column column_from_json(const nlohmann::json& j, size_t n_qubits, const std::string& field);

// Merge logs are JSON lists of {"left": i, "right": j, "result": {"phase", "letters"}}.
nlohmann::json merge_log_to_json(const MergeLog& log);
MergeLog merge_log_from_json(const nlohmann::json& j);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

Circuit load_circuit(const std::filesystem::path& path);
void save_circuit(const std::filesystem::path& path, const Circuit& c);

// FNV-1a 64-bit, used for dataset digests.
uint64_t fnv1a64(std::string_view data, uint64_t state = 0xcbf29ce484222325ull);
std::string hex64(uint64_t v);

}  // namespace tlayer
