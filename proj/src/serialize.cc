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

#include "tlayer/serialize.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "tlayer/errors.h"

namespace tlayer {

using nlohmann::json;

std::string serialize(const Circuit& c) {
  std::string out;
  out.reserve(64 + c.columns.size() * (c.n_qubits + 40));
  out += "{\n  \"version\": " + std::to_string(kCircuitFormatVersion) + ",\n";
  out += "  \"n_qubits\": " + std::to_string(c.n_qubits) + ",\n";
  out += "  \"columns\": [";
  for (size_t i = 0; i < c.columns.size(); ++i) {
    const Column& col = c.columns[i];
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"phase\": \"";
    out.push_back(sign_char(col.phase));
    out += "\", \"letters\": \"";
    for (PauliLetter l : col.letters) out.push_back(letter_char(l));
    out += "\"}";
  }
  out += c.columns.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

json column_to_json(const Column& c) {
  std::string letters;
  for (PauliLetter l : c.letters) letters.push_back(letter_char(l));
  return json{{"phase", std::string(1, sign_char(c.phase))}, {"letters", letters}};
}

Column column_from_json(const json& j, size_t n_qubits, const std::string& field) {
  if (!j.is_object()) throw ParseError(field + ": expected an object");
  auto phase_it = j.find("phase");
  if (phase_it == j.end() || !phase_it->is_string()) throw ParseError(field + ".phase: missing or not a string");
  const auto& phase_text = phase_it->get_ref<const std::string&>();
  std::optional<Sign> sign = phase_text.size() == 1 ? parse_sign(phase_text[0]) : std::nullopt;
  if (!sign) throw ParseError(field + ".phase: expected \"+\" or \"-\", got \"" + phase_text + "\"");

  auto letters_it = j.find("letters");
  if (letters_it == j.end() || !letters_it->is_string()) {
    throw ParseError(field + ".letters: missing or not a string");
  }
  const auto& text = letters_it->get_ref<const std::string&>();
  if (text.size() != n_qubits) {
    throw ParseError(field + ".letters: length " + std::to_string(text.size()) + " != n_qubits " +
                     std::to_string(n_qubits));
  }
  Column c;
  c.phase = *sign;
  c.letters.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    auto l = parse_letter(text[i]);
    if (!l) {
      throw ParseError(field + ".letters: unknown letter '" + std::string(1, text[i]) + "' at position " +
                       std::to_string(i));
    }
    c.letters.push_back(*l);
  }
  return c;
}

Circuit deserialize(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) throw ParseError("document: expected a JSON object");

  auto version = doc.find("version");
  if (version == doc.end() || !version->is_number_integer() || version->get<int>() != kCircuitFormatVersion) {
    throw ParseError("version: expected " + std::to_string(kCircuitFormatVersion));
  }
  auto nq = doc.find("n_qubits");
  if (nq == doc.end() || !nq->is_number_unsigned() || nq->get<size_t>() == 0) {
    throw ParseError("n_qubits: expected a positive integer");
  }
  auto cols = doc.find("columns");
  if (cols == doc.end() || !cols->is_array()) throw ParseError("columns: expected an array");

  Circuit c;
  c.n_qubits = nq->get<size_t>();
  c.columns.reserve(cols->size());
  for (size_t i = 0; i < cols->size(); ++i) {
    c.columns.push_back(column_from_json((*cols)[i], c.n_qubits, "columns[" + std::to_string(i) + "]"));
  }
  return c;
}

json merge_log_to_json(const MergeLog& log) {
  json out = json::array();
  for (const MergeLogEntry& e : log) {
    out.push_back(json{{"left", e.left}, {"right", e.right}, {"result", column_to_json(e.result)}});
  }
  return out;
}

MergeLog merge_log_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("merge log: expected a JSON array");
  MergeLog log;
  log.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    std::string field = "[" + std::to_string(i) + "]";
    const json& e = j[i];
    if (!e.is_object()) throw ParseError(field + ": expected an object");
    for (const char* key : {"left", "right"}) {
      if (!e.contains(key) || !e[key].is_number_unsigned()) {
        throw ParseError(field + "." + key + ": expected a non-negative integer");
      }
    }
    if (!e.contains("result")) throw ParseError(field + ".result: missing");
    const json& r = e["result"];
    size_t width = r.is_object() && r.contains("letters") && r["letters"].is_string()
                       ? r["letters"].get_ref<const std::string&>().size()
                       : 0;
    log.push_back({e["left"].get<size_t>(), e["right"].get<size_t>(), column_from_json(r, width, field + ".result")});
  }
  return log;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

Circuit load_circuit(const std::filesystem::path& path) {
  try {
    return deserialize(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void save_circuit(const std::filesystem::path& path, const Circuit& c) { write_file(path, serialize(c)); }

uint64_t fnv1a64(std::string_view data, uint64_t state) {
  for (unsigned char ch : data) {
    state ^= ch;
    state *= 0x100000001b3ull;
  }
  return state;
}

std::string hex64(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace tlayer
