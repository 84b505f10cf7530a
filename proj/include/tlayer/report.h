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
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tlayer/benchmark.h"

namespace tlayer {

// All reports are pure functions of their inputs: fixed column order, fixed
// decimal precision (kReportDecimals), no timestamps. Timings are kept out of
// records.jsonl and written to timings.csv instead.
inline constexpr int kReportDecimals = 3;

std::string format_fixed(double v, int decimals = kReportDecimals);

// records.jsonl: one JSON object per line, ordered by circuit id.
nlohmann::json record_to_json(const ExperimentRecord& r);
ExperimentRecord record_from_json(const nlohmann::json& j);
std::string records_to_jsonl(std::span<const ExperimentRecord> records);
std::vector<ExperimentRecord> records_from_jsonl(std::string_view text);

std::string timings_csv(std::span<const ExperimentRecord> records);

std::string best_algorithm_csv(const BestAlgorithmTable& t);
nlohmann::json best_algorithm_json(const BestAlgorithmTable& t);

std::string class_breakdown_csv(std::span<const ClassBreakdownRow> rows);
nlohmann::json class_breakdown_json(std::span<const ClassBreakdownRow> rows);

// sweep.csv: one row per (k, factor, class) with attempts, plus an "ALL" row
// per (k, factor).
std::string sweep_csv(const SweepResult& s);
nlohmann::json sweep_json(const SweepResult& s);

// table4.csv: one row per k.
std::string partition_table_csv(const SweepResult& s);
nlohmann::json partition_table_json(const SweepResult& s);

std::string sweep_observations_csv(std::span<const SweepObservation> obs);

// Policies and rounding that the tables rely on, for report_meta.json.
nlohmann::json report_metadata(const BestAlgorithmTable& t);

// Dataset directories: one <name>.tcir.json per circuit plus manifest.json
// holding params, labels, tertile cuts and the digest.
std::string circuit_file_name(const DatasetEntry& e);
nlohmann::json dataset_manifest(const Dataset& d);
void write_dataset(const std::filesystem::path& dir, const Dataset& d);
// Throws ParseError if a circuit is malformed or the digest does not match.
Dataset load_dataset(const std::filesystem::path& dir);
// Manifest-only view (no circuit files read).
DatasetStats stats_from_manifest(const nlohmann::json& manifest);

}  // namespace tlayer
