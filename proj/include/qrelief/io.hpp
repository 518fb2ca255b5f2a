// Copyright 2026 The qrelief authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "qrelief/dataset.hpp"
#include "qrelief/replay.hpp"
#include "qrelief/report.hpp"

namespace qrelief::io {

// Datasets travel as CSV with header `id,class,<feature names...>`, one row
// per sample, and feature cells restricted to the literal tokens 0 and 1.
// Class labels map to the two classes by order of first appearance.
Dataset parse_dataset_csv(const std::string& text, const std::string& source_name);
Dataset load_dataset(const std::string& path);
std::string dataset_to_csv(const Dataset& dataset);
void save_dataset(const Dataset& dataset, const std::string& path);

// Replay tables travel as JSON: {"records": [{"iteration": t, "u": id,
// "other": id, "p1": x}, ...]}. An empty document is an empty table.
ReplayTable parse_replay_json(const std::string& text, const std::string& source_name);
ReplayTable load_replay(const std::string& path);
std::string replay_to_json(const ReplayTable& table);
void save_replay(const ReplayTable& table, const std::string& path);

// Run reports round-trip through JSON losslessly.
std::string report_to_json(const RunReport& report);
RunReport parse_report_json(const std::string& text, const std::string& source_name);
void save_report(const RunReport& report, const std::string& path);
RunReport load_report(const std::string& path);

}  // namespace qrelief::io
