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

#include "qrelief/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "qrelief/errors.hpp"

namespace qrelief::io {

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot write '" + path + "'");
    }
    out << content;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cell);
            cell.clear();
        } else if (c != '\r') {
            cell.push_back(c);
        }
    }
    cells.push_back(cell);
    return cells;
}

bool blank(const std::string& text) {
    for (char c : text) {
        if (c != ' ' && c != '\t' && c != '\r' && c != '\n') {
            return false;
        }
    }
    return true;
}

}  // namespace

Dataset parse_dataset_csv(const std::string& text, const std::string& source_name) {
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;

    if (!std::getline(stream, line)) {
        throw ParseError(source_name + ": empty file");
    }
    ++line_no;
    const std::vector<std::string> header = split_csv_line(line);
    if (header.size() < 3 || header[0] != "id" || header[1] != "class") {
        throw ParseError(source_name +
                         ":1: header must be 'id,class,<feature names...>'");
    }
    const std::vector<std::string> feature_names(header.begin() + 2, header.end());

    std::vector<Sample> samples;
    std::vector<std::string> labels_seen;
    while (std::getline(stream, line)) {
        ++line_no;
        if (blank(line)) {
            continue;
        }
        const std::vector<std::string> cells = split_csv_line(line);
        const std::string where = source_name + ":" + std::to_string(line_no);
        if (cells.size() != header.size()) {
            throw ParseError(where + ": expected " + std::to_string(header.size()) +
                             " cells, got " + std::to_string(cells.size()));
        }
        Sample s;
        s.id = cells[0];
        if (s.id.empty()) {
            throw ParseError(where + ": column id: empty sample id");
        }

        const std::string& label = cells[1];
        int class_index = -1;
        for (std::size_t k = 0; k < labels_seen.size(); ++k) {
            if (labels_seen[k] == label) {
                class_index = static_cast<int>(k);
            }
        }
        if (class_index < 0) {
            if (labels_seen.size() == 2) {
                throw ParseError(where + ": column class: third class label '" +
                                 label + "'");
            }
            labels_seen.push_back(label);
            class_index = static_cast<int>(labels_seen.size()) - 1;
        }
        s.class_index = class_index;

        for (std::size_t f = 0; f < feature_names.size(); ++f) {
            const std::string& cell = cells[2 + f];
            if (cell != "0" && cell != "1") {
                throw ParseError(where + ": column " + feature_names[f] +
                                 ": invalid feature value '" + cell +
                                 "' (expected 0 or 1)");
            }
            s.features.push_back(cell == "1" ? 1 : 0);
        }
        samples.push_back(std::move(s));
    }

    if (labels_seen.size() < 2) {
        throw DegenerateDatasetError(source_name + ": needs two classes, found " +
                                     std::to_string(labels_seen.size()));
    }
    try {
        return Dataset(std::move(samples), feature_names,
                       {labels_seen[0], labels_seen[1]});
    } catch (const ValidationError& e) {
        throw ParseError(source_name + ": " + e.what());
    }
}

Dataset load_dataset(const std::string& path) {
    return parse_dataset_csv(read_file(path), path);
}

std::string dataset_to_csv(const Dataset& dataset) {
    std::ostringstream out;
    out << "id,class";
    for (const std::string& name : dataset.feature_names()) {
        out << ',' << name;
    }
    out << '\n';
    for (const Sample& s : dataset.samples()) {
        out << s.id << ',' << dataset.class_labels()[s.class_index];
        for (std::uint8_t f : s.features) {
            out << ',' << static_cast<int>(f);
        }
        out << '\n';
    }
    return out.str();
}

void save_dataset(const Dataset& dataset, const std::string& path) {
    write_file(path, dataset_to_csv(dataset));
}

ReplayTable parse_replay_json(const std::string& text, const std::string& source_name) {
    ReplayTable table;
    if (blank(text)) {
        return table;  // an empty document is a valid, empty table
    }
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw ParseError(source_name + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("records") || !doc["records"].is_array()) {
        throw ParseError(source_name + ": expected an object with a 'records' array");
    }
    std::size_t index = 0;
    for (const ordered_json& rec : doc["records"]) {
        const std::string where =
            source_name + ": record " + std::to_string(index++);
        if (!rec.is_object() || !rec.contains("iteration") || !rec.contains("u") ||
            !rec.contains("other") || !rec.contains("p1")) {
            throw ParseError(where + ": needs iteration, u, other, p1");
        }
        try {
            table.insert(rec["iteration"].get<int>(),
                         rec["u"].get<std::string>(),
                         rec["other"].get<std::string>(),
                         rec["p1"].get<double>());
        } catch (const ordered_json::exception& e) {
            throw ParseError(where + ": " + e.what());
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    return table;
}

ReplayTable load_replay(const std::string& path) {
    return parse_replay_json(read_file(path), path);
}

std::string replay_to_json(const ReplayTable& table) {
    ordered_json records = ordered_json::array();
    for (const auto& [key, p1] : table.records()) {
        records.push_back({{"iteration", std::get<0>(key)},
                           {"u", std::get<1>(key)},
                           {"other", std::get<2>(key)},
                           {"p1", p1}});
    }
    return ordered_json{{"records", records}}.dump(2) + "\n";
}

void save_replay(const ReplayTable& table, const std::string& path) {
    write_file(path, replay_to_json(table));
}

std::string report_to_json(const RunReport& report) {
    ordered_json doc;
    doc["config"] = {{"mode", report.mode},
                     {"policy", report.policy},
                     {"iterations", report.iterations},
                     {"tau", report.tau},
                     {"shots", report.shots},
                     {"seed", report.seed},
                     {"dataset", report.dataset_path},
                     {"replay", report.replay_path}};
    doc["dataset"] = {{"samples", report.sample_ids},
                      {"features", report.feature_names},
                      {"classes", report.class_labels}};
    ordered_json trace = ordered_json::array();
    for (const IterationRecord& rec : report.trace) {
        ordered_json scores = ordered_json::array();
        for (const auto& [id, value] : rec.scores) {
            scores.push_back({{"id", id}, {"score", value}});
        }
        trace.push_back({{"t", rec.t},
                         {"u", rec.u_id},
                         {"scores", scores},
                         {"near_hit", rec.near_hit_id},
                         {"near_miss", rec.near_miss_id},
                         {"wt", rec.wt}});
    }
    doc["iterations"] = trace;
    doc["wt_mean"] = report.wt_mean;
    doc["selected"] = report.selected;
    doc["selected_names"] = report.selected_names();
    doc["resources"] = {{"qubits_used", report.resources.qubits_used},
                        {"gates_applied", report.resources.gates_applied},
                        {"total_shots", report.resources.total_shots}};
    return doc.dump(2) + "\n";
}

RunReport parse_report_json(const std::string& text, const std::string& source_name) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw ParseError(source_name + ": " + e.what());
    }
    try {
        RunReport report;
        const ordered_json& config = doc.at("config");
        report.mode = config.at("mode").get<std::string>();
        report.policy = config.at("policy").get<std::string>();
        report.iterations = config.at("iterations").get<int>();
        report.tau = config.at("tau").get<double>();
        report.shots = config.at("shots").get<std::uint64_t>();
        report.seed = config.at("seed").get<std::uint64_t>();
        report.dataset_path = config.at("dataset").get<std::string>();
        report.replay_path = config.at("replay").get<std::string>();

        const ordered_json& dataset = doc.at("dataset");
        report.sample_ids = dataset.at("samples").get<std::vector<std::string>>();
        report.feature_names = dataset.at("features").get<std::vector<std::string>>();
        report.class_labels = dataset.at("classes").get<std::vector<std::string>>();

        for (const ordered_json& rec : doc.at("iterations")) {
            IterationRecord record;
            record.t = rec.at("t").get<int>();
            record.u_id = rec.at("u").get<std::string>();
            for (const ordered_json& s : rec.at("scores")) {
                record.scores.emplace_back(s.at("id").get<std::string>(),
                                           s.at("score").get<double>());
            }
            record.near_hit_id = rec.at("near_hit").get<std::string>();
            record.near_miss_id = rec.at("near_miss").get<std::string>();
            record.wt = rec.at("wt").get<std::vector<double>>();
            report.trace.push_back(std::move(record));
        }
        report.wt_mean = doc.at("wt_mean").get<std::vector<double>>();
        report.selected = doc.at("selected").get<std::vector<std::size_t>>();
        const ordered_json& res = doc.at("resources");
        report.resources.qubits_used = res.at("qubits_used").get<int>();
        report.resources.gates_applied = res.at("gates_applied").get<std::uint64_t>();
        report.resources.total_shots = res.at("total_shots").get<std::uint64_t>();
        return report;
    } catch (const ordered_json::exception& e) {
        throw ParseError(source_name + ": " + e.what());
    }
}

void save_report(const RunReport& report, const std::string& path) {
    write_file(path, report_to_json(report));
}

RunReport load_report(const std::string& path) {
    return parse_report_json(read_file(path), path);
}

}  // namespace qrelief::io
