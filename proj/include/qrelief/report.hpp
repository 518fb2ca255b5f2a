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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qrelief {

/// Everything recorded about one iteration: the chosen sample, the score of
/// every other sample against it (quantum similarity, or squared distance
/// for the classical baseline), the near-hit/near-miss picks, and the weight
/// vector after the update.
struct IterationRecord {
    int t = 0;
    std::string u_id;
    std::vector<std::pair<std::string, double>> scores;  // dataset order
    std::string near_hit_id;
    std::string near_miss_id;
    std::vector<double> wt;
};

struct ResourceCounts {
    int qubits_used = 0;             // width of one swap-test circuit
    std::uint64_t gates_applied = 0; // gates simulated across the whole run
    std::uint64_t total_shots = 0;   // measurement shots consumed
};

/// Full trace of a feature selection run, sufficient to reproduce it:
/// configuration echo, per-iteration records, the mean weight vector, and
/// the indices of the selected features.
struct RunReport {
    std::string mode;    // exact | sampled | replay | classical
    std::string policy;  // round-robin | random
    std::uint64_t seed = 0;
    std::uint64_t shots = 0;
    double tau = 0.0;
    int iterations = 0;

    std::string dataset_path;  // set by the CLI when known
    std::string replay_path;

    std::vector<std::string> sample_ids;
    std::vector<std::string> feature_names;
    std::vector<std::string> class_labels;

    std::vector<IterationRecord> trace;
    std::vector<double> wt_mean;
    std::vector<std::size_t> selected;

    ResourceCounts resources;

    std::vector<std::string> selected_names() const {
        std::vector<std::string> names;
        for (std::size_t i : selected) {
            names.push_back(feature_names.at(i));
        }
        return names;
    }
};

}  // namespace qrelief
