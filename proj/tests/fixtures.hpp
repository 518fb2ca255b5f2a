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

// The bundled four-sample example, constructed in memory: samples S0..S3
// over features F0..F3, classes A = {S0, S1} and B = {S2, S3}, plus the
// recorded hardware ancilla probabilities that ship in
// data/paper_table2.json.

#pragma once

#include <string>
#include <vector>

#include "qrelief/dataset.hpp"
#include "qrelief/replay.hpp"

namespace fixtures {

inline qrelief::Dataset four_sample_dataset() {
    std::vector<qrelief::Sample> samples{
        {"S0", {1, 0, 1, 0}, 0},
        {"S1", {1, 0, 0, 0}, 0},
        {"S2", {0, 1, 1, 0}, 1},
        {"S3", {0, 1, 0, 0}, 1},
    };
    return qrelief::Dataset(std::move(samples), {"F0", "F1", "F2", "F3"},
                            {"A", "B"});
}

struct RecordedProbability {
    int iteration;
    const char* u;
    const char* other;
    double p1;
};

inline const std::vector<RecordedProbability>& recorded_probabilities() {
    static const std::vector<RecordedProbability> table{
        {1, "S0", "S1", 0.49023438}, {1, "S0", "S2", 0.49902344},
        {1, "S0", "S3", 0.49121094}, {2, "S1", "S0", 0.50097656},
        {2, "S1", "S2", 0.52246094}, {2, "S1", "S3", 0.53417969},
        {3, "S2", "S0", 0.50683594}, {3, "S2", "S1", 0.50878906},
        {3, "S2", "S3", 0.49218750}, {4, "S3", "S0", 0.49804688},
        {4, "S3", "S1", 0.49218750}, {4, "S3", "S2", 0.50195312},
    };
    return table;
}

inline qrelief::ReplayTable recorded_replay_table() {
    qrelief::ReplayTable table;
    for (const RecordedProbability& rec : recorded_probabilities()) {
        table.insert(rec.iteration, rec.u, rec.other, rec.p1);
    }
    return table;
}

}  // namespace fixtures
