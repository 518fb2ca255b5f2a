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

#include "qrelief/relief.hpp"

#include "qrelief/errors.hpp"
#include "qrelief/feature_weights.hpp"
#include "qrelief/rng.hpp"

namespace qrelief {

std::size_t nearest(const Dataset& dataset, std::size_t u,
                    const std::vector<std::size_t>& pool) {
    if (pool.empty()) {
        throw DegenerateDatasetError("nearest: candidate pool is empty");
    }
    bool found = false;
    std::size_t best = 0;
    int best_distance = 0;
    for (std::size_t k : pool) {
        if (k == u) {
            continue;
        }
        const int d = squared_distance(dataset.sample(u), dataset.sample(k));
        if (!found || d < best_distance) {
            found = true;
            best = k;
            best_distance = d;
        }
    }
    if (!found) {
        throw DegenerateDatasetError("nearest: candidate pool is empty");
    }
    return best;
}

RunReport run_classical_relief(const Dataset& dataset, int iterations, double tau,
                               PickPolicy policy, std::uint64_t seed) {
    if (iterations < 1) {
        throw ConfigError("relief: iterations must be at least 1");
    }
    const std::size_t m = dataset.size();

    RunReport report;
    report.mode = "classical";
    report.policy = to_string(policy);
    report.seed = seed;
    report.shots = 0;
    report.tau = tau;
    report.iterations = iterations;
    for (const Sample& s : dataset.samples()) {
        report.sample_ids.push_back(s.id);
    }
    report.feature_names = dataset.feature_names();
    report.class_labels = {dataset.class_labels()[0], dataset.class_labels()[1]};

    sim::Rng rng(seed);
    WeightVector weights(dataset.num_features());
    for (int t = 1; t <= iterations; ++t) {
        const std::size_t u = policy == PickPolicy::RoundRobin
                                  ? static_cast<std::size_t>((t - 1) % m)
                                  : rng.below(m);
        const int u_class = dataset.sample(u).class_index;
        const std::size_t hit = nearest(dataset, u, dataset.members_of(u_class));
        const std::size_t miss = nearest(dataset, u, dataset.members_of(1 - u_class));

        IterationRecord record;
        record.t = t;
        record.u_id = dataset.sample(u).id;
        for (std::size_t v = 0; v < m; ++v) {
            if (v != u) {
                record.scores.emplace_back(
                    dataset.sample(v).id,
                    static_cast<double>(squared_distance(dataset.sample(u),
                                                         dataset.sample(v))));
            }
        }
        record.near_hit_id = dataset.sample(hit).id;
        record.near_miss_id = dataset.sample(miss).id;

        weights = update_weights(std::move(weights), dataset.sample(u),
                                 dataset.sample(hit), dataset.sample(miss));
        record.wt = weights.wt;
        report.trace.push_back(std::move(record));
    }

    const FeatureSelection selection = select_features(weights, iterations, tau);
    report.wt_mean = selection.wt_mean;
    report.selected = selection.selected;
    return report;
}

}  // namespace qrelief
