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

#include "qrelief/quantum_relief.hpp"

#include <bit>
#include <cmath>
#include <limits>

#include "qrelief/encoding.hpp"
#include "qrelief/errors.hpp"
#include "qrelief/swap_test.hpp"

namespace qrelief {

namespace {

int width_for(std::size_t count) {
    return count <= 2 ? 1 : static_cast<int>(std::bit_width(count - 1));
}

std::vector<double> real_features(const Sample& s) {
    return std::vector<double>(s.features.begin(), s.features.end());
}

void check_config(const RunConfig& config) {
    if (config.iterations < 1) {
        throw ConfigError("run config: iterations must be at least 1");
    }
    if (config.mode == RunMode::Sampled && config.shots < 1) {
        throw ConfigError("run config: sampled mode needs shots >= 1");
    }
}

}  // namespace

std::string to_string(RunMode mode) {
    switch (mode) {
        case RunMode::Exact:
            return "exact";
        case RunMode::Sampled:
            return "sampled";
        case RunMode::Replay:
            return "replay";
    }
    return "unknown";
}

std::string to_string(PickPolicy policy) {
    return policy == PickPolicy::RoundRobin ? "round-robin" : "random";
}

SimilarityEstimate similarity_from_p1(double p1, std::size_t num_features,
                                      RunMode mode, std::uint64_t shots) {
    const double n2 = static_cast<double>(num_features * num_features);
    const double raw = (1.0 - 2.0 * p1) * n2;
    SimilarityEstimate estimate;
    estimate.p1 = p1;
    estimate.mode = mode;
    estimate.shots = shots;
    estimate.similarity = mode == RunMode::Exact ? raw : std::abs(raw);
    return estimate;
}

SimilarityEstimate pair_similarity(const Dataset& dataset, std::size_t u,
                                   std::size_t v, const RunConfig& config,
                                   sim::Rng& rng, const ReplayTable* replay,
                                   int iteration) {
    if (u == v) {
        throw ConfigError("pair_similarity: a sample cannot be compared to itself");
    }
    const std::size_t n = dataset.num_features();
    if (config.mode == RunMode::Replay) {
        if (replay == nullptr) {
            throw ConfigError("pair_similarity: replay mode needs a replay table");
        }
        const double p1 = replay->lookup(iteration, dataset.sample(u).id,
                                         dataset.sample(v).id);
        return similarity_from_p1(p1, n, RunMode::Replay);
    }

    const int sample_width = width_for(dataset.size());
    const int feature_width = width_for(n);
    const circuits::EncodedSample enc_u =
        circuits::encode_sample(real_features(dataset.sample(u)), u, sample_width,
                                feature_width);
    const circuits::EncodedSample enc_v =
        circuits::encode_sample(real_features(dataset.sample(v)), v, sample_width,
                                feature_width);
    const auto mode = config.mode == RunMode::Exact ? circuits::SwapTestMode::Exact
                                                    : circuits::SwapTestMode::Sampled;
    const circuits::SwapTestResult test =
        circuits::swap_test(circuits::swap_last_two(enc_u), enc_v.state, mode,
                            config.shots, rng);
    return similarity_from_p1(test.p1, n, config.mode, test.shots);
}

NearPair find_near(const Dataset& dataset, std::size_t u,
                   const std::vector<double>& scores) {
    if (scores.size() != dataset.size()) {
        throw ConfigError("find_near: need one score per sample");
    }
    const int u_class = dataset.sample(u).class_index;
    bool have_hit = false;
    bool have_miss = false;
    NearPair near;
    double best_hit = -std::numeric_limits<double>::infinity();
    double best_miss = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < dataset.size(); ++k) {
        if (k == u) {
            continue;
        }
        if (dataset.sample(k).class_index == u_class) {
            if (scores[k] > best_hit) {
                best_hit = scores[k];
                near.near_hit = k;
                have_hit = true;
            }
        } else if (scores[k] > best_miss) {
            best_miss = scores[k];
            near.near_miss = k;
            have_miss = true;
        }
    }
    if (!have_hit) {
        throw DegenerateDatasetError("find_near: the chosen sample's class has no other member");
    }
    if (!have_miss) {
        throw DegenerateDatasetError("find_near: the other class is empty");
    }
    return near;
}

RunReport run_quantum_relief(const Dataset& dataset, const RunConfig& config,
                             const ReplayTable* replay) {
    check_config(config);
    if (config.mode == RunMode::Replay && replay == nullptr) {
        throw ConfigError("run: replay mode needs a replay table");
    }

    const std::size_t m = dataset.size();
    const std::size_t n = dataset.num_features();
    const int sample_width = width_for(m);
    const int feature_width = width_for(n);

    RunReport report;
    report.mode = to_string(config.mode);
    report.policy = to_string(config.policy);
    report.seed = config.seed;
    report.shots = config.mode == RunMode::Sampled ? config.shots : 0;
    report.tau = config.tau;
    report.iterations = config.iterations;
    for (const Sample& s : dataset.samples()) {
        report.sample_ids.push_back(s.id);
    }
    report.feature_names = dataset.feature_names();
    report.class_labels = {dataset.class_labels()[0], dataset.class_labels()[1]};
    report.resources.qubits_used = 1 + 2 * (sample_width + feature_width + 2);

    // Separate streams so the random-policy pick sequence does not depend on
    // how many shot draws the mode consumes.
    sim::Rng pick_rng(config.seed);
    sim::Rng shot_rng(config.seed ^ 0x9e3779b97f4a7c15ull);

    // The encoded states are prepared once and reused by every swap test.
    std::vector<circuits::EncodedSample> encodings;
    if (config.mode != RunMode::Replay) {
        encodings.reserve(m);
        for (std::size_t j = 0; j < m; ++j) {
            encodings.push_back(circuits::encode_sample(
                real_features(dataset.sample(j)), j, sample_width, feature_width));
            report.resources.gates_applied += encodings.back().state.ops_applied();
        }
    }

    WeightVector weights(n);
    for (int t = 1; t <= config.iterations; ++t) {
        const std::size_t u = config.policy == PickPolicy::RoundRobin
                                  ? static_cast<std::size_t>((t - 1) % m)
                                  : pick_rng.below(m);

        IterationRecord record;
        record.t = t;
        record.u_id = dataset.sample(u).id;

        std::vector<double> scores(m, 0.0);
        for (std::size_t v = 0; v < m; ++v) {
            if (v == u) {
                continue;
            }
            SimilarityEstimate estimate;
            if (config.mode == RunMode::Replay) {
                estimate = similarity_from_p1(
                    replay->lookup(t, dataset.sample(u).id, dataset.sample(v).id),
                    n, RunMode::Replay);
            } else {
                const auto mode = config.mode == RunMode::Exact
                                      ? circuits::SwapTestMode::Exact
                                      : circuits::SwapTestMode::Sampled;
                const circuits::SwapTestResult test = circuits::swap_test(
                    circuits::swap_last_two(encodings[u]), encodings[v].state,
                    mode, config.shots, shot_rng);
                // swap_last_two adds one gate per call on a copy
                report.resources.gates_applied += test.gates + 1;
                report.resources.total_shots += test.shots;
                estimate = similarity_from_p1(test.p1, n, config.mode, test.shots);
            }
            scores[v] = estimate.similarity;
            record.scores.emplace_back(dataset.sample(v).id, estimate.similarity);
        }

        const NearPair near = find_near(dataset, u, scores);
        record.near_hit_id = dataset.sample(near.near_hit).id;
        record.near_miss_id = dataset.sample(near.near_miss).id;

        weights = update_weights(std::move(weights), dataset.sample(u),
                                 dataset.sample(near.near_hit),
                                 dataset.sample(near.near_miss));
        record.wt = weights.wt;
        report.trace.push_back(std::move(record));
    }

    const FeatureSelection selection =
        select_features(weights, config.iterations, config.tau);
    report.wt_mean = selection.wt_mean;
    report.selected = selection.selected;
    return report;
}

}  // namespace qrelief
