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
#include <vector>

#include "qrelief/dataset.hpp"
#include "qrelief/feature_weights.hpp"
#include "qrelief/replay.hpp"
#include "qrelief/report.hpp"
#include "qrelief/rng.hpp"

namespace qrelief {

enum class RunMode { Exact, Sampled, Replay };
enum class PickPolicy { RoundRobin, Random };

std::string to_string(RunMode mode);
std::string to_string(PickPolicy policy);

struct RunConfig {
    int iterations = 1;         // T
    double tau = 0.5;
    RunMode mode = RunMode::Exact;
    std::uint64_t shots = 8192; // used in sampled mode
    std::uint64_t seed = 0;
    PickPolicy policy = PickPolicy::RoundRobin;
};

/// Estimated squared overlap of two encoded samples, together with the raw
/// ancilla probability it came from.
///
/// Exact mode reports (1 - 2*p1) * N^2, which the simulation keeps within
/// 1e-9 of a true (nonnegative) squared overlap. Estimated p1 values can
/// exceed 1/2, so sampled and replay modes report |1 - 2*p1| * N^2.
struct SimilarityEstimate {
    double p1 = 0.0;
    double similarity = 0.0;
    RunMode mode = RunMode::Exact;
    std::uint64_t shots = 0;
};

SimilarityEstimate similarity_from_p1(double p1, std::size_t num_features,
                                      RunMode mode, std::uint64_t shots = 0);

/// Runs the full pipeline (encode both samples, swap the value qubit of u's
/// state next to its feature index, swap test) for one pair. Replay mode
/// reads p1 from the table instead, keyed by (iteration, u, v).
SimilarityEstimate pair_similarity(const Dataset& dataset, std::size_t u,
                                   std::size_t v, const RunConfig& config,
                                   sim::Rng& rng, const ReplayTable* replay,
                                   int iteration);

struct NearPair {
    std::size_t near_hit = 0;
    std::size_t near_miss = 0;
};

/// Picks the most similar same-class sample (excluding u) and the most
/// similar other-class sample. scores[u] is ignored. Ties go to the
/// smallest dataset position.
NearPair find_near(const Dataset& dataset, std::size_t u,
                   const std::vector<double>& scores);

/// Executes the quantum Relief loop: per iteration, estimate u's similarity
/// to every other sample, update the weight vector from the near-hit and
/// near-miss, then threshold the mean weights.
RunReport run_quantum_relief(const Dataset& dataset, const RunConfig& config,
                             const ReplayTable* replay = nullptr);

}  // namespace qrelief
