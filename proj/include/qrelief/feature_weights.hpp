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

#include <cstddef>
#include <vector>

#include "qrelief/dataset.hpp"

namespace qrelief {

/// Per-feature relevance accumulator. Each update moves a component by -1,
/// 0, or +1, so after t iterations every |wt[i]| <= t.
struct WeightVector {
    std::vector<double> wt;
    int iterations_applied = 0;

    explicit WeightVector(std::size_t num_features)
        : wt(num_features, 0.0) {}
};

/// One relevance update: wt[i] -= diff(i,u,near_hit)^2, += diff(i,u,near_miss)^2.
WeightVector update_weights(WeightVector weights, const Sample& u,
                            const Sample& near_hit, const Sample& near_miss);

struct FeatureSelection {
    std::vector<double> wt_mean;
    std::vector<std::size_t> selected;  // indices with wt_mean >= tau
};

/// Averages the accumulated weights over T iterations and keeps every
/// feature whose mean weight reaches the threshold (boundary inclusive).
FeatureSelection select_features(const WeightVector& weights, int iterations,
                                 double tau);

}  // namespace qrelief
