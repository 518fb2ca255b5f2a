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

#include "qrelief/feature_weights.hpp"

#include "qrelief/errors.hpp"

namespace qrelief {

WeightVector update_weights(WeightVector weights, const Sample& u,
                            const Sample& near_hit, const Sample& near_miss) {
    if (u.features.size() != weights.wt.size() ||
        near_hit.features.size() != weights.wt.size() ||
        near_miss.features.size() != weights.wt.size()) {
        throw ConfigError("update_weights: feature counts do not match");
    }
    for (std::size_t i = 0; i < weights.wt.size(); ++i) {
        const int hit = diff(i, u, near_hit);
        const int miss = diff(i, u, near_miss);
        weights.wt[i] += static_cast<double>(miss * miss - hit * hit);
    }
    ++weights.iterations_applied;
    return weights;
}

FeatureSelection select_features(const WeightVector& weights, int iterations,
                                 double tau) {
    if (iterations < 1) {
        throw ConfigError("select_features: iteration count must be positive");
    }
    FeatureSelection out;
    out.wt_mean.reserve(weights.wt.size());
    for (std::size_t i = 0; i < weights.wt.size(); ++i) {
        const double mean = weights.wt[i] / static_cast<double>(iterations);
        out.wt_mean.push_back(mean);
        if (mean >= tau) {
            out.selected.push_back(i);
        }
    }
    return out;
}

}  // namespace qrelief
