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

#include "qrelief/dataset.hpp"

#include <unordered_set>

#include "qrelief/errors.hpp"

namespace qrelief {

Dataset::Dataset(std::vector<Sample> samples, std::vector<std::string> feature_names,
                 std::array<std::string, 2> class_labels)
    : samples_(std::move(samples)),
      feature_names_(std::move(feature_names)),
      class_labels_(std::move(class_labels)) {
    if (feature_names_.empty()) {
        throw ValidationError("dataset needs at least one feature");
    }
    if (class_labels_[0] == class_labels_[1]) {
        throw ValidationError("class labels must be distinct");
    }
    std::unordered_set<std::string> seen_ids;
    bool present[2] = {false, false};
    for (const Sample& s : samples_) {
        if (s.features.size() != feature_names_.size()) {
            throw ValidationError("sample '" + s.id + "' has wrong feature count");
        }
        for (std::uint8_t f : s.features) {
            if (f > 1) {
                throw ValidationError("sample '" + s.id + "' has a non-binary feature");
            }
        }
        if (s.class_index != 0 && s.class_index != 1) {
            throw ValidationError("sample '" + s.id + "' has an invalid class index");
        }
        if (!seen_ids.insert(s.id).second) {
            throw ValidationError("duplicate sample id '" + s.id + "'");
        }
        present[s.class_index] = true;
    }
    if (!present[0] || !present[1]) {
        throw DegenerateDatasetError("dataset must contain samples of both classes");
    }
}

std::vector<std::size_t> Dataset::members_of(int class_index) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        if (samples_[i].class_index == class_index) {
            out.push_back(i);
        }
    }
    return out;
}

Dataset Dataset::with_swapped_classes() const {
    std::vector<Sample> flipped = samples_;
    for (Sample& s : flipped) {
        s.class_index = 1 - s.class_index;
    }
    return Dataset(std::move(flipped), feature_names_,
                   {class_labels_[1], class_labels_[0]});
}

int diff(std::size_t i, const Sample& u, const Sample& v) {
    return u.features.at(i) == v.features.at(i) ? 0 : 1;
}

int squared_distance(const Sample& u, const Sample& v) {
    int total = 0;
    for (std::size_t i = 0; i < u.features.size(); ++i) {
        const int d = diff(i, u, v);
        total += d * d;
    }
    return total;
}

int dot_product(const Sample& u, const Sample& v) {
    int total = 0;
    for (std::size_t i = 0; i < u.features.size(); ++i) {
        total += static_cast<int>(u.features[i]) * static_cast<int>(v.features[i]);
    }
    return total;
}

}  // namespace qrelief
