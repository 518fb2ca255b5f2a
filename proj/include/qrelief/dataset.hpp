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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace qrelief {

/// One labeled sample with binary features. class_index selects one of the
/// dataset's two classes.
struct Sample {
    std::string id;
    std::vector<std::uint8_t> features;
    int class_index = 0;
};

/// A two-class collection of equally sized binary feature vectors.
class Dataset {
  public:
    Dataset(std::vector<Sample> samples, std::vector<std::string> feature_names,
            std::array<std::string, 2> class_labels);

    std::size_t size() const { return samples_.size(); }
    std::size_t num_features() const { return feature_names_.size(); }
    const Sample& sample(std::size_t index) const { return samples_.at(index); }
    const std::vector<Sample>& samples() const { return samples_; }
    const std::vector<std::string>& feature_names() const { return feature_names_; }
    const std::array<std::string, 2>& class_labels() const { return class_labels_; }

    /// Dataset positions of every sample in the given class, in order.
    std::vector<std::size_t> members_of(int class_index) const;

    /// Same samples with the two class labels (and indices) exchanged.
    Dataset with_swapped_classes() const;

  private:
    std::vector<Sample> samples_;
    std::vector<std::string> feature_names_;
    std::array<std::string, 2> class_labels_;
};

/// 0 when u and v agree on feature i, 1 otherwise.
int diff(std::size_t i, const Sample& u, const Sample& v);

/// Squared Euclidean distance; for binary features this is the Hamming
/// distance and equals sum_i diff(i,u,v)^2.
int squared_distance(const Sample& u, const Sample& v);

/// Integer dot product of two binary feature vectors.
int dot_product(const Sample& u, const Sample& v);

}  // namespace qrelief
