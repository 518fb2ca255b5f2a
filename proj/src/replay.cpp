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

#include "qrelief/replay.hpp"

#include <cmath>

#include "qrelief/errors.hpp"

namespace qrelief {

void ReplayTable::insert(int iteration, const std::string& u_id,
                         const std::string& other_id, double p1) {
    if (!std::isfinite(p1) || p1 < 0.0 || p1 > 1.0) {
        throw ParseError("replay record (" + std::to_string(iteration) + ", " +
                         u_id + ", " + other_id + ") has p1 outside [0, 1]");
    }
    const auto [it, inserted] =
        records_.emplace(Key{iteration, u_id, other_id}, p1);
    (void)it;
    if (!inserted) {
        throw ParseError("duplicate replay record (" + std::to_string(iteration) +
                         ", " + u_id + ", " + other_id + ")");
    }
}

double ReplayTable::lookup(int iteration, const std::string& u_id,
                           const std::string& other_id) const {
    const auto it = records_.find(Key{iteration, u_id, other_id});
    if (it == records_.end()) {
        throw ReplayIncompleteError("replay table has no record for (" +
                                    std::to_string(iteration) + ", " + u_id +
                                    ", " + other_id + ")");
    }
    return it->second;
}

}  // namespace qrelief
