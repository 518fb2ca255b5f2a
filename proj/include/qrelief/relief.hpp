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
#include <vector>

#include "qrelief/dataset.hpp"
#include "qrelief/quantum_relief.hpp"
#include "qrelief/report.hpp"

namespace qrelief {

/// Dataset position of the pool sample closest to u by squared Euclidean
/// distance (ties to the smallest position). Distances stay in integer
/// arithmetic: for binary features the squared distance is the Hamming
/// distance.
std::size_t nearest(const Dataset& dataset, std::size_t u,
                    const std::vector<std::size_t>& pool);

/// Classical Relief baseline: same loop shape, tie-breaks, and report
/// format as the quantum run, but near-hit/near-miss are chosen by minimal
/// Euclidean distance instead of maximal quantum similarity. The recorded
/// per-iteration scores are the squared distances.
RunReport run_classical_relief(const Dataset& dataset, int iterations, double tau,
                               PickPolicy policy, std::uint64_t seed);

}  // namespace qrelief
