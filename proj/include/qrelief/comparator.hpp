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

#include "qrelief/gate.hpp"
#include "qrelief/state.hpp"

namespace qrelief::circuits {

/// Reversible threshold comparator over an n-qubit index register.
///
/// Acting on a basis input |i>|0...0>|0> (index, stage ancillas, result) it
/// produces |i>|0...0>|r> with r = 1 iff i >= threshold; the ancillas are
/// uncomputed. The threshold is compiled classically into the control
/// polarities of the gates: stage k fires when the index agrees with
/// threshold-1 on every bit above k and exceeds it at bit k. At most one
/// stage fires for any input, so copying the stage flags onto the result
/// qubit with CNOTs computes their OR.
struct ComparatorCircuit {
    int index_width = 0;         // n
    std::uint64_t threshold = 0; // N, 1 <= N <= 2^n
    int num_ancillas = 0;        // one per deciding stage
    std::vector<sim::Gate> gates;

    int total_qubits() const { return index_width + num_ancillas + 1; }
    int result_qubit() const { return index_width + num_ancillas; }

    /// Applies the gate list to a state laid out as
    /// [index:n][ancillas][result:1] starting at qubit 0.
    void apply_to(sim::QuantumState& state) const;
};

ComparatorCircuit build_comparator(int index_width, std::uint64_t threshold);

}  // namespace qrelief::circuits
