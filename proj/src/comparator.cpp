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

#include "qrelief/comparator.hpp"

#include "qrelief/errors.hpp"

namespace qrelief::circuits {

using sim::Gate;

ComparatorCircuit build_comparator(int index_width, std::uint64_t threshold) {
    if (index_width < 1 || index_width > 62) {
        throw ConfigError("comparator: index width out of range");
    }
    const std::uint64_t capacity = std::uint64_t{1} << index_width;
    if (threshold < 1 || threshold > capacity) {
        throw ConfigError("comparator: threshold must satisfy 1 <= N <= 2^n");
    }

    ComparatorCircuit circuit;
    circuit.index_width = index_width;
    circuit.threshold = threshold;

    // i >= N  iff  i > K with K = N - 1: some bit position k has K_k = 0,
    // i_k = 1, and i agreeing with K on all higher bits. The events for
    // distinct k are mutually exclusive.
    const std::uint64_t compare_to = threshold - 1;
    struct Stage {
        std::vector<sim::ControlBit> controls;
    };
    std::vector<Stage> stages;
    for (int bit = index_width - 1; bit >= 0; --bit) {
        if ((compare_to >> bit) & 1) {
            continue;  // i_bit cannot exceed a 1 bit
        }
        Stage stage;
        for (int high = index_width - 1; high > bit; --high) {
            const int polarity = static_cast<int>((compare_to >> high) & 1);
            stage.controls.push_back({index_width - 1 - high, polarity});
        }
        stage.controls.push_back({index_width - 1 - bit, 1});
        stages.push_back(std::move(stage));
    }

    circuit.num_ancillas = static_cast<int>(stages.size());
    const int result = circuit.result_qubit();

    auto stage_gate = [&](int s) {
        Gate g = Gate::x(index_width + s);
        for (const sim::ControlBit& c : stages[s].controls) {
            g = g.controlled_by(c.qubit, c.polarity);
        }
        return g;
    };

    for (int s = 0; s < circuit.num_ancillas; ++s) {
        circuit.gates.push_back(stage_gate(s));
    }
    for (int s = 0; s < circuit.num_ancillas; ++s) {
        circuit.gates.push_back(Gate::x(result).controlled_by(index_width + s));
    }
    for (int s = circuit.num_ancillas - 1; s >= 0; --s) {
        circuit.gates.push_back(stage_gate(s));
    }
    return circuit;
}

void ComparatorCircuit::apply_to(sim::QuantumState& state) const {
    if (state.num_qubits() < total_qubits()) {
        throw ConfigError("comparator: state is narrower than the circuit");
    }
    for (const Gate& g : gates) {
        state.apply(g);
    }
}

}  // namespace qrelief::circuits
