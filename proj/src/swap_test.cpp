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

#include "qrelief/swap_test.hpp"

#include <vector>

#include "qrelief/errors.hpp"

namespace qrelief::circuits {

using sim::Gate;
using sim::QuantumState;
using sim::Register;

SwapTestResult swap_test(const QuantumState& left, const QuantumState& right,
                         SwapTestMode mode, std::uint64_t shots, sim::Rng& rng) {
    if (left.layout().size() != right.layout().size()) {
        throw ConfigError("swap_test: register layouts differ");
    }
    for (std::size_t i = 0; i < left.layout().size(); ++i) {
        if (left.layout()[i].name != right.layout()[i].name ||
            left.layout()[i].width != right.layout()[i].width) {
            throw ConfigError("swap_test: register layouts differ");
        }
    }
    if (mode == SwapTestMode::Sampled && shots == 0) {
        throw ConfigError("swap_test: sampled mode needs shots >= 1");
    }

    // Qubits taking part in the controlled swap: everything except sample
    // index registers, which only label which sample a state encodes.
    std::vector<int> swapped;
    {
        int offset = 0;
        for (const Register& reg : left.layout()) {
            if (reg.name != "sample") {
                for (int q = 0; q < reg.width; ++q) {
                    swapped.push_back(offset + q);
                }
            }
            offset += reg.width;
        }
    }

    const int width = left.num_qubits();
    const std::uint64_t inherited = left.ops_applied() + right.ops_applied();
    QuantumState state =
        tensor(QuantumState({{"ancilla", 1}}, "0"),
               tensor(left.with_layout({{"left", width}}),
                      right.with_layout({{"right", width}})));

    state.apply(Gate::h(0));
    for (int q : swapped) {
        state.apply(Gate::swap(1 + q, 1 + width + q).controlled_by(0));
    }
    state.apply(Gate::h(0));

    SwapTestResult result;
    result.qubits = state.num_qubits();
    result.gates = state.ops_applied() - inherited;
    if (mode == SwapTestMode::Exact) {
        result.p1 = state.probability(0, 1);
    } else {
        const sim::ShotCounts counts = state.sample(0, shots, rng);
        result.ones = counts.ones;
        result.zeros = counts.zeros;
        result.shots = shots;
        result.p1 = static_cast<double>(counts.ones) / static_cast<double>(shots);
    }
    return result;
}

}  // namespace qrelief::circuits
