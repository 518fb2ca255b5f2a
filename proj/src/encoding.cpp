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

#include "qrelief/encoding.hpp"

#include <string>

#include "qrelief/comparator.hpp"
#include "qrelief/errors.hpp"

namespace qrelief::circuits {

using sim::Gate;
using sim::QuantumState;
using sim::Register;

namespace {

std::string bits_of(std::uint64_t value, int width) {
    std::string s(width, '0');
    for (int b = 0; b < width; ++b) {
        if ((value >> b) & 1) {
            s[width - 1 - b] = '1';
        }
    }
    return s;
}

QuantumState prepared_comparator_state(const ComparatorCircuit& cmp) {
    std::vector<Register> layout{{"feature", cmp.index_width}};
    if (cmp.num_ancillas > 0) {
        layout.push_back({"cmp_anc", cmp.num_ancillas});
    }
    layout.push_back({"cmp_res", 1});
    QuantumState state(layout, std::string(cmp.total_qubits(), '0'));
    for (int q = 0; q < cmp.index_width; ++q) {
        state.apply(Gate::h(q));
    }
    cmp.apply_to(state);
    return state;
}

QuantumState strip_comparator_registers(QuantumState state, int num_ancillas) {
    state = drop_register(state, "cmp_res");
    if (num_ancillas > 0) {
        state = drop_register(state, "cmp_anc");
    }
    return state;
}

}  // namespace

UniformPrep prepare_uniform(int index_width, std::uint64_t count, PrepMode mode,
                            sim::Rng& rng, std::uint64_t max_attempts) {
    if (index_width < 1) {
        throw ConfigError("prepare_uniform: index width must be positive");
    }
    const std::uint64_t capacity = std::uint64_t{1} << index_width;
    if (count < 1 || count > capacity) {
        throw ConfigError("prepare_uniform: need 1 <= N <= 2^n");
    }

    if (count == capacity) {
        // Full superposition; nothing to clip.
        QuantumState state({{"feature", index_width}},
                           std::string(index_width, '0'));
        for (int q = 0; q < index_width; ++q) {
            state.apply(Gate::h(q));
        }
        return UniformPrep{std::move(state), 1, 1.0};
    }

    const ComparatorCircuit cmp = build_comparator(index_width, count);
    const int result = cmp.result_qubit();

    if (mode == PrepMode::Exact) {
        QuantumState state = prepared_comparator_state(cmp);
        const double success = state.postselect(result, 0);
        return UniformPrep{strip_comparator_registers(std::move(state), cmp.num_ancillas),
                           1, success};
    }

    if (max_attempts == 0) {
        max_attempts = (64 * capacity) / count;
    }
    for (std::uint64_t attempt = 1; attempt <= max_attempts; ++attempt) {
        QuantumState state = prepared_comparator_state(cmp);
        const double success = state.probability(result, 0);
        if (state.sample(result, 1, rng).zeros == 1) {
            state.postselect(result, 0);
            return UniformPrep{strip_comparator_registers(std::move(state), cmp.num_ancillas),
                               static_cast<int>(attempt), success};
        }
    }
    throw PreparationFailureError("prepare_uniform: retry cap exceeded");
}

EncodedSample encode_sample(const std::vector<double>& features, std::size_t j,
                            int sample_width, int feature_width) {
    const std::size_t count = features.size();
    if (sample_width < 1 || feature_width < 1) {
        throw ConfigError("encode_sample: register widths must be positive");
    }
    if (count < 1 || count > (std::size_t{1} << feature_width)) {
        throw ConfigError("encode_sample: feature count must satisfy 1 <= N <= 2^n");
    }
    if (j >= (std::size_t{1} << sample_width)) {
        throw ConfigError("encode_sample: sample index does not fit its register");
    }
    for (std::size_t i = 0; i < count; ++i) {
        if (!(features[i] >= 0.0 && features[i] <= 1.0)) {
            throw ValidationError("encode_sample: feature " + std::to_string(i) +
                                  " outside [0, 1]");
        }
    }

    sim::Rng unused(0);  // exact preparation draws nothing
    UniformPrep prep = prepare_uniform(feature_width, count, PrepMode::Exact, unused);

    QuantumState state = tensor(
        tensor(QuantumState({{"sample", sample_width}}, bits_of(j, sample_width)),
               prep.state),
        tensor(QuantumState({{"flag", 1}}, "1"), QuantumState({{"amp", 1}}, "0")));

    const int feature_offset = state.register_offset("feature");
    const int amp_qubit = state.register_offset("amp");
    for (std::size_t i = 0; i < count; ++i) {
        if (features[i] == 0.0) {
            continue;
        }
        Gate rotate = Gate::ry_encoding(features[i], amp_qubit);
        for (int b = 0; b < feature_width; ++b) {
            const int polarity = static_cast<int>((i >> (feature_width - 1 - b)) & 1);
            rotate = rotate.controlled_by(feature_offset + b, polarity);
        }
        state.apply(rotate);
    }

    return EncodedSample{j, count, std::move(state)};
}

QuantumState swap_last_two(const EncodedSample& encoded) {
    QuantumState state = encoded.state;
    state.apply(Gate::swap(encoded.flag_qubit(), encoded.amp_qubit()));
    return state;
}

}  // namespace qrelief::circuits
