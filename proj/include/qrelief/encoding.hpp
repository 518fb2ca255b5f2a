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

#include "qrelief/rng.hpp"
#include "qrelief/state.hpp"

namespace qrelief::circuits {

enum class PrepMode { Exact, Sampled };

struct UniformPrep {
    sim::QuantumState state;  // layout [feature:n], (1/sqrt(N)) sum_{i<N} |i>
    int attempts = 1;
    double success_prob = 1.0;
};

/// Puts an n-qubit register into the uniform superposition of the first N
/// basis states: H on every qubit, then a comparator run that flags indices
/// >= N, conditioned on the flag reading 0.
///
/// Exact mode performs the conditioning as one postselection. Sampled mode
/// simulates the measurement and retries on failure, up to `max_attempts`
/// rounds (default 64 * 2^n / N); exceeding the cap throws
/// PreparationFailureError. When N = 2^n no comparator is needed.
UniformPrep prepare_uniform(int index_width, std::uint64_t count, PrepMode mode,
                            sim::Rng& rng, std::uint64_t max_attempts = 0);

/// A sample's feature vector held in superposition, layout
/// [sample:m][feature:n][flag:1][amp:1]: the basis |j>|i>|1> carries
/// amplitude sqrt(1-v_i^2)/sqrt(N) on amp=|0> and v_i/sqrt(N) on amp=|1>.
struct EncodedSample {
    std::size_t sample_index = 0;  // j
    std::size_t num_features = 0;  // N
    sim::QuantumState state;

    int sample_width() const { return state.register_width("sample"); }
    int feature_width() const { return state.register_width("feature"); }
    int flag_qubit() const { return state.register_offset("flag"); }
    int amp_qubit() const { return state.register_offset("amp"); }
};

/// Encodes features[0..N) (each in [0,1]) for sample j: basis-state init,
/// uniform superposition over the N feature indices, then one
/// feature-index-controlled rotation per nonzero feature writing v_i into
/// the amplitude qubit.
EncodedSample encode_sample(const std::vector<double>& features, std::size_t j,
                            int sample_width, int feature_width);

/// Exchanges the flag and amplitude qubits, moving the encoded value next to
/// the feature index; this is the form the swap test consumes on its left
/// input.
sim::QuantumState swap_last_two(const EncodedSample& encoded);

}  // namespace qrelief::circuits
