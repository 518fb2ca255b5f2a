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

// Slow reference implementations the tests check the library against. They
// avoid the library's gate kernels on purpose: gates become explicit
// 2^n x 2^n matrices and encoded states are written down amplitude by
// amplitude from their defining formulas.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qrelief/dataset.hpp"
#include "qrelief/gate.hpp"
#include "qrelief/rng.hpp"
#include "qrelief/state.hpp"

namespace oracle {

using Amp = std::complex<double>;
using Matrix = std::vector<std::vector<Amp>>;

inline int bit_at(std::size_t index, int qubit, int num_qubits) {
    return (index >> (num_qubits - 1 - qubit)) & 1;
}

inline bool controls_hold(std::size_t index, const qrelief::sim::Gate& g,
                          int num_qubits) {
    for (const qrelief::sim::ControlBit& c : g.controls()) {
        if (bit_at(index, c.qubit, num_qubits) != c.polarity) {
            return false;
        }
    }
    return true;
}

// Full matrix of a (controlled) gate, built column by column from the
// definition of each gate kind. Practical up to ~10 qubits.
inline Matrix gate_matrix(const qrelief::sim::Gate& g, int num_qubits) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    Matrix m(dim, std::vector<Amp>(dim, Amp{0.0, 0.0}));
    for (std::size_t col = 0; col < dim; ++col) {
        if (!controls_hold(col, g, num_qubits)) {
            m[col][col] = 1.0;
            continue;
        }
        if (g.kind() == qrelief::sim::GateKind::Swap) {
            const int qa = g.targets()[0];
            const int qb = g.targets()[1];
            const int ba = bit_at(col, qa, num_qubits);
            const int bb = bit_at(col, qb, num_qubits);
            std::size_t row = col;
            if (ba != bb) {
                row ^= (std::size_t{1} << (num_qubits - 1 - qa)) |
                       (std::size_t{1} << (num_qubits - 1 - qb));
            }
            m[row][col] = 1.0;
        } else {
            const int t = g.targets()[0];
            const std::size_t mask = std::size_t{1} << (num_qubits - 1 - t);
            const int in_bit = bit_at(col, t, num_qubits);
            // column = U|in_bit> on the target, identity elsewhere
            m[col & ~mask][col] = g.matrix()[0 * 2 + in_bit];
            m[col | mask][col] = g.matrix()[1 * 2 + in_bit];
        }
    }
    return m;
}

inline std::vector<Amp> mat_vec(const Matrix& m, const std::vector<Amp>& v) {
    std::vector<Amp> out(m.size(), Amp{0.0, 0.0});
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < m.size(); ++c) {
            out[r] += m[r][c] * v[c];
        }
    }
    return out;
}

// Amplitudes of an encoded sample written directly from its formula:
// basis |j>|i>|1> holds sqrt(1-v_i^2)/sqrt(N) on amp=0 and v_i/sqrt(N) on
// amp=1; everything else is zero.
inline std::vector<Amp> encoded_amplitudes(const std::vector<double>& v,
                                           std::size_t j, int sample_width,
                                           int feature_width) {
    const int total = sample_width + feature_width + 2;
    std::vector<Amp> amps(std::size_t{1} << total, Amp{0.0, 0.0});
    const double root_n = std::sqrt(static_cast<double>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::size_t base = (((j << feature_width) | i) << 2) | 0b10;
        amps[base] = std::sqrt(1.0 - v[i] * v[i]) / root_n;
        amps[base | 1] = v[i] / root_n;
    }
    return amps;
}

// Same state after exchanging the last two qubits.
inline std::vector<Amp> encoded_swapped_amplitudes(const std::vector<double>& v,
                                                   std::size_t j, int sample_width,
                                                   int feature_width) {
    const int total = sample_width + feature_width + 2;
    std::vector<Amp> amps(std::size_t{1} << total, Amp{0.0, 0.0});
    const double root_n = std::sqrt(static_cast<double>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::size_t base = (((j << feature_width) | i) << 2) | 0b01;
        amps[base] = std::sqrt(1.0 - v[i] * v[i]) / root_n;
        amps[base | 0b10] = v[i] / root_n;
    }
    return amps;
}

// Random normalized state over `num_qubits` qubits.
inline std::vector<Amp> random_state(int num_qubits, qrelief::sim::Rng& rng) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    std::vector<Amp> amps(dim);
    double norm = 0.0;
    for (Amp& a : amps) {
        a = Amp{rng.next_unit() - 0.5, rng.next_unit() - 0.5};
        norm += std::norm(a);
    }
    const double scale = 1.0 / std::sqrt(norm);
    for (Amp& a : amps) {
        a *= scale;
    }
    return amps;
}

inline std::vector<double> random_unit_features(std::size_t count,
                                                qrelief::sim::Rng& rng) {
    std::vector<double> v(count);
    for (double& x : v) {
        x = rng.next_unit();
    }
    return v;
}

inline qrelief::Dataset random_binary_dataset(std::size_t num_samples,
                                              std::size_t num_features,
                                              qrelief::sim::Rng& rng) {
    std::vector<qrelief::Sample> samples;
    for (std::size_t j = 0; j < num_samples; ++j) {
        qrelief::Sample s;
        s.id = "X" + std::to_string(j);
        // first half class 0, rest class 1, so both classes have >= 2 members
        s.class_index = j < (num_samples + 1) / 2 ? 0 : 1;
        for (std::size_t i = 0; i < num_features; ++i) {
            s.features.push_back(rng.bernoulli(0.5) ? 1 : 0);
        }
        samples.push_back(std::move(s));
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < num_features; ++i) {
        names.push_back("F" + std::to_string(i));
    }
    return qrelief::Dataset(std::move(samples), std::move(names), {"A", "B"});
}

}  // namespace oracle
