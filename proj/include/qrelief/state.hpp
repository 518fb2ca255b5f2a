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

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qrelief/gate.hpp"
#include "qrelief/rng.hpp"

namespace qrelief::sim {

/// A named block of qubits inside a state's layout.
struct Register {
    std::string name;
    int width;
};

struct ShotCounts {
    std::uint64_t ones = 0;
    std::uint64_t zeros = 0;
};

/// Dense complex statevector over 2^n basis states.
///
/// Qubit ordering convention, used everywhere in this project: qubits are
/// numbered 0..n-1 in layout order and the first-listed register occupies
/// the most significant bits of the basis index. Reading a basis label
/// left to right therefore matches qubit 0, 1, 2, ... For example, with
/// layout [a:1][b:2], the basis state |1>|01> has index 0b101 = 5.
class QuantumState {
  public:
    /// Basis state |bits> for the given layout; `bits` must contain one
    /// '0'/'1' character per qubit.
    QuantumState(std::vector<Register> layout, std::string_view bits);

    /// Builds a state from explicit amplitudes (must be normalized within
    /// 1e-10); mostly useful in tests.
    static QuantumState from_amplitudes(std::vector<Register> layout,
                                        std::vector<Amplitude> amplitudes);

    int num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    const std::vector<Register>& layout() const { return layout_; }
    Amplitude amplitude(std::size_t basis_index) const;
    const std::vector<Amplitude>& amplitudes() const { return amplitudes_; }
    double norm_squared() const;

    /// Applies a (controlled) gate in place. Norm is preserved.
    void apply(const Gate& gate);

    /// Probability that measuring `qubit` yields `outcome`.
    double probability(int qubit, int outcome) const;

    /// Draws `shots` independent single-qubit measurements without
    /// collapsing the state.
    ShotCounts sample(int qubit, std::uint64_t shots, Rng& rng) const;

    /// Collapses `qubit` onto `outcome`, renormalizes, and returns the
    /// pre-collapse probability of that outcome. Throws
    /// ImpossiblePostselectionError when the probability is below 1e-12.
    double postselect(int qubit, int outcome);

    int register_offset(std::string_view name) const;
    int register_width(std::string_view name) const;

    /// Same amplitudes under a different register naming; widths must sum
    /// to the qubit count.
    QuantumState with_layout(std::vector<Register> new_layout) const;

    /// Number of gates applied to this state so far (summed across tensor
    /// products); used for resource accounting.
    std::uint64_t ops_applied() const { return ops_applied_; }

    friend QuantumState tensor(const QuantumState& a, const QuantumState& b);
    friend QuantumState drop_register(const QuantumState& s, std::string_view name);

  private:
    QuantumState() = default;

    /// Bit mask selecting `qubit` inside a basis index.
    std::size_t qubit_mask(int qubit) const;
    bool controls_satisfied(std::size_t basis_index, const Gate& gate) const;
    void validate_gate(const Gate& gate) const;

    int num_qubits_ = 0;
    std::vector<Register> layout_;
    std::vector<Amplitude> amplitudes_;
    std::uint64_t ops_applied_ = 0;
};

/// Inner product <a|b>; layouts must match exactly.
Amplitude overlap(const QuantumState& a, const QuantumState& b);

/// Tensor product a (x) b; a's registers stay in the most significant bits.
/// Register names must remain unique in the combined layout.
QuantumState tensor(const QuantumState& a, const QuantumState& b);

/// Removes a register that holds a definite basis value (all amplitude mass
/// on one value of the register, within 1e-10); the remaining qubits keep
/// their amplitudes. Throws ConfigError when the register is entangled.
QuantumState drop_register(const QuantumState& s, std::string_view name);

}  // namespace qrelief::sim
