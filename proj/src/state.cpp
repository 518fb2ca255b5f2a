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

#include "qrelief/state.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "qrelief/errors.hpp"

namespace qrelief::sim {

namespace {

constexpr double kNormTolerance = 1e-10;
constexpr double kImpossibleTolerance = 1e-12;
constexpr int kMaxQubits = 28;  // 2^28 amplitudes = 4 GiB; well past any use here

int total_width(const std::vector<Register>& layout) {
    int width = 0;
    for (const Register& reg : layout) {
        if (reg.width < 1) {
            throw ConfigError("register '" + reg.name + "' must have positive width");
        }
        width += reg.width;
    }
    return width;
}

void check_layout(const std::vector<Register>& layout) {
    if (layout.empty()) {
        throw ConfigError("state layout must contain at least one register");
    }
    for (std::size_t i = 0; i < layout.size(); ++i) {
        for (std::size_t j = i + 1; j < layout.size(); ++j) {
            if (layout[i].name == layout[j].name) {
                throw ConfigError("duplicate register name '" + layout[i].name + "'");
            }
        }
    }
    if (total_width(layout) > kMaxQubits) {
        throw ConfigError("state would exceed the supported qubit count");
    }
}

}  // namespace

QuantumState::QuantumState(std::vector<Register> layout, std::string_view bits) {
    check_layout(layout);
    num_qubits_ = total_width(layout);
    if (static_cast<int>(bits.size()) != num_qubits_) {
        throw ConfigError("basis bitstring length does not match layout width");
    }
    std::size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw ConfigError("basis bitstring may contain only '0' and '1'");
        }
        index = (index << 1) | static_cast<std::size_t>(c - '0');
    }
    layout_ = std::move(layout);
    amplitudes_.assign(std::size_t{1} << num_qubits_, Amplitude{0.0, 0.0});
    amplitudes_[index] = Amplitude{1.0, 0.0};
}

QuantumState QuantumState::from_amplitudes(std::vector<Register> layout,
                                           std::vector<Amplitude> amplitudes) {
    check_layout(layout);
    const int width = total_width(layout);
    if (amplitudes.size() != (std::size_t{1} << width)) {
        throw ConfigError("amplitude vector length does not match layout width");
    }
    QuantumState state;
    state.num_qubits_ = width;
    state.layout_ = std::move(layout);
    state.amplitudes_ = std::move(amplitudes);
    if (std::abs(state.norm_squared() - 1.0) > kNormTolerance) {
        throw ConfigError("amplitudes are not normalized");
    }
    return state;
}

Amplitude QuantumState::amplitude(std::size_t basis_index) const {
    if (basis_index >= amplitudes_.size()) {
        throw ConfigError("basis index out of range");
    }
    return amplitudes_[basis_index];
}

double QuantumState::norm_squared() const {
    double total = 0.0;
    for (const Amplitude& a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

std::size_t QuantumState::qubit_mask(int qubit) const {
    if (qubit < 0 || qubit >= num_qubits_) {
        throw ConfigError("qubit index out of range");
    }
    return std::size_t{1} << (num_qubits_ - 1 - qubit);
}

bool QuantumState::controls_satisfied(std::size_t basis_index, const Gate& gate) const {
    for (const ControlBit& c : gate.controls()) {
        const std::size_t mask = std::size_t{1} << (num_qubits_ - 1 - c.qubit);
        const int bit = (basis_index & mask) ? 1 : 0;
        if (bit != c.polarity) {
            return false;
        }
    }
    return true;
}

void QuantumState::validate_gate(const Gate& gate) const {
    for (int t : gate.targets()) {
        qubit_mask(t);  // range check
    }
    for (const ControlBit& c : gate.controls()) {
        qubit_mask(c.qubit);
        for (int t : gate.targets()) {
            if (c.qubit == t) {
                throw ConfigError("control and target qubits must be disjoint");
            }
        }
        for (const ControlBit& other : gate.controls()) {
            if (&other != &c && other.qubit == c.qubit) {
                throw ConfigError("duplicate control qubit");
            }
        }
    }
}

void QuantumState::apply(const Gate& gate) {
    validate_gate(gate);
    const std::size_t dim = amplitudes_.size();
    if (gate.kind() == GateKind::Swap) {
        const std::size_t m0 = qubit_mask(gate.targets()[0]);
        const std::size_t m1 = qubit_mask(gate.targets()[1]);
        for (std::size_t k = 0; k < dim; ++k) {
            // visit each swapped pair once, from its (0,1) member
            if ((k & m0) != 0 || (k & m1) == 0) {
                continue;
            }
            if (!controls_satisfied(k, gate)) {
                continue;
            }
            std::swap(amplitudes_[k], amplitudes_[k ^ m0 ^ m1]);
        }
    } else {
        const std::size_t tm = qubit_mask(gate.targets()[0]);
        const std::array<Amplitude, 4>& m = gate.matrix();
        for (std::size_t k = 0; k < dim; ++k) {
            if ((k & tm) != 0) {
                continue;  // handle each (|0>,|1>) pair from its |0> member
            }
            if (!controls_satisfied(k, gate)) {
                continue;
            }
            const Amplitude a0 = amplitudes_[k];
            const Amplitude a1 = amplitudes_[k | tm];
            amplitudes_[k] = m[0] * a0 + m[1] * a1;
            amplitudes_[k | tm] = m[2] * a0 + m[3] * a1;
        }
    }
    ++ops_applied_;
}

double QuantumState::probability(int qubit, int outcome) const {
    if (outcome != 0 && outcome != 1) {
        throw ConfigError("measurement outcome must be 0 or 1");
    }
    const std::size_t mask = qubit_mask(qubit);
    double total = 0.0;
    for (std::size_t k = 0; k < amplitudes_.size(); ++k) {
        const int bit = (k & mask) ? 1 : 0;
        if (bit == outcome) {
            total += std::norm(amplitudes_[k]);
        }
    }
    return total;
}

ShotCounts QuantumState::sample(int qubit, std::uint64_t shots, Rng& rng) const {
    if (shots == 0) {
        throw ConfigError("sample: shots must be at least 1");
    }
    const double p1 = probability(qubit, 1);
    ShotCounts counts;
    for (std::uint64_t s = 0; s < shots; ++s) {
        if (rng.bernoulli(p1)) {
            ++counts.ones;
        } else {
            ++counts.zeros;
        }
    }
    return counts;
}

double QuantumState::postselect(int qubit, int outcome) {
    const double p = probability(qubit, outcome);
    if (p < kImpossibleTolerance) {
        throw ImpossiblePostselectionError(
            "postselection outcome has zero probability");
    }
    const std::size_t mask = qubit_mask(qubit);
    const double scale = 1.0 / std::sqrt(p);
    for (std::size_t k = 0; k < amplitudes_.size(); ++k) {
        const int bit = (k & mask) ? 1 : 0;
        if (bit == outcome) {
            amplitudes_[k] *= scale;
        } else {
            amplitudes_[k] = Amplitude{0.0, 0.0};
        }
    }
    return p;
}

int QuantumState::register_offset(std::string_view name) const {
    int offset = 0;
    for (const Register& reg : layout_) {
        if (reg.name == name) {
            return offset;
        }
        offset += reg.width;
    }
    throw ConfigError("unknown register '" + std::string(name) + "'");
}

int QuantumState::register_width(std::string_view name) const {
    for (const Register& reg : layout_) {
        if (reg.name == name) {
            return reg.width;
        }
    }
    throw ConfigError("unknown register '" + std::string(name) + "'");
}

QuantumState QuantumState::with_layout(std::vector<Register> new_layout) const {
    check_layout(new_layout);
    if (total_width(new_layout) != num_qubits_) {
        throw ConfigError("replacement layout width does not match qubit count");
    }
    QuantumState out = *this;
    out.layout_ = std::move(new_layout);
    return out;
}

Amplitude overlap(const QuantumState& a, const QuantumState& b) {
    if (a.layout().size() != b.layout().size()) {
        throw ConfigError("overlap: register layouts differ");
    }
    for (std::size_t i = 0; i < a.layout().size(); ++i) {
        if (a.layout()[i].name != b.layout()[i].name ||
            a.layout()[i].width != b.layout()[i].width) {
            throw ConfigError("overlap: register layouts differ");
        }
    }
    Amplitude total{0.0, 0.0};
    for (std::size_t k = 0; k < a.dimension(); ++k) {
        total += std::conj(a.amplitudes()[k]) * b.amplitudes()[k];
    }
    return total;
}

QuantumState tensor(const QuantumState& a, const QuantumState& b) {
    std::vector<Register> layout = a.layout_;
    layout.insert(layout.end(), b.layout_.begin(), b.layout_.end());
    check_layout(layout);

    QuantumState out;
    out.num_qubits_ = a.num_qubits_ + b.num_qubits_;
    out.layout_ = std::move(layout);
    out.amplitudes_.assign(a.dimension() * b.dimension(), Amplitude{0.0, 0.0});
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        if (a.amplitudes_[i] == Amplitude{0.0, 0.0}) {
            continue;
        }
        const std::size_t base = i << b.num_qubits_;
        for (std::size_t j = 0; j < b.dimension(); ++j) {
            out.amplitudes_[base | j] = a.amplitudes_[i] * b.amplitudes_[j];
        }
    }
    out.ops_applied_ = a.ops_applied_ + b.ops_applied_;
    return out;
}

QuantumState drop_register(const QuantumState& s, std::string_view name) {
    if (s.layout_.size() < 2) {
        throw ConfigError("drop_register: cannot drop a state's only register");
    }
    const int offset = s.register_offset(name);
    const int width = s.register_width(name);
    const int tail = s.num_qubits_ - offset - width;  // qubits right of the register

    // Find the register value carrying the amplitude mass.
    const std::size_t reg_dim = std::size_t{1} << width;
    const std::size_t tail_dim = std::size_t{1} << tail;
    std::vector<double> mass(reg_dim, 0.0);
    for (std::size_t k = 0; k < s.dimension(); ++k) {
        const std::size_t value = (k >> tail) & (reg_dim - 1);
        mass[value] += std::norm(s.amplitudes_[k]);
    }
    const std::size_t best =
        std::max_element(mass.begin(), mass.end()) - mass.begin();
    double leaked = 0.0;
    for (std::size_t v = 0; v < reg_dim; ++v) {
        if (v != best) {
            leaked += mass[v];
        }
    }
    if (leaked > kNormTolerance) {
        throw ConfigError("drop_register: register '" + std::string(name) +
                          "' is not in a definite basis state");
    }

    QuantumState out;
    out.num_qubits_ = s.num_qubits_ - width;
    for (const Register& reg : s.layout_) {
        if (reg.name != name) {
            out.layout_.push_back(reg);
        }
    }
    out.amplitudes_.assign(std::size_t{1} << out.num_qubits_, Amplitude{0.0, 0.0});
    for (std::size_t head = 0; head < (std::size_t{1} << offset); ++head) {
        for (std::size_t low = 0; low < tail_dim; ++low) {
            const std::size_t src = (((head << width) | best) << tail) | low;
            out.amplitudes_[(head << tail) | low] = s.amplitudes_[src];
        }
    }
    out.ops_applied_ = s.ops_applied_;
    return out;
}

}  // namespace qrelief::sim
