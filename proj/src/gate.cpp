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

#include "qrelief/gate.hpp"

#include <cmath>

#include "qrelief/errors.hpp"

namespace qrelief::sim {

namespace {

constexpr double kUnitarityTolerance = 1e-10;

// max |(U^dagger U - I)_{jk}| over the 2x2 entries
double unitarity_defect(const std::array<Amplitude, 4>& m) {
    double defect = 0.0;
    for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
            Amplitude e = std::conj(m[j]) * m[k] + std::conj(m[2 + j]) * m[2 + k];
            if (j == k) {
                e -= 1.0;
            }
            defect = std::max(defect, std::abs(e));
        }
    }
    return defect;
}

}  // namespace

Gate::Gate(GateKind kind, std::array<Amplitude, 4> matrix, std::vector<int> targets)
    : kind_(kind), matrix_(matrix), targets_(std::move(targets)) {}

Gate Gate::h(int target) {
    const double s = 1.0 / std::sqrt(2.0);
    return Gate(GateKind::H, {s, s, s, -s}, {target});
}

Gate Gate::x(int target) {
    return Gate(GateKind::X, {0.0, 1.0, 1.0, 0.0}, {target});
}

Gate Gate::y(int target) {
    const Amplitude i(0.0, 1.0);
    return Gate(GateKind::Y, {0.0, -i, i, 0.0}, {target});
}

Gate Gate::ry(double theta, int target) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return Gate(GateKind::Ry, {c, -s, s, c}, {target});
}

Gate Gate::ry_encoding(double v, int target) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw ConfigError("ry_encoding: amplitude must lie in [0, 1]");
    }
    const double c = std::sqrt(1.0 - v * v);
    return Gate(GateKind::Ry, {c, -v, v, c}, {target});
}

Gate Gate::swap(int a, int b) {
    if (a == b) {
        throw ConfigError("swap: targets must be distinct qubits");
    }
    return Gate(GateKind::Swap, {}, {a, b});
}

Gate Gate::unitary(const std::array<Amplitude, 4>& matrix, int target) {
    if (unitarity_defect(matrix) > kUnitarityTolerance) {
        throw ConfigError("unitary: matrix is not unitary within 1e-10");
    }
    return Gate(GateKind::Unitary, matrix, {target});
}

Gate Gate::controlled_by(int qubit, int polarity) const {
    if (polarity != 0 && polarity != 1) {
        throw ConfigError("controlled_by: polarity must be 0 or 1");
    }
    Gate g = *this;
    g.controls_.push_back({qubit, polarity});
    return g;
}

}  // namespace qrelief::sim
