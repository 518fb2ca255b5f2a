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

#include <array>
#include <complex>
#include <vector>

namespace qrelief::sim {

using Amplitude = std::complex<double>;

enum class GateKind { H, X, Y, Ry, Swap, Unitary };

/// A control qubit together with the value (0 or 1) it must hold for the
/// gate to fire.
struct ControlBit {
    int qubit;
    int polarity;
};

/// A single- or two-qubit unitary with an arbitrary list of polarity-tagged
/// controls. Single-qubit kinds carry their 2x2 matrix in row-major order;
/// Swap is handled as a basis permutation and carries no matrix.
class Gate {
  public:
    static Gate h(int target);
    static Gate x(int target);
    static Gate y(int target);
    static Gate ry(double theta, int target);
    /// Rotation with sin(theta/2) = v for v in [0,1], built from v directly
    /// so that v = 0 and v = 1 yield exact matrix entries.
    static Gate ry_encoding(double v, int target);
    static Gate swap(int a, int b);
    /// Arbitrary 2x2 unitary; throws ConfigError if not unitary within 1e-10.
    static Gate unitary(const std::array<Amplitude, 4>& matrix, int target);

    /// Returns a copy of this gate with one more control attached.
    Gate controlled_by(int qubit, int polarity = 1) const;

    GateKind kind() const { return kind_; }
    const std::array<Amplitude, 4>& matrix() const { return matrix_; }
    const std::vector<int>& targets() const { return targets_; }
    const std::vector<ControlBit>& controls() const { return controls_; }

  private:
    Gate(GateKind kind, std::array<Amplitude, 4> matrix, std::vector<int> targets);

    GateKind kind_;
    std::array<Amplitude, 4> matrix_;  // unused for Swap
    std::vector<int> targets_;
    std::vector<ControlBit> controls_;
};

}  // namespace qrelief::sim
