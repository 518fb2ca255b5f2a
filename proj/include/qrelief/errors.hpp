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

#include <stdexcept>
#include <string>

namespace qrelief {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A caller gave an inconsistent configuration (bad qubit index, mismatched
/// register layouts, shots = 0, ...).
struct ConfigError : Error {
    using Error::Error;
};

/// Input values outside their permitted domain (feature value not in [0,1]).
struct ValidationError : Error {
    using Error::Error;
};

/// A file could not be parsed; the message names the offending row/column.
struct ParseError : Error {
    using Error::Error;
};

/// The dataset cannot support the requested operation (a class is empty, or
/// has fewer than two members when a near-hit is needed).
struct DegenerateDatasetError : Error {
    using Error::Error;
};

/// Conditioning on a measurement outcome whose probability is zero.
struct ImpossiblePostselectionError : Error {
    using Error::Error;
};

/// Replay mode asked for a probability the replay table does not contain.
struct ReplayIncompleteError : Error {
    using Error::Error;
};

/// Repeat-until-success state preparation exceeded its retry cap.
struct PreparationFailureError : Error {
    using Error::Error;
};

}  // namespace qrelief
