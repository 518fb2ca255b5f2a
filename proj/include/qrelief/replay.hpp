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

#include <map>
#include <string>
#include <tuple>

namespace qrelief {

/// Ancilla probabilities recorded by an earlier (for instance hardware)
/// execution, keyed by iteration and the ids of the compared samples. The
/// iteration is part of the key because a pair may be re-measured with a
/// different outcome in a later iteration.
class ReplayTable {
  public:
    using Key = std::tuple<int, std::string, std::string>;  // (t, u, other)

    /// Throws ParseError on a duplicate key or a p1 outside [0, 1].
    void insert(int iteration, const std::string& u_id,
                const std::string& other_id, double p1);

    /// Throws ReplayIncompleteError when the record is missing.
    double lookup(int iteration, const std::string& u_id,
                  const std::string& other_id) const;

    std::size_t size() const { return records_.size(); }
    const std::map<Key, double>& records() const { return records_; }

  private:
    std::map<Key, double> records_;
};

}  // namespace qrelief
