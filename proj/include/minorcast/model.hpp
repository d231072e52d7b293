// Copyright 2026 Minorcast Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace minorcast {

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a solver or decoder produces something that violates its own
// model; always a bug, never user input.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using VarId = int;

constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kPosInf = std::numeric_limits<std::int64_t>::max();

// lower <= sum(coeff * var) <= upper over binary vars. Terms are stored
// merged (one per variable) and sorted by variable id. The tag names the
// constraint family for LP export and diagnostics.
struct LinearConstraint {
  std::vector<std::pair<std::int64_t, VarId>> terms;
  std::int64_t lower = kNegInf;
  std::int64_t upper = kPosInf;
  std::string tag;
};

// 0-1 integer program: binary variables with unique names, integer-coefficient
// linear constraints, optional minimization objective. A warm-start hint (the
// previous incumbent) survives constraint additions and seeds the next solve.
class Model {
 public:
  VarId add_binary(const std::string& name);
  int num_variables() const { return static_cast<int>(names_.size()); }
  const std::string& name(VarId v) const;
  std::optional<VarId> find(const std::string& name) const;

  // Merges duplicate terms, drops zero coefficients, validates bounds and
  // variable ids, then appends.
  void add_constraint(std::vector<std::pair<std::int64_t, VarId>> terms,
                      std::int64_t lower, std::int64_t upper, std::string tag);
  const std::vector<LinearConstraint>& constraints() const {
    return constraints_;
  }

  void minimize(std::vector<std::pair<std::int64_t, VarId>> terms);
  bool has_objective() const { return objective_.has_value(); }
  const std::vector<std::pair<std::int64_t, VarId>>& objective() const;

  void set_warm_start(std::vector<std::uint8_t> assignment);
  const std::optional<std::vector<std::uint8_t>>& warm_start() const {
    return warm_start_;
  }

  // Exact activity of one merged term list under a full assignment.
  std::int64_t evaluate(
      const std::vector<std::pair<std::int64_t, VarId>>& terms,
      const std::vector<std::uint8_t>& assignment) const;
  bool satisfies(const LinearConstraint& c,
                 const std::vector<std::uint8_t>& assignment) const;
  std::int64_t objective_value(
      const std::vector<std::uint8_t>& assignment) const;

 private:
  std::vector<std::pair<std::int64_t, VarId>> merge(
      std::vector<std::pair<std::int64_t, VarId>> terms) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, VarId> by_name_;
  std::vector<LinearConstraint> constraints_;
  std::optional<std::vector<std::pair<std::int64_t, VarId>>> objective_;
  std::optional<std::vector<std::uint8_t>> warm_start_;
};

}  // namespace minorcast
