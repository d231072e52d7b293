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
#include <optional>
#include <vector>

#include "minorcast/model.hpp"

namespace minorcast {

enum class SolveStatus { optimal, feasible, infeasible, timeout };

const char* to_string(SolveStatus s);

struct SolveLimits {
  double time_limit_s = 0.0;   // 0 disables the limit
  std::int64_t node_limit = 0;  // 0 disables the limit
  // Return as soon as the first incumbent is recorded; used for
  // feasibility-objective runs. Status is then feasible unless the bound
  // already proves the incumbent optimal.
  bool stop_at_first_solution = false;
};

struct SolveStats {
  std::int64_t nodes = 0;
  std::int64_t propagations = 0;
  double wall_s = 0.0;
};

// best_bound is a valid lower bound on the minimum over all feasible
// assignments: it equals objective_value for optimal, is kPosInf for
// infeasible, and comes from the weakest open subtree otherwise.
struct SolveOutcome {
  SolveStatus status = SolveStatus::infeasible;
  std::optional<std::vector<std::uint8_t>> assignment;
  std::optional<std::int64_t> objective_value;
  std::int64_t best_bound = 0;
  SolveStats stats;
};

// Depth-first branch and bound over the binary variables. Bounding and
// propagation use per-constraint min/max activities plus a surrogate floor
// built from disjoint-support covering rows; branching is row-driven (the
// unmet row with the highest conflict activity supplies the variable).
// Objective runs without a warm incumbent iteratively deepen an objective
// cap from the root floor. Deterministic for fixed limits apart from
// wall-clock cutoff. The incumbent is written back to the model as the
// warm-start hint and re-checked first on the next call.
SolveOutcome solve(Model& model, const SolveLimits& limits = {});

}  // namespace minorcast
