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

#ifndef MINORCAST_MONOLITHIC_HPP_
#define MINORCAST_MONOLITHIC_HPP_

#include "minorcast/catalog.hpp"
#include "minorcast/embed.hpp"
#include "minorcast/model.hpp"

namespace minorcast {

struct BuildOptions {
  // Additionally cap the active connecting paths per vertex pair and model
  // at one. The base model already bounds their combined activity; this
  // asks for literal uniqueness.
  bool unique_path = false;
};

struct BuiltModel {
  Model model;
  VarCatalog catalog;
};

// Assembles the full 0-1 program whose feasible points are exactly the
// embeddings of source into target with vertex models of at most k
// vertices. Constraint families, tagged by role:
//
//   total_size      m <= sum alpha <= n
//   disjoint        each target vertex used by at most one model
//   fiber_size      each model holds between 1 and k vertices
//   reach           pairs too far apart for one model exclude each other
//   fiber_unique    in-reach pair: endpoints plus active paths capped at 3
//   path_ub/path_lb gamma equals "path interior inside the model"
//   fiber_active    co-resident pair needs an active connecting path
//   epair_ub/_lb    delta equals the product of its two alpha
//   epair_excl      a target edge witnesses one orientation only
//   pullback        every source edge is witnessed by some target edge
//
// The objective is sum alpha for min_size and absent for feasibility.
// Requires k >= 1 and nonempty source and target.
BuiltModel build_monolithic(const Graph& target, const Graph& source, int k,
                            Objective objective,
                            const BuildOptions& options = {});

// Builds and solves. k = 0 defaults to 3. Source larger than target is
// rejected in O(1) without building the model. A returned embedding is
// re-verified from first principles; failure raises
// InternalConsistencyError.
EmbedResult solve_monolithic(const EmbedProblem& problem,
                             const BuildOptions& options = {});

}  // namespace minorcast

#endif  // MINORCAST_MONOLITHIC_HPP_
