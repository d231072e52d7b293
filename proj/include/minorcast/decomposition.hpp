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

#ifndef MINORCAST_DECOMPOSITION_HPP_
#define MINORCAST_DECOMPOSITION_HPP_

#include <vector>

#include "minorcast/catalog.hpp"
#include "minorcast/embed.hpp"
#include "minorcast/monolithic.hpp"

namespace minorcast {

// Assembles the assignment master problem. Its solutions assign every
// source edge to a witnessing target edge but may produce disconnected
// vertex models; connectivity is restored by nogood cuts. Families, tagged
// by role:
//
//   disjoint          each target vertex used by at most one model
//   fiber_size        each model holds between 1 and k vertices
//   edge_assign       every source edge picks exactly one witness
//   link_ub           a picked witness pins its four alpha values
//   link_agg          aggregated form of the same link (kept, redundant)
//   multi_flag        w_j relaxes to 1 when model j holds > 1 vertex
//   neighbor_support  in a multi-vertex model nobody sits alone
//
// The objective is sum alpha (also under the feasibility objective, where
// it only guides the search and prices the reported bound).
BuiltModel build_master(const Graph& target, const Graph& source, int k,
                        Objective objective);

// Source vertices whose model induces a disconnected subgraph, ascending.
std::vector<int> disconnected_models(const Embedding& embedding,
                                     const Graph& target);

// Cut for one disconnected candidate model: any embedding that keeps all
// of `fiber` inside the model of `source_vertex` must also include one of
// the fiber's neighbors, since a connected superset of a disconnected set
// has to touch its boundary. Satisfied by every valid embedding.
CutRecord make_cut(const Graph& target, int source_vertex,
                   const std::vector<int>& fiber);

// Master/subproblem loop: solve the master, check every multi-vertex model
// for connectivity, add one cut per disconnected model, repeat. Terminates
// because each cut excludes the assignment that produced it; a repeated
// assignment raises InternalConsistencyError. k = 0 defaults to
// |V(target)|, leaving model size effectively unbounded. The time budget
// spans all iterations.
EmbedResult solve_decomposition(const EmbedProblem& problem);

}  // namespace minorcast

#endif  // MINORCAST_DECOMPOSITION_HPP_
