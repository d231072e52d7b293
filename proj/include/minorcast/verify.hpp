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

#ifndef MINORCAST_VERIFY_HPP_
#define MINORCAST_VERIFY_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "minorcast/embedding.hpp"
#include "minorcast/graph.hpp"

namespace minorcast {

// One defect in a candidate embedding.
struct Violation {
  enum class Kind {
    invalid_vertex,     // source or target id out of range
    missing_vertex,     // source vertex has no model, or an empty one
    overlap,            // target vertex claimed by two models (or twice)
    disconnected_model, // model does not induce a connected subgraph
    uncovered_edge,     // no target edge witnesses this source edge
  };
  Kind kind;
  int source = -1;        // source vertex, when applicable
  int source_other = -1;  // second endpoint for uncovered_edge / overlap
  int target = -1;        // target vertex, when applicable
  std::string message;
};

const char* to_string(Violation::Kind kind);

struct VerifyReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks a candidate embedding of `source` into `target` from first
// principles: every source vertex owns a nonempty model, models are
// pairwise disjoint, each induces a connected subgraph of the target, and
// every source edge has a witnessing target edge between the two models.
// Reports all defects, in a deterministic order.
VerifyReport verify_embedding(const Embedding& embedding, const Graph& target,
                              const Graph& source);

// Exhaustive reference search for a minimum-size embedding, independent of
// the optimization models: labels every target vertex with a source vertex
// or leaves it unused, in depth-first label order, and keeps the best valid
// assignment. Returns the minimum-size embedding (the lexicographically
// smallest witness over the label vectors) or nullopt when none exists.
// Guarded: throws GraphError when the target has more than `max_target`
// vertices, as the search space grows as (|V(source)|+1)^|V(target)|.
std::optional<Embedding> oracle_min_embedding(const Graph& target,
                                              const Graph& source,
                                              int max_target = 10);

// Enumerates every valid embedding of `source` into `target`, in the same
// label order as oracle_min_embedding, invoking `fn` for each. The same
// |V(target)| guard applies.
void for_each_valid_embedding(const Graph& target, const Graph& source,
                              const std::function<void(const Embedding&)>& fn,
                              int max_target = 10);

}  // namespace minorcast

#endif  // MINORCAST_VERIFY_HPP_
