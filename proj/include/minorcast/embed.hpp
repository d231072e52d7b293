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

#ifndef MINORCAST_EMBED_HPP_
#define MINORCAST_EMBED_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "minorcast/embedding.hpp"
#include "minorcast/graph.hpp"
#include "minorcast/solver.hpp"

namespace minorcast {

enum class Objective { min_size, feasibility };

const char* to_string(Objective o);

// One embedding task: find (or disprove) an embedding of source into
// target. k caps the vertex-model size; 0 picks the method default (3 for
// the monolithic model, |V(target)| i.e. effectively unbounded for the
// decomposition).
struct EmbedProblem {
  Graph target;
  Graph source;
  int k = 0;
  Objective objective = Objective::min_size;
  SolveLimits limits;
};

// One rejected partial assignment from the decomposition: the candidate
// model `fiber` of source vertex `source` was disconnected, so any
// embedding placing all of `fiber` in that model must also use a boundary
// vertex. Recorded in solver-independent form so soundness can be checked
// against enumerated embeddings.
struct CutRecord {
  int source = -1;
  std::vector<int> fiber;     // sorted target vertices
  std::vector<int> boundary;  // sorted neighbors of fiber outside it
};

struct EmbedResult {
  SolveOutcome outcome;
  std::optional<Embedding> embedding;
  int k = 0;                         // fiber cap actually used
  bool trivially_infeasible = false; // rejected by the size comparison
  std::int64_t iterations = 0;       // master solves (decomposition)
  std::int64_t cuts = 0;
  std::vector<CutRecord> cut_records;
};

}  // namespace minorcast

#endif  // MINORCAST_EMBED_HPP_
