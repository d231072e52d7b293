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
#include <vector>

#include "minorcast/graph.hpp"

namespace minorcast {

// Chimera C_{L,M,N}: an M x N grid of K_{L,L} cells. Partition 0 of a cell
// couples to partition 0 of the vertically adjacent cells, partition 1 to
// partition 1 of the horizontally adjacent ones. Canonical numbering is
// cell-major (row r, column c -> cell r*N + c), then partition, then index:
//   id = (cell * 2 + partition) * L + index.
struct ChimeraSpec {
  int L = 4;
  int M = 1;
  int N = 1;
};

// Pegasus-style stack P_{L,M,N,O}: O Chimera-style layers of M x N cells.
// Each cell additionally carries 4 odd-pair edges (same-partition index
// pairs (0,1) and (2,3), which needs L = 4), and corresponding vertices of
// vertically stacked cells in consecutive layers are coupled. Numbering is
// layer-major, then cell-major, then partition, then index.
struct PegasusSpec {
  int L = 4;
  int M = 1;
  int N = 1;
  int O = 3;
};

// Erdos-Renyi G(nu, p): every unordered pair drawn independently.
struct ErdosRenyiSpec {
  int nu = 1;
  double p = 0.5;
  std::uint64_t seed = 0;
};

// Random structured instance built to be a minor of a small Chimera:
// sample the cross edges of a 4+4 biclique with probability p_inter, drop
// vertices left without any edge, contract zeta pairwise-disjoint sampled
// edges, and attach the block to a complete K_{4,4} through the C_{4,1,2}
// coupler positions, each taken with probability p_intra (at least one
// forced). cells=4 assembles two such blocks on C_{4,2,2} and samples the
// vertical coupler positions between them at p_intra as well.
struct StructuredSpec {
  int zeta = 0;
  double p_inter = 0.5;
  double p_intra = 0.5;
  int cells = 2;
  std::uint64_t seed = 0;
};

// Structured output plus the witness placement that exhibits the graph as
// a minor of the Chimera it was carved from: witness[v] lists the Chimera
// vertices owned by output vertex v (two for a contracted node).
struct StructuredGraph {
  Graph graph;
  Graph chimera;
  std::vector<std::vector<int>> witness;
  bool attachment_forced = false;
  int retries = 0;
};

int chimera_vertex(const ChimeraSpec& spec, int row, int col, int partition,
                   int index);

Graph gen_chimera(const ChimeraSpec& spec);
Graph gen_pegasus(const PegasusSpec& spec);
Graph gen_erdos_renyi(const ErdosRenyiSpec& spec);
StructuredGraph gen_structured(const StructuredSpec& spec);

}  // namespace minorcast
