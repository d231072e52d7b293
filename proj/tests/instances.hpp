// Copyright 2026 Minorcast Contributors
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

#include "minorcast/embedding.hpp"
#include "minorcast/graph.hpp"
#include "minorcast/topology.hpp"

namespace minorcast::testing {

// Logical graph used by the worked example throughout the test suite:
// a complete bipartite K_{4,4} on {0..3} x {4..7}, a diamond (K_4 minus
// the 10-11 edge) on {8..11}, and a joining edge 0-8.  12 vertices,
// 22 edges.  Its minimum embedding size into chimera L=4, M=1, N=2 is 13.
inline Graph illustrative_source() {
  Graph y(12);
  for (int a = 0; a < 4; ++a) {
    for (int b = 4; b < 8; ++b) y.add_edge(a, b);
  }
  y.add_edge(8, 9);
  y.add_edge(8, 10);
  y.add_edge(8, 11);
  y.add_edge(9, 10);
  y.add_edge(9, 11);
  y.add_edge(0, 8);
  return y;
}

inline Graph illustrative_target() {
  return gen_chimera(ChimeraSpec{4, 1, 2});
}

// Hand-checked witness of size 13.  The biclique sits in the first unit
// cell with sides swapped so that vertex 0 lands on a horizontal qubit,
// whose column coupler (4, 12) carries the joining edge.  The diamond
// occupies the second cell; its triangles force the one 2-chain {8, 12}.
inline Embedding illustrative_witness() {
  Embedding e;
  e.vertex_models[0] = {4};
  e.vertex_models[1] = {5};
  e.vertex_models[2] = {6};
  e.vertex_models[3] = {7};
  e.vertex_models[4] = {0};
  e.vertex_models[5] = {1};
  e.vertex_models[6] = {2};
  e.vertex_models[7] = {3};
  e.vertex_models[8] = {8, 12};
  e.vertex_models[9] = {13};
  e.vertex_models[10] = {9};
  e.vertex_models[11] = {10};
  return e;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
  }
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n > 2) g.add_edge(n - 1, 0);
  return g;
}

}  // namespace minorcast::testing
