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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minorcast/embedding.hpp"
#include "minorcast/graph.hpp"
#include "minorcast/topology.hpp"
#include "minorcast/verify.hpp"

using namespace minorcast;

TEST_CASE("chimera vertex and edge counts match the closed forms") {
  for (int L = 1; L <= 4; ++L) {
    for (int M = 1; M <= 4; ++M) {
      for (int N = 1; N <= 4; ++N) {
        Graph g = gen_chimera(ChimeraSpec{L, M, N});
        CHECK(g.num_vertices() == 2 * L * M * N);
        CHECK(g.num_edges() ==
              L * L * M * N + L * (M * (N - 1) + (M - 1) * N));
      }
    }
  }
}

TEST_CASE("chimera cells are bicliques and couplers join like indices") {
  ChimeraSpec spec{4, 2, 3};
  Graph g = gen_chimera(spec);
  for (int i = 0; i < 4; ++i) {
    for (int h = 0; h < 4; ++h) {
      CHECK(g.has_edge(chimera_vertex(spec, 1, 2, 0, i),
                       chimera_vertex(spec, 1, 2, 1, h)));
    }
    CHECK(g.has_edge(chimera_vertex(spec, 0, 0, 0, i),
                     chimera_vertex(spec, 1, 0, 0, i)));
    CHECK(g.has_edge(chimera_vertex(spec, 0, 0, 1, i),
                     chimera_vertex(spec, 0, 1, 1, i)));
  }
  // No edge between vertical qubits of one cell, none between cells that
  // are not grid neighbors.
  CHECK(!g.has_edge(chimera_vertex(spec, 0, 0, 0, 0),
                    chimera_vertex(spec, 0, 0, 0, 1)));
  CHECK(!g.has_edge(chimera_vertex(spec, 0, 0, 1, 0),
                    chimera_vertex(spec, 0, 2, 1, 0)));
  CHECK_THROWS_AS(static_cast<void>(gen_chimera(ChimeraSpec{0, 1, 1})),
                  GraphError);
}

TEST_CASE("pegasus stack counts and layout") {
  for (int M = 1; M <= 2; ++M) {
    for (int N = 1; N <= 2; ++N) {
      for (int O = 1; O <= 3; ++O) {
        Graph g = gen_pegasus(PegasusSpec{4, M, N, O});
        CHECK(g.num_vertices() == 2 * 4 * M * N * O);
        const int sheet = 16 * M * N + 4 * (M * (N - 1) + (M - 1) * N);
        const int odd = 4 * M * N;
        CHECK(g.num_edges() == O * (sheet + odd) + (O - 1) * 8 * M * N);
      }
    }
  }
  Graph g = gen_pegasus(PegasusSpec{4, 1, 1, 3});
  CHECK(g.num_vertices() == 24);
  // Odd pairs within the first cell, and the stack coupler to layer 1.
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(2, 3));
  CHECK(g.has_edge(4, 5));
  CHECK(g.has_edge(0, 8));
  CHECK(!g.has_edge(0, 16));
  for (int v = 0; v < g.num_vertices(); ++v) CHECK(g.degree(v) >= 5);
  CHECK_THROWS_AS(static_cast<void>(gen_pegasus(PegasusSpec{3, 1, 1, 1})),
                  GraphError);
}

TEST_CASE("erdos-renyi extremes and determinism") {
  Graph empty = gen_erdos_renyi(ErdosRenyiSpec{9, 0.0, 5});
  CHECK(empty.num_vertices() == 9);
  CHECK(empty.num_edges() == 0);
  Graph full = gen_erdos_renyi(ErdosRenyiSpec{9, 1.0, 5});
  CHECK(full.num_edges() == 36);

  Graph a = gen_erdos_renyi(ErdosRenyiSpec{12, 0.4, 77});
  Graph b = gen_erdos_renyi(ErdosRenyiSpec{12, 0.4, 77});
  CHECK(a.edges() == b.edges());
  Graph c = gen_erdos_renyi(ErdosRenyiSpec{12, 0.4, 78});
  CHECK(a.edges() != c.edges());
}

TEST_CASE("saturated structured instance is the two-cell chimera") {
  StructuredGraph s = gen_structured(StructuredSpec{0, 1.0, 1.0, 2, 3});
  Graph reference = gen_chimera(ChimeraSpec{4, 1, 2});
  CHECK(s.graph.num_vertices() == reference.num_vertices());
  CHECK(s.graph.edges() == reference.edges());
  CHECK(s.retries == 0);
  CHECK(!s.attachment_forced);
  for (size_t v = 0; v < s.witness.size(); ++v) {
    REQUIRE(s.witness[v].size() == 1);
    CHECK(s.witness[v][0] == static_cast<int>(v));
  }
}

TEST_CASE("structured witness is a valid embedding of the output") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    StructuredSpec spec{static_cast<int>(seed % 3), 0.6, 0.5,
                        seed % 2 ? 2 : 4, seed};
    StructuredGraph s = gen_structured(spec);
    CHECK(s.graph.num_vertices() ==
          static_cast<int>(s.witness.size()));
    Embedding e;
    for (size_t v = 0; v < s.witness.size(); ++v)
      e.vertex_models[static_cast<int>(v)] = s.witness[v];
    VerifyReport report = verify_embedding(e, s.chimera, s.graph);
    for (const auto& violation : report.violations)
      MESSAGE(violation.message);
    CHECK(report.ok());
  }
}

TEST_CASE("structured generator is deterministic per seed") {
  StructuredSpec spec{2, 0.5, 0.5, 4, 42};
  StructuredGraph a = gen_structured(spec);
  StructuredGraph b = gen_structured(spec);
  CHECK(a.graph.edges() == b.graph.edges());
  CHECK(a.witness == b.witness);
  CHECK(a.retries == b.retries);
}

TEST_CASE("contracted nodes appear as two-vertex witness entries") {
  StructuredGraph s = gen_structured(StructuredSpec{2, 1.0, 1.0, 2, 9});
  int doubles = 0;
  for (const auto& members : s.witness) {
    CHECK(!members.empty());
    CHECK(members.size() <= 2);
    if (members.size() == 2) {
      ++doubles;
      CHECK(s.chimera.has_edge(members[0], members[1]));
    }
  }
  CHECK(doubles == 2);
  CHECK(s.graph.num_vertices() == 14);
}
