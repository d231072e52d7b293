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

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include "instances.hpp"
#include "minorcast/graph.hpp"
#include "minorcast/topology.hpp"

using namespace minorcast;
using minorcast::testing::cycle_graph;
using minorcast::testing::path_graph;

namespace {

// Reference path enumerator: plain DFS over all simple paths between a and
// b with at most max_vertices vertices, independent of the library's
// implementation.
void collect_paths(const Graph& g, int at, int b, int max_vertices,
                   std::vector<int>& stack, std::vector<char>& used,
                   std::vector<std::vector<int>>& out) {
  if (at == b) {
    out.push_back(stack);
    return;
  }
  if (static_cast<int>(stack.size()) == max_vertices) return;
  for (int next : g.neighbors(at)) {
    if (used[static_cast<size_t>(next)]) continue;
    used[static_cast<size_t>(next)] = 1;
    stack.push_back(next);
    collect_paths(g, next, b, max_vertices, stack, used, out);
    stack.pop_back();
    used[static_cast<size_t>(next)] = 0;
  }
}

std::vector<std::vector<int>> reference_paths(const Graph& g, int a, int b,
                                              int max_vertices) {
  std::vector<std::vector<int>> out;
  std::vector<int> stack = {a};
  std::vector<char> used(static_cast<size_t>(g.num_vertices()), 0);
  used[static_cast<size_t>(a)] = 1;
  collect_paths(g, a, b, max_vertices, stack, used, out);
  return out;
}

std::set<std::vector<int>> canonical(const std::vector<std::vector<int>>& ps) {
  std::set<std::vector<int>> out;
  for (const auto& p : ps) {
    std::vector<int> q = p;
    std::vector<int> r(q.rbegin(), q.rend());
    out.insert(std::min(q, r));
  }
  return out;
}

}  // namespace

TEST_CASE("edges are undirected, normalized and sorted") {
  Graph g(5);
  g.add_edge(3, 1);
  g.add_edge(0, 4);
  g.add_edge(2, 1);
  CHECK(g.num_vertices() == 5);
  CHECK(g.num_edges() == 3);
  CHECK(g.has_edge(1, 3));
  CHECK(g.has_edge(3, 1));
  CHECK(!g.has_edge(0, 1));
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 4}, {1, 2}, {1, 3}});
  CHECK(g.neighbors(1) == std::vector<int>{2, 3});
  CHECK(g.degree(1) == 2);
  CHECK_THROWS_AS(g.add_edge(1, 3), GraphError);  // duplicate, either order
  CHECK_THROWS_AS(g.add_edge(3, 1), GraphError);
  CHECK_THROWS_AS(g.add_edge(2, 2), GraphError);
  CHECK_THROWS_AS(g.add_edge(0, 5), GraphError);
  CHECK(g.num_edges() == 3);
}

TEST_CASE("edge_index addresses the sorted edge list") {
  Graph g = cycle_graph(4);
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.edges()[static_cast<size_t>(e)];
    CHECK(g.edge_index(a, b) == e);
    CHECK(g.edge_index(b, a) == e);
  }
  CHECK_THROWS_AS(g.edge_index(0, 2), GraphError);
}

TEST_CASE("distance and connected subsets") {
  Graph g = path_graph(6);
  CHECK(shortest_distance(g, 0, 5) == 5);
  CHECK(shortest_distance(g, 2, 2) == 0);
  Graph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  CHECK(!shortest_distance(two, 0, 3).has_value());
  CHECK(is_connected_subset(two, {0, 1}));
  CHECK(!is_connected_subset(two, {0, 3}));
  CHECK(is_connected_subset(two, {2}));
  CHECK(is_connected_subset(two, {}));
  CHECK_THROWS_AS(static_cast<void>(is_connected_subset(two, {0, 0})),
                  GraphError);
}

TEST_CASE("contracting a cycle edge gives the triangle") {
  Graph c4 = cycle_graph(4);
  Graph t = contract_edge(c4, {0, 1});
  CHECK(t.num_vertices() == 3);
  CHECK(t.num_edges() == 3);
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) CHECK(t.has_edge(a, b));
}

TEST_CASE("contraction drops the merged loop and parallel edges") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  Graph t = contract_edge(g, {0, 1});
  CHECK(t.num_vertices() == 3);
  CHECK(t.num_edges() == 2);
  CHECK_THROWS_AS(static_cast<void>(contract_edge(g, {0, 3})), GraphError);
}

TEST_CASE("file round trip preserves the graph") {
  Graph g = minorcast::testing::illustrative_source();
  const std::string path = "graph_roundtrip.tmp";
  save_graph_file(g, path);
  Graph back = load_graph_file(path);
  CHECK(back.num_vertices() == g.num_vertices());
  CHECK(back.edges() == g.edges());
  std::remove(path.c_str());
}

TEST_CASE("parser accepts comments and reports the offending line") {
  Graph g = load_graph("# demo\np 4\n\n0 1\n2 3\n");
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 2);
  CHECK_THROWS_WITH_AS(static_cast<void>(load_graph("p 3\n0 1\n0 one\n")),
                       doctest::Contains("line 3"), ParseError);
}

TEST_CASE("isolated vertices survive a round trip") {
  Graph g(7);
  g.add_edge(1, 2);
  Graph back = load_graph(save_graph(g));
  CHECK(back.num_vertices() == 7);
  CHECK(back.num_edges() == 1);
}

TEST_CASE("path enumeration matches a reference search") {
  // Same-partition pairs of a complete bipartite block have one connecting
  // path per opposite vertex at the three-vertex budget.
  Graph k44(8);
  for (int a = 0; a < 4; ++a)
    for (int b = 4; b < 8; ++b) k44.add_edge(a, b);
  auto paths = enumerate_paths(k44, 0, 1, 3);
  CHECK(paths.size() == 4);
  for (const auto& p : paths) {
    CHECK(p.size() == 3);
    CHECK(p.vertices.front() == 0);
    CHECK(p.vertices.back() == 1);
  }

  std::mt19937_64 rng(20260819);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const double p = 0.3 + 0.1 * static_cast<double>(rng() % 5);
    Graph g = gen_erdos_renyi(ErdosRenyiSpec{n, p, rng()});
    const int k = 2 + static_cast<int>(rng() % 3);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (g.has_edge(a, b)) continue;
        auto got = enumerate_paths(g, a, b, k);
        std::vector<std::vector<int>> raw;
        for (const auto& path : got) raw.push_back(path.vertices);
        auto want = reference_paths(g, a, b, k);
        CHECK(canonical(raw).size() == raw.size());
        CHECK(canonical(raw) == canonical(want));
      }
    }
  }
}
