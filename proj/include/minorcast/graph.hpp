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

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace minorcast {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parse failure in an edge-list document; message carries the 1-based line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Simple undirected graph. Vertices are dense ids 0..n-1, no self loops,
// no parallel edges. Adjacency lists and the edge list are kept sorted so
// every traversal in the toolkit is deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices);

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  const std::vector<int>& neighbors(int v) const;

  // Edge list sorted lexicographically, each edge stored as (min, max).
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // Index of an edge within edges(); edges are addressed by this index in
  // the optimization models. Throws GraphError when absent.
  int edge_index(int u, int v) const;

  void check_vertex(int v) const;

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::pair<int, int>> edges_;
};

// Simple path, endpoints included, vertices in traversal order.
struct Path {
  std::vector<int> vertices;

  int size() const { return static_cast<int>(vertices.size()); }

  // Vertices strictly between the endpoints.
  std::vector<int> interior() const {
    if (vertices.size() <= 2) return {};
    return std::vector<int>(vertices.begin() + 1, vertices.end() - 1);
  }
};

// BFS distance in edge count; nullopt when v is unreachable from u.
std::optional<int> shortest_distance(const Graph& g, int u, int v);

// All simple paths from u to v with at most max_vertices vertices, in
// lexicographic order of their vertex sequences. Requires u != v and
// max_vertices >= 2.
std::vector<Path> enumerate_paths(const Graph& g, int u, int v,
                                  int max_vertices);

// True when the induced subgraph on `subset` is connected. Empty and
// singleton subsets count as connected. Duplicate ids are rejected.
bool is_connected_subset(const Graph& g, const std::vector<int>& subset);

// Contract edge (u, v): v is merged into min(u, v), ids above v shift down
// by one, parallel edges collapse, the loop at the merged vertex is dropped.
Graph contract_edge(const Graph& g, std::pair<int, int> edge);

// Edge-list text format: '#' starts a comment, blank lines are skipped, an
// optional header "p <num_vertices>" may precede the edges, every other
// line holds two vertex ids.
Graph load_graph(const std::string& text);
Graph load_graph_file(const std::string& path);

// Inverse of load_graph: "p <n>" header plus one sorted edge per line.
std::string save_graph(const Graph& g);
void save_graph_file(const Graph& g, const std::string& path);

}  // namespace minorcast
