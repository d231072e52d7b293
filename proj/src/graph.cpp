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

#include "minorcast/graph.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

namespace minorcast {

Graph::Graph(int num_vertices) {
  if (num_vertices < 0) throw GraphError("negative vertex count");
  adjacency_.resize(static_cast<size_t>(num_vertices));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= num_vertices())
    throw GraphError("vertex id " + std::to_string(v) + " out of range [0, " +
                     std::to_string(num_vertices()) + ")");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("self loop at vertex " + std::to_string(u));
  if (u > v) std::swap(u, v);
  auto e = std::make_pair(u, v);
  auto pos = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (pos != edges_.end() && *pos == e)
    throw GraphError("duplicate edge (" + std::to_string(u) + ", " +
                     std::to_string(v) + ")");
  edges_.insert(pos, e);
  auto& au = adjacency_[static_cast<size_t>(u)];
  au.insert(std::lower_bound(au.begin(), au.end(), v), v);
  auto& av = adjacency_[static_cast<size_t>(v)];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(),
                            std::make_pair(u, v));
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adjacency_[static_cast<size_t>(v)].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adjacency_[static_cast<size_t>(v)];
}

int Graph::edge_index(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u > v) std::swap(u, v);
  auto e = std::make_pair(u, v);
  auto pos = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (pos == edges_.end() || *pos != e)
    throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                     ") not in graph");
  return static_cast<int>(pos - edges_.begin());
}

std::optional<int> shortest_distance(const Graph& g, int u, int v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) return 0;
  std::vector<int> dist(static_cast<size_t>(g.num_vertices()), -1);
  dist[static_cast<size_t>(u)] = 0;
  std::deque<int> queue{u};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int next : g.neighbors(cur)) {
      if (dist[static_cast<size_t>(next)] >= 0) continue;
      dist[static_cast<size_t>(next)] = dist[static_cast<size_t>(cur)] + 1;
      if (next == v) return dist[static_cast<size_t>(next)];
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

namespace {

void path_dfs(const Graph& g, int cur, int target, int max_vertices,
              std::vector<int>& stack, std::vector<char>& on_stack,
              std::vector<Path>& out) {
  if (cur == target) {
    out.push_back(Path{stack});
    return;
  }
  if (static_cast<int>(stack.size()) == max_vertices) return;
  for (int next : g.neighbors(cur)) {
    if (on_stack[static_cast<size_t>(next)]) continue;
    stack.push_back(next);
    on_stack[static_cast<size_t>(next)] = 1;
    path_dfs(g, next, target, max_vertices, stack, on_stack, out);
    on_stack[static_cast<size_t>(next)] = 0;
    stack.pop_back();
  }
}

}  // namespace

std::vector<Path> enumerate_paths(const Graph& g, int u, int v,
                                  int max_vertices) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw GraphError("path endpoints must differ");
  if (max_vertices < 2)
    throw GraphError("path budget must allow at least two vertices");
  std::vector<Path> out;
  std::vector<int> stack{u};
  std::vector<char> on_stack(static_cast<size_t>(g.num_vertices()), 0);
  on_stack[static_cast<size_t>(u)] = 1;
  // Sorted adjacency makes the emission order lexicographic.
  path_dfs(g, u, v, max_vertices, stack, on_stack, out);
  return out;
}

bool is_connected_subset(const Graph& g, const std::vector<int>& subset) {
  if (subset.size() <= 1) {
    if (!subset.empty()) g.check_vertex(subset[0]);
    return true;
  }
  std::vector<char> in_subset(static_cast<size_t>(g.num_vertices()), 0);
  for (int v : subset) {
    g.check_vertex(v);
    if (in_subset[static_cast<size_t>(v)])
      throw GraphError("duplicate vertex " + std::to_string(v) + " in subset");
    in_subset[static_cast<size_t>(v)] = 1;
  }
  std::vector<char> seen(static_cast<size_t>(g.num_vertices()), 0);
  std::deque<int> queue{subset[0]};
  seen[static_cast<size_t>(subset[0])] = 1;
  size_t reached = 1;
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int next : g.neighbors(cur)) {
      if (!in_subset[static_cast<size_t>(next)] ||
          seen[static_cast<size_t>(next)])
        continue;
      seen[static_cast<size_t>(next)] = 1;
      ++reached;
      queue.push_back(next);
    }
  }
  return reached == subset.size();
}

Graph contract_edge(const Graph& g, std::pair<int, int> edge) {
  int u = std::min(edge.first, edge.second);
  int v = std::max(edge.first, edge.second);
  if (!g.has_edge(u, v))
    throw GraphError("cannot contract absent edge (" + std::to_string(u) +
                     ", " + std::to_string(v) + ")");
  // v collapses into u; ids above v shift down to stay dense.
  auto relabel = [u, v](int w) { return w == v ? u : (w > v ? w - 1 : w); };
  std::set<std::pair<int, int>> mapped;
  for (const auto& [a, b] : g.edges()) {
    int x = relabel(a);
    int y = relabel(b);
    if (x == y) continue;
    if (x > y) std::swap(x, y);
    mapped.insert({x, y});
  }
  Graph out(g.num_vertices() - 1);
  for (const auto& [a, b] : mapped) out.add_edge(a, b);
  return out;
}

namespace {

constexpr long kMaxVertexId = 100000000;

}  // namespace

Graph load_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  long header = -1;
  std::vector<std::pair<long, long>> pending;
  std::vector<int> pending_lines;
  long max_id = -1;
  int max_id_line = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (first == "p") {
      if (header >= 0) throw ParseError(line_no, "duplicate header");
      if (!pending.empty()) throw ParseError(line_no, "header after edges");
      long n;
      std::string extra;
      if (!(fields >> n) || n < 0 || n > kMaxVertexId || (fields >> extra))
        throw ParseError(line_no, "malformed header, expected 'p <count>'");
      header = n;
      continue;
    }
    long a, b;
    std::string extra;
    std::istringstream edge_fields(line);
    if (!(edge_fields >> a >> b) || (edge_fields >> extra))
      throw ParseError(line_no, "expected two vertex ids, got '" + line + "'");
    if (a < 0 || b < 0 || a > kMaxVertexId || b > kMaxVertexId)
      throw ParseError(line_no, "vertex id out of range");
    if (a == b) throw ParseError(line_no, "self loop at " + std::to_string(a));
    pending.push_back({a, b});
    pending_lines.push_back(line_no);
    if (std::max(a, b) > max_id) {
      max_id = std::max(a, b);
      max_id_line = line_no;
    }
  }
  long count = header >= 0 ? header : max_id + 1;
  if (header >= 0 && max_id >= header)
    throw ParseError(max_id_line, "vertex id " + std::to_string(max_id) +
                                      " exceeds declared count " +
                                      std::to_string(header));
  Graph g(static_cast<int>(std::max(count, 0L)));
  for (size_t e = 0; e < pending.size(); ++e) {
    try {
      g.add_edge(static_cast<int>(pending[e].first),
                 static_cast<int>(pending[e].second));
    } catch (const GraphError& err) {
      throw ParseError(pending_lines[e], err.what());
    }
  }
  return g;
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_graph(buffer.str());
}

std::string save_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.num_vertices() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

void save_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw GraphError("cannot write '" + path + "'");
  out << save_graph(g);
}

}  // namespace minorcast
