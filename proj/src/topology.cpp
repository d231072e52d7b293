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

#include "minorcast/topology.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

namespace minorcast {

namespace {

// mt19937_64 output is pinned by the standard, and the scaling below avoids
// the implementation-defined std::uniform_* distributions, so every draw is
// reproducible across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  int below(int n) {
    assert(n > 0);
    const std::uint64_t span = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    for (;;) {
      std::uint64_t r = eng_();
      if (r < limit) return static_cast<int>(r % span);
    }
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (int i = static_cast<int>(items.size()) - 1; i > 0; --i)
      std::swap(items[static_cast<size_t>(i)],
                items[static_cast<size_t>(below(i + 1))]);
  }

 private:
  std::mt19937_64 eng_;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw GraphError(what);
}

}  // namespace

int chimera_vertex(const ChimeraSpec& spec, int row, int col, int partition,
                   int index) {
  assert(row >= 0 && row < spec.M && col >= 0 && col < spec.N);
  assert(partition == 0 || partition == 1);
  assert(index >= 0 && index < spec.L);
  return ((row * spec.N + col) * 2 + partition) * spec.L + index;
}

Graph gen_chimera(const ChimeraSpec& spec) {
  require(spec.L >= 1 && spec.M >= 1 && spec.N >= 1,
          "chimera parameters must be positive");
  Graph g(2 * spec.L * spec.M * spec.N);
  for (int r = 0; r < spec.M; ++r) {
    for (int c = 0; c < spec.N; ++c) {
      for (int i = 0; i < spec.L; ++i)
        for (int h = 0; h < spec.L; ++h)
          g.add_edge(chimera_vertex(spec, r, c, 0, i),
                     chimera_vertex(spec, r, c, 1, h));
      if (r + 1 < spec.M)
        for (int i = 0; i < spec.L; ++i)
          g.add_edge(chimera_vertex(spec, r, c, 0, i),
                     chimera_vertex(spec, r + 1, c, 0, i));
      if (c + 1 < spec.N)
        for (int i = 0; i < spec.L; ++i)
          g.add_edge(chimera_vertex(spec, r, c, 1, i),
                     chimera_vertex(spec, r, c + 1, 1, i));
    }
  }
  return g;
}

Graph gen_pegasus(const PegasusSpec& spec) {
  require(spec.L == 4, "pegasus layout needs L = 4 (odd pairs)");
  require(spec.M >= 1 && spec.N >= 1 && spec.O >= 1,
          "pegasus parameters must be positive");
  ChimeraSpec layer{spec.L, spec.M, spec.N};
  const int layer_size = 2 * spec.L * spec.M * spec.N;
  Graph g(layer_size * spec.O);
  for (int o = 0; o < spec.O; ++o) {
    const int base = o * layer_size;
    Graph sheet = gen_chimera(layer);
    for (const auto& [u, v] : sheet.edges()) g.add_edge(base + u, base + v);
    // Odd pairs: indices (0,1) and (2,3) within each partition of a cell.
    for (int r = 0; r < spec.M; ++r)
      for (int c = 0; c < spec.N; ++c)
        for (int partition = 0; partition < 2; ++partition)
          for (int t = 0; t < 2; ++t)
            g.add_edge(
                base + chimera_vertex(layer, r, c, partition, 2 * t),
                base + chimera_vertex(layer, r, c, partition, 2 * t + 1));
    // Stacked cells of consecutive layers couple position-for-position.
    if (o + 1 < spec.O)
      for (int v = 0; v < layer_size; ++v)
        g.add_edge(base + v, base + layer_size + v);
  }
  return g;
}

Graph gen_erdos_renyi(const ErdosRenyiSpec& spec) {
  require(spec.nu >= 1, "erdos-renyi vertex count must be positive");
  require(spec.p >= 0.0 && spec.p <= 1.0, "edge probability must be in [0,1]");
  Rng rng(spec.seed);
  Graph g(spec.nu);
  for (int i = 0; i < spec.nu; ++i)
    for (int j = i + 1; j < spec.nu; ++j)
      if (rng.unit() < spec.p) g.add_edge(i, j);
  return g;
}

namespace {

// One sampled block: a complete K_{4,4} cell plus the sampled biclique cell
// to its right, attached through the horizontal coupler positions. Vertex
// ownership is tracked in Chimera ids so the caller can emit a witness.
struct Block {
  std::vector<std::pair<int, int>> biclique_edges;  // in chimera ids
  std::vector<std::pair<int, int>> contracted;      // subset of the above
  std::vector<char> p0_alive;                       // biclique partition 0
  std::vector<char> p1_alive;                       // biclique partition 1
};

}  // namespace

StructuredGraph gen_structured(const StructuredSpec& spec) {
  require(spec.cells == 2 || spec.cells == 4,
          "structured generator supports cells = 2 or 4");
  require(spec.zeta >= 0 && spec.zeta <= 4,
          "zeta must lie in [0, 4]: a 4+4 biclique has at most 4 disjoint "
          "edges");
  require(spec.p_inter >= 0.0 && spec.p_inter <= 1.0 && spec.p_intra >= 0.0 &&
              spec.p_intra <= 1.0,
          "probabilities must lie in [0, 1]");

  const int num_blocks = spec.cells / 2;
  ChimeraSpec cspec{4, num_blocks, 2};
  Graph chimera = gen_chimera(cspec);
  Rng rng(spec.seed);

  constexpr int kMaxRetries = 10000;
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    std::vector<Block> blocks(static_cast<size_t>(num_blocks));
    bool resample = false;
    for (int b = 0; b < num_blocks && !resample; ++b) {
      Block& block = blocks[static_cast<size_t>(b)];
      block.p0_alive.assign(4, 0);
      block.p1_alive.assign(4, 0);
      for (int i = 0; i < 4; ++i)
        for (int h = 0; h < 4; ++h)
          if (rng.unit() < spec.p_inter) {
            block.biclique_edges.push_back(
                {chimera_vertex(cspec, b, 1, 0, i),
                 chimera_vertex(cspec, b, 1, 1, h)});
            block.p0_alive[static_cast<size_t>(i)] = 1;
            block.p1_alive[static_cast<size_t>(h)] = 1;
          }
      if (spec.zeta > 0) {
        auto pool = block.biclique_edges;
        rng.shuffle(pool);
        std::set<int> used;
        for (const auto& e : pool) {
          if (static_cast<int>(block.contracted.size()) == spec.zeta) break;
          if (used.count(e.first) || used.count(e.second)) continue;
          block.contracted.push_back(e);
          used.insert(e.first);
          used.insert(e.second);
        }
        if (static_cast<int>(block.contracted.size()) < spec.zeta)
          resample = true;
      }
    }
    if (resample) continue;

    // Node table: every chimera vertex we keep maps to one output node; a
    // contracted pair shares a node anchored at its smaller id.
    std::map<int, int> owner;  // chimera id -> anchor chimera id
    std::set<int> anchors;
    for (int b = 0; b < num_blocks; ++b) {
      const Block& block = blocks[static_cast<size_t>(b)];
      for (int i = 0; i < 8; ++i) {
        int id = chimera_vertex(cspec, b, 0, i / 4, i % 4);
        owner[id] = id;
        anchors.insert(id);
      }
      for (int i = 0; i < 4; ++i)
        if (block.p0_alive[static_cast<size_t>(i)]) {
          int id = chimera_vertex(cspec, b, 1, 0, i);
          owner[id] = id;
          anchors.insert(id);
        }
      for (int h = 0; h < 4; ++h)
        if (block.p1_alive[static_cast<size_t>(h)]) {
          int id = chimera_vertex(cspec, b, 1, 1, h);
          owner[id] = id;
          anchors.insert(id);
        }
      for (const auto& [a, c] : block.contracted) {
        int anchor = std::min(a, c);
        int merged = std::max(a, c);
        owner[merged] = anchor;
        anchors.erase(merged);
      }
    }
    std::map<int, int> node_of_anchor;
    int next = 0;
    for (int anchor : anchors) node_of_anchor[anchor] = next++;
    auto node_of = [&](int chimera_id) {
      return node_of_anchor.at(owner.at(chimera_id));
    };

    std::set<std::pair<int, int>> out_edges;
    auto put_edge = [&](int cu, int cv) {
      int a = node_of(cu);
      int b = node_of(cv);
      if (a == b) return;
      out_edges.insert({std::min(a, b), std::max(a, b)});
    };

    for (int b = 0; b < num_blocks; ++b) {
      for (int i = 0; i < 4; ++i)
        for (int h = 0; h < 4; ++h)
          put_edge(chimera_vertex(cspec, b, 0, 0, i),
                   chimera_vertex(cspec, b, 0, 1, h));
      for (const auto& [u, v] : blocks[static_cast<size_t>(b)].biclique_edges)
        put_edge(u, v);
    }

    bool forced = false;
    for (int b = 0; b < num_blocks; ++b) {
      const Block& block = blocks[static_cast<size_t>(b)];
      std::vector<int> available;
      std::vector<int> picked;
      for (int i = 0; i < 4; ++i) {
        if (!block.p1_alive[static_cast<size_t>(i)]) continue;
        available.push_back(i);
        if (rng.unit() < spec.p_intra) picked.push_back(i);
      }
      if (picked.empty() && !available.empty()) {
        picked.push_back(
            available[static_cast<size_t>(rng.below(
                static_cast<int>(available.size())))]);
        forced = true;
      }
      for (int i : picked)
        put_edge(chimera_vertex(cspec, b, 0, 1, i),
                 chimera_vertex(cspec, b, 1, 1, i));
    }

    if (num_blocks == 2) {
      // Vertical couplers of C_{4,2,2}: K44<->K44 on partition 0 of column
      // 0, biclique<->biclique on partition 0 of column 1 where both ends
      // survived. At least one inter-block edge is forced; the K44 side is
      // always available for that.
      std::vector<std::pair<int, int>> available;
      std::vector<std::pair<int, int>> picked;
      for (int i = 0; i < 4; ++i) {
        available.push_back({chimera_vertex(cspec, 0, 0, 0, i),
                             chimera_vertex(cspec, 1, 0, 0, i)});
      }
      for (int i = 0; i < 4; ++i) {
        if (blocks[0].p0_alive[static_cast<size_t>(i)] &&
            blocks[1].p0_alive[static_cast<size_t>(i)])
          available.push_back({chimera_vertex(cspec, 0, 1, 0, i),
                               chimera_vertex(cspec, 1, 1, 0, i)});
      }
      for (const auto& pos : available)
        if (rng.unit() < spec.p_intra) picked.push_back(pos);
      if (picked.empty()) {
        picked.push_back(available[static_cast<size_t>(
            rng.below(static_cast<int>(available.size())))]);
        forced = true;
      }
      for (const auto& [u, v] : picked) put_edge(u, v);
    }

    Graph out(static_cast<int>(anchors.size()));
    for (const auto& [u, v] : out_edges) out.add_edge(u, v);

    std::vector<int> everyone(static_cast<size_t>(out.num_vertices()));
    std::iota(everyone.begin(), everyone.end(), 0);
    if (!is_connected_subset(out, everyone)) continue;

    StructuredGraph result;
    result.graph = std::move(out);
    result.chimera = std::move(chimera);
    result.witness.resize(anchors.size());
    for (const auto& [chimera_id, anchor] : owner)
      result.witness[static_cast<size_t>(node_of_anchor.at(anchor))]
          .push_back(chimera_id);
    result.attachment_forced = forced;
    result.retries = attempt;
    return result;
  }
  throw GraphError("structured generator retry budget exhausted");
}

}  // namespace minorcast
