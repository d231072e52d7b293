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

#include "minorcast/verify.hpp"

#include <algorithm>
#include <string>

namespace minorcast {

const char* to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::invalid_vertex:
      return "invalid_vertex";
    case Violation::Kind::missing_vertex:
      return "missing_vertex";
    case Violation::Kind::overlap:
      return "overlap";
    case Violation::Kind::disconnected_model:
      return "disconnected_model";
    case Violation::Kind::uncovered_edge:
      return "uncovered_edge";
  }
  return "unknown";
}

namespace {

// Model entries that are in range, deduplicated and sorted.
std::vector<int> valid_members(const std::vector<int>& model, int n) {
  std::vector<int> out;
  for (int x : model)
    if (x >= 0 && x < n) out.push_back(x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

VerifyReport verify_embedding(const Embedding& embedding, const Graph& target,
                              const Graph& source) {
  VerifyReport report;
  const int n = target.num_vertices();
  const int m = source.num_vertices();
  auto add = [&report](Violation v) { report.violations.push_back(std::move(v)); };

  for (const auto& [y, model] : embedding.vertex_models) {
    if (y < 0 || y >= m) {
      Violation v;
      v.kind = Violation::Kind::invalid_vertex;
      v.source = y;
      v.message = "model keyed by source vertex " + std::to_string(y) +
                  " which is out of range";
      add(std::move(v));
    }
  }

  for (int y = 0; y < m; ++y) {
    auto it = embedding.vertex_models.find(y);
    if (it == embedding.vertex_models.end() || it->second.empty()) {
      Violation v;
      v.kind = Violation::Kind::missing_vertex;
      v.source = y;
      v.message =
          "source vertex " + std::to_string(y) + " has no vertex model";
      add(std::move(v));
    }
  }

  std::vector<int> owner(static_cast<size_t>(n), -1);
  for (const auto& [y, model] : embedding.vertex_models) {
    if (y < 0 || y >= m) continue;
    for (int x : model) {
      if (x < 0 || x >= n) {
        Violation v;
        v.kind = Violation::Kind::invalid_vertex;
        v.source = y;
        v.target = x;
        v.message = "target vertex " + std::to_string(x) +
                    " out of range in model of source vertex " +
                    std::to_string(y);
        add(std::move(v));
        continue;
      }
      if (owner[static_cast<size_t>(x)] >= 0) {
        Violation v;
        v.kind = Violation::Kind::overlap;
        v.source = owner[static_cast<size_t>(x)];
        v.source_other = y;
        v.target = x;
        v.message = "target vertex " + std::to_string(x) +
                    " appears in models of source vertices " +
                    std::to_string(v.source) + " and " + std::to_string(y);
        add(std::move(v));
        continue;
      }
      owner[static_cast<size_t>(x)] = y;
    }
  }

  for (const auto& [y, model] : embedding.vertex_models) {
    if (y < 0 || y >= m) continue;
    std::vector<int> members = valid_members(model, n);
    if (members.empty()) continue;
    if (!is_connected_subset(target, members)) {
      Violation v;
      v.kind = Violation::Kind::disconnected_model;
      v.source = y;
      v.message = "model of source vertex " + std::to_string(y) +
                  " does not induce a connected subgraph";
      add(std::move(v));
    }
  }

  for (const auto& [a, b] : source.edges()) {
    auto ita = embedding.vertex_models.find(a);
    auto itb = embedding.vertex_models.find(b);
    if (ita == embedding.vertex_models.end() ||
        itb == embedding.vertex_models.end())
      continue;
    std::vector<int> ma = valid_members(ita->second, n);
    std::vector<int> mb = valid_members(itb->second, n);
    if (ma.empty() || mb.empty()) continue;
    bool covered = false;
    for (int u : ma) {
      for (int v : mb) {
        if (target.has_edge(u, v)) {
          covered = true;
          break;
        }
      }
      if (covered) break;
    }
    if (!covered) {
      Violation v;
      v.kind = Violation::Kind::uncovered_edge;
      v.source = a;
      v.source_other = b;
      v.message = "source edge (" + std::to_string(a) + ", " +
                  std::to_string(b) + ") has no witnessing target edge";
      add(std::move(v));
    }
  }

  return report;
}

namespace {

// Shared depth-first enumeration over label vectors. label[x] is -1 for
// unused or a source vertex id. Labels are tried in the order
// -1, 0, 1, ..., m-1 so the first minimum found is the lexicographically
// smallest witness (with -1 encoded below every source id).
class LabelSearch {
 public:
  LabelSearch(const Graph& target, const Graph& source, int max_target)
      : x_(target), y_(source), n_(target.num_vertices()),
        m_(source.num_vertices()) {
    if (n_ > max_target)
      throw GraphError("reference search limited to " +
                       std::to_string(max_target) +
                       " target vertices, got " + std::to_string(n_));
    label_.assign(static_cast<size_t>(n_), -1);
    fiber_size_.assign(static_cast<size_t>(m_), 0);
    empty_fibers_ = m_;
  }

  // Minimum-size search. Returns the best valid label vector found.
  std::optional<Embedding> minimize() {
    best_size_ = n_ + 1;
    best_label_.reset();
    enumerate_ = nullptr;
    descend(0);
    if (!best_label_) return std::nullopt;
    return to_embedding(*best_label_);
  }

  void enumerate(const std::function<void(const Embedding&)>& fn) {
    best_size_ = n_ + 1;  // never prunes: used can reach at most n_
    best_label_.reset();
    enumerate_ = &fn;
    descend(0);
  }

 private:
  void descend(int x) {
    if (empty_fibers_ > n_ - x) return;  // not enough vertices left
    if (!enumerate_ && used_ + empty_fibers_ >= best_size_) return;
    if (x == n_) {
      leaf();
      return;
    }
    label_[static_cast<size_t>(x)] = -1;
    descend(x + 1);
    for (int y = 0; y < m_; ++y) {
      label_[static_cast<size_t>(x)] = y;
      ++used_;
      if (fiber_size_[static_cast<size_t>(y)]++ == 0) --empty_fibers_;
      descend(x + 1);
      if (--fiber_size_[static_cast<size_t>(y)] == 0) ++empty_fibers_;
      --used_;
    }
    label_[static_cast<size_t>(x)] = -1;
  }

  void leaf() {
    if (empty_fibers_ > 0) return;
    // Every source edge needs a target edge between the two fibers.
    covered_.assign(y_.edges().size(), false);
    for (const auto& [u, v] : x_.edges()) {
      const int a = label_[static_cast<size_t>(u)];
      const int b = label_[static_cast<size_t>(v)];
      if (a < 0 || b < 0 || a == b) continue;
      if (y_.has_edge(a, b))
        covered_[static_cast<size_t>(y_.edge_index(a, b))] = true;
    }
    for (bool c : covered_)
      if (!c) return;
    for (int y = 0; y < m_; ++y) {
      std::vector<int> fiber;
      for (int x = 0; x < n_; ++x)
        if (label_[static_cast<size_t>(x)] == y) fiber.push_back(x);
      if (!is_connected_subset(x_, fiber)) return;
    }
    if (enumerate_) {
      (*enumerate_)(to_embedding(label_));
      return;
    }
    if (used_ < best_size_) {
      best_size_ = used_;
      best_label_ = label_;
    }
  }

  Embedding to_embedding(const std::vector<int>& label) const {
    Embedding emb;
    for (int y = 0; y < m_; ++y) emb.vertex_models[y] = {};
    for (int x = 0; x < n_; ++x)
      if (label[static_cast<size_t>(x)] >= 0)
        emb.vertex_models[label[static_cast<size_t>(x)]].push_back(x);
    return emb;
  }

  const Graph& x_;
  const Graph& y_;
  int n_;
  int m_;
  std::vector<int> label_;
  std::vector<int> fiber_size_;
  int used_ = 0;
  int empty_fibers_ = 0;
  int best_size_ = 0;
  std::optional<std::vector<int>> best_label_;
  std::vector<bool> covered_;
  const std::function<void(const Embedding&)>* enumerate_ = nullptr;
};

}  // namespace

std::optional<Embedding> oracle_min_embedding(const Graph& target,
                                              const Graph& source,
                                              int max_target) {
  if (source.num_vertices() > target.num_vertices()) return std::nullopt;
  if (source.num_vertices() == 0) return Embedding{};
  LabelSearch search(target, source, max_target);
  return search.minimize();
}

void for_each_valid_embedding(const Graph& target, const Graph& source,
                              const std::function<void(const Embedding&)>& fn,
                              int max_target) {
  if (source.num_vertices() > target.num_vertices()) return;
  if (source.num_vertices() == 0) {
    fn(Embedding{});
    return;
  }
  LabelSearch search(target, source, max_target);
  search.enumerate(fn);
}

}  // namespace minorcast
