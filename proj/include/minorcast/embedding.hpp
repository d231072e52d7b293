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

#ifndef MINORCAST_EMBEDDING_HPP_
#define MINORCAST_EMBEDDING_HPP_

#include <map>
#include <vector>

namespace minorcast {

// A candidate minor-embedding: each source vertex maps to its vertex
// model, a set of target vertices. Validity (disjointness, connectivity,
// edge coverage) is checked separately; this is plain data.
struct Embedding {
  // Keyed by source vertex; each model is kept sorted ascending.
  std::map<int, std::vector<int>> vertex_models;

  int total_size() const {
    int size = 0;
    for (const auto& [y, model] : vertex_models)
      size += static_cast<int>(model.size());
    return size;
  }
};

}  // namespace minorcast

#endif  // MINORCAST_EMBEDDING_HPP_
