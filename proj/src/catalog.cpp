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

#include "minorcast/catalog.hpp"

namespace minorcast {

Embedding decode(const VarCatalog& catalog,
                 const std::vector<std::uint8_t>& assignment) {
  Embedding emb;
  for (int j = 0; j < catalog.m; ++j) {
    auto& model = emb.vertex_models[j];
    for (int i = 0; i < catalog.n; ++i) {
      const VarId v = catalog.alpha_id(i, j);
      if (v < 0 || static_cast<size_t>(v) >= assignment.size())
        throw InternalConsistencyError("catalog alpha id out of range");
      if (assignment[static_cast<size_t>(v)]) model.push_back(i);
    }
  }
  return emb;
}

}  // namespace minorcast
