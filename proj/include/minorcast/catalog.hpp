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

#ifndef MINORCAST_CATALOG_HPP_
#define MINORCAST_CATALOG_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "minorcast/embedding.hpp"
#include "minorcast/graph.hpp"
#include "minorcast/model.hpp"

namespace minorcast {

// Maps between model variables and their embedding meaning. i ranges over
// target vertices (n of them), j over source vertices (m), ex over target
// edge indices, ey over source edge indices.
//
//   alpha[j*n + i]      a{i}_{j}   target vertex i sits in the model of j
//   gamma[j*P + p]      g{p}_{j}   path p runs inside the model of j
//   delta_par / _perp   dp/dq{ex}_{ey}   target edge ex witnesses source
//                       edge ey, aligned / swapped endpoint order
//   z_par / z_perp      zp/zq{ex}_{ey}   ey is assigned to ex (master)
//   w[j]                w{j}       model of j may hold several vertices
//
// The monolithic formulation fills gamma/delta, the master fills z/w.
struct VarCatalog {
  int n = 0;
  int m = 0;
  int num_target_edges = 0;
  int num_source_edges = 0;

  // Connecting paths enumerated for the in-reach non-adjacent target
  // pairs, concatenated; reach_pairs slices this table per pair.
  std::vector<Path> paths;
  struct PairEntry {
    int i1 = 0;
    int i2 = 0;
    int first_path = 0;
    int path_count = 0;
  };
  std::vector<PairEntry> reach_pairs;

  std::vector<VarId> alpha;
  std::vector<VarId> gamma;
  std::vector<VarId> delta_par;
  std::vector<VarId> delta_perp;
  std::vector<VarId> z_par;
  std::vector<VarId> z_perp;
  std::vector<VarId> w;

  VarId alpha_id(int i, int j) const {
    return alpha[static_cast<size_t>(j) * static_cast<size_t>(n) +
                 static_cast<size_t>(i)];
  }
  VarId gamma_id(int p, int j) const {
    return gamma[static_cast<size_t>(j) * paths.size() +
                 static_cast<size_t>(p)];
  }
  VarId delta_par_id(int ex, int ey) const {
    return delta_par[static_cast<size_t>(ey) *
                         static_cast<size_t>(num_target_edges) +
                     static_cast<size_t>(ex)];
  }
  VarId delta_perp_id(int ex, int ey) const {
    return delta_perp[static_cast<size_t>(ey) *
                          static_cast<size_t>(num_target_edges) +
                      static_cast<size_t>(ex)];
  }
  VarId z_par_id(int ex, int ey) const {
    return z_par[static_cast<size_t>(ey) *
                     static_cast<size_t>(num_target_edges) +
                 static_cast<size_t>(ex)];
  }
  VarId z_perp_id(int ex, int ey) const {
    return z_perp[static_cast<size_t>(ey) *
                      static_cast<size_t>(num_target_edges) +
                  static_cast<size_t>(ex)];
  }
  VarId w_id(int j) const { return w[static_cast<size_t>(j)]; }
};

// Reads the vertex models out of an assignment's alpha block. Every source
// vertex gets an entry (possibly empty); members come out sorted.
Embedding decode(const VarCatalog& catalog,
                 const std::vector<std::uint8_t>& assignment);

}  // namespace minorcast

#endif  // MINORCAST_CATALOG_HPP_
